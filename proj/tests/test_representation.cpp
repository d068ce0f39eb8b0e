#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

using namespace testgen;

namespace {

using oracle::Row;

Row phi_left(const Representation& rep, const Row& u, std::size_t y, const Row& v) {
  Row out(rep.module_dim());
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] == 0) continue;
    Row t = oracle::phi(rep, k, y, v);
    for (std::size_t o = 0; o < out.size(); ++o) out[o] += u[k] * t[o];
  }
  return out;
}

Row phi_right(const Representation& rep, std::size_t x, const Row& u, const Row& v) {
  Row out(rep.module_dim());
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] == 0) continue;
    Row t = oracle::phi(rep, x, k, v);
    for (std::size_t o = 0; o < out.size(); ++o) out[o] += u[k] * t[o];
  }
  return out;
}

// Axioms 3 and 4 on every basis 4-tuple and module basis vector.
std::pair<bool, bool> axioms_oracle(const Representation& rep) {
  const auto& alg = rep.algebra();
  const SuperSpace& s = alg.space();
  std::size_t n = alg.dim(), m = rep.module_dim();
  bool a3 = true, a4 = true;
  using oracle::basis_bracket;
  using oracle::phi;
  using oracle::sgn;
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      for (std::size_t x3 = 0; x3 < n; ++x3)
        for (std::size_t x4 = 0; x4 < n; ++x4)
          for (std::size_t o = 0; o < m; ++o) {
            int p1 = s.parity_bit(x1), p2 = s.parity_bit(x2), p3 = s.parity_bit(x3), p4 = s.parity_bit(x4);
            Row v = oracle::unit(m, o);
            Row l3 = phi(rep, x1, x2, phi(rep, x3, x4, v));
            Row r3a = phi_left(rep, basis_bracket(alg, x1, x2, x3), x4, v);
            Row r3b = phi_right(rep, x3, basis_bracket(alg, x1, x2, x4), v);
            Row r3c = phi(rep, x3, x4, phi(rep, x1, x2, v));
            Row l4 = phi_right(rep, x1, basis_bracket(alg, x2, x3, x4), v);
            Row r4a = r3c;
            Row r4b = phi(rep, x2, x4, phi(rep, x1, x3, v));
            Row r4c = phi(rep, x2, x3, phi(rep, x1, x4, v));
            for (std::size_t k = 0; k < m; ++k) {
              if (l3[k] != r3a[k] + sgn(p3 * (p1 + p2)) * r3b[k] + sgn((p1 + p2) * (p3 + p4)) * r3c[k]) a3 = false;
              if (l4[k] != sgn((p1 + p2) * (p3 + p4)) * r4a[k] - sgn(p1 * (p2 + p4) + p3 * p4) * r4b[k] +
                               sgn(p1 * (p2 + p3)) * r4c[k])
                a4 = false;
            }
          }
  return {a3, a4};
}

}  // namespace

TEST_CASE("adjoint and zero representations verify") {
  Rng rng(31);
  std::vector<AlgebraPtr> algs = {abelian(1, 2), e123(), simple_a4(), induced_gl11()};
  for (const auto& a : algebra_pool(rng, 5)) algs.push_back(a);
  for (const auto& alg : algs) {
    Representation ad = Representation::adjoint(alg);
    CHECK(verify_representation(ad).ok());
    CHECK(axioms_oracle(ad) == std::pair{true, true});
    for (std::size_t w = 0; w < alg->wedge().size(); ++w) CHECK(ad.phi(w) == alg->ad_matrix(w));
    Representation z = Representation::zero(alg, make_space("V", 2, 1, "v", "w"));
    CHECK(verify_representation(z).ok());
    CHECK(verify_representation(direct_sum(ad, z)).ok());
  }
}

TEST_CASE("abelian algebras have the zero adjoint representation") {
  auto alg = abelian(2, 2);
  Representation ad = Representation::adjoint(alg);
  for (const auto& m : ad.phi()) CHECK(m.is_zero());
}

TEST_CASE("random representations agree with the oracle") {
  Rng rng(32);
  auto pool = algebra_pool(rng, 6);
  for (const auto& alg : pool) {
    auto rep = random_representation(rng, alg);
    auto r = verify_representation(*rep);
    CHECK(r.ok());
    CHECK(axioms_oracle(*rep) == std::pair{r.axiom3, r.axiom4});
  }
}

TEST_CASE("a perturbed entry breaks axiom 3 with a witness") {
  Rng rng(33);
  std::vector<AlgebraPtr> algs = {simple_a4(), induced_gl11(), e123()};
  for (const auto& alg : algs) {
    Representation ad = Representation::adjoint(alg);
    std::vector<Matrix> phi = ad.phi();
    // an even wedge element with an even-degree entry keeps the degree axiom
    std::size_t w = 0;
    while (alg->wedge().parity_bit(w)) ++w;
    phi[w].at(0, 0) = phi[w].at(0, 0) + Rational(1);
    Representation bad(alg, ad.module(), phi);
    auto r = verify_representation(bad);
    CHECK(r.degree);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.axiom3);
    auto [a3, a4] = axioms_oracle(bad);
    CHECK(a3 == r.axiom3);
    CHECK(a4 == r.axiom4);
    REQUIRE(!r.violations.empty());
    CHECK(r.violations[0].lhs != r.violations[0].rhs);
    CHECK(r.violations.size() <= 2 * kMaxWitnesses);
  }
}

TEST_CASE("a wrong-degree entry fails the degree axiom") {
  auto alg = induced_gl11();
  Representation ad = Representation::adjoint(alg);
  std::vector<Matrix> phi = ad.phi();
  std::size_t w = 0;
  while (alg->wedge().parity_bit(w)) ++w;
  phi[w].at(0, 2) = 1;  // even wedge element mapping an odd vector to an even one
  CHECK_FALSE(verify_representation(Representation(alg, ad.module(), phi)).degree);
}

TEST_CASE("phi evaluation is super-skew and parity preserving") {
  Rng rng(34);
  auto alg = induced_gl11();
  auto rep = random_representation(rng, alg);
  const SuperSpace& s = alg->space();
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      Matrix a = rep->phi_pair(i, j), b = rep->phi_pair(j, i);
      CHECK(a == Rational(-sign_of(s.parity_bit(i) * s.parity_bit(j))) * b);
      for (std::size_t o = 0; o < rep->module_dim(); ++o) {
        Vector v = unit_vector(rep->module_dim(), o);
        Vector out = a.apply(v);
        if (is_zero(out)) continue;
        CHECK(parity_of(rep->module(), out) ==
              parity_from_bit(s.parity_bit(i) ^ s.parity_bit(j) ^ rep->module().parity_bit(o)));
      }
      Vector x = wedge_expand(s, alg->wedge(), unit_vector(4, i), unit_vector(4, j));
      Vector v = random_vector(rng, rep->module_dim());
      CHECK(phi_eval(*rep, x, v) == a.apply(v));
    }
  CHECK_THROWS_AS(phi_eval(*rep, Vector(2), Vector(rep->module_dim())), Error);
}

TEST_CASE("shape errors") {
  auto alg = e123();
  try {
    Representation bad(alg, make_space("V", 1, 0), std::vector<Matrix>(2, Matrix(1, 1)));
    FAIL("expected SpaceMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SpaceMismatch);
  }
}
