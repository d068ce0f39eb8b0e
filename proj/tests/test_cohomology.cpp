#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

using namespace testgen;

namespace {

std::vector<RepresentationPtr> rep_pool(Rng& rng, std::size_t count) {
  std::vector<RepresentationPtr> out;
  for (const auto& alg : algebra_pool(rng, count)) out.push_back(random_representation(rng, alg));
  return out;
}

// Value of a level-2 cochain at an ordered triple of basis indices.
Vector at(const Cochain& f, std::size_t x1, std::size_t x2, std::size_t x3) {
  const auto& alg = f.rep().algebra();
  auto t = alg.wedge().term(x1, x2);
  Vector out(f.rep().module_dim());
  if (t.sign == 0) return out;
  auto v = f.value(t.index * alg.dim() + x3);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = Rational(t.sign) * v[k];
  return out;
}

}  // namespace

TEST_CASE("the coboundary squares to zero") {
  Rng rng(41);
  auto reps = rep_pool(rng, 6);
  reps.push_back(share(Representation::adjoint(induced_gl11())));
  for (const auto& rep : reps) {
    for (int level = 1; level <= 2; ++level)
      for (Parity p : {Parity::Even, Parity::Odd}) {
        auto d1 = coboundary_operator(rep, level, p, 4);
        auto d2 = coboundary_operator(rep, level + 1, p, 4);
        CHECK(d2.matrix.multiply(d1.matrix).to_dense().is_zero());
      }
    Cochain f = random_cochain(rng, rep, 1, Parity::Odd);
    CHECK(coboundary(coboundary(f, 4), 4).is_zero());
  }
}

TEST_CASE("closed forms agree with the general coboundary") {
  Rng rng(42);
  for (const auto& rep : rep_pool(rng, 6)) {
    for (Parity p : {Parity::Even, Parity::Odd}) {
      Cochain f1 = random_cochain(rng, rep, 1, p);
      CHECK(coboundary_p1(f1) == coboundary(f1));
      Cochain f2 = random_cochain(rng, rep, 2, p);
      CHECK(coboundary_p2(f2) == coboundary(f2));
      CochainSpace src(rep, 1, p);
      auto op = coboundary_operator(rep, 1, p);
      Vector img = op.matrix.apply(src.coordinates(f1));
      CHECK(op.target.cochain(img) == coboundary(f1));
    }
  }
}

TEST_CASE("level-1 coboundary matches the oracle closed form") {
  Rng rng(43);
  for (const auto& rep : rep_pool(rng, 5)) {
    const auto& alg = rep->algebra();
    std::size_t n = alg.dim();
    for (Parity p : {Parity::Even, Parity::Odd}) {
      Cochain f = random_cochain(rng, rep, 1, p);
      Matrix fm = f.to_map().matrix();
      Cochain df = coboundary(f);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c) {
            oracle::Row expect = oracle::delta1(*rep, fm, bit(p), a, b, c);
            Vector got = at(df, a, b, c);
            for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k].to_mpq() == expect[k]);
          }
    }
  }
}

TEST_CASE("level-1 cocycles of the adjoint representation are the derivations") {
  for (auto alg : {e123(), simple_a4(), induced_gl11(), abelian(2, 1)}) {
    auto rep = share(Representation::adjoint(alg));
    for (Parity p : {Parity::Even, Parity::Odd}) {
      CHECK(cocycle_space(rep, 1, p).dim() == derivation_space(alg, p).dim());
      CohomologySpace h(rep, 1, p);
      CHECK(h.dim() == derivation_space(alg, p).dim());
      CHECK(coboundary_space(rep, 1, p).dim() == 0);
    }
  }
}

TEST_CASE("abelian algebra with a zero module has all cochains as classes") {
  auto alg = abelian(1, 2);
  auto rep = share(Representation::zero(alg, make_space("V", 1, 1, "v", "w")));
  for (int level = 1; level <= 3; ++level) {
    GradedCohomology h = graded_cohomology(rep, level, 4);
    CHECK(h.even.dim() == CochainSpace(rep, level, Parity::Even).dim());
    CHECK(h.odd.dim() == CochainSpace(rep, level, Parity::Odd).dim());
    CHECK(h.dim() == h.part(Parity::Even).dim() + h.part(Parity::Odd).dim());
  }
}

TEST_CASE("A4 with a zero module has no skew classes in degree zero") {
  auto rep = share(Representation::zero(simple_a4(), make_space("V", 1, 0, "v", "w")));
  CochainSpace space(rep, 2, Parity::Even);
  // every skew cocycle is a coboundary
  Subspace skew = skew_cocycle_space(rep, Parity::Even);
  CohomologySpace h(rep, 2, Parity::Even);
  for (const auto& b : skew.basis()) CHECK(h.is_trivial(space.cochain(b)));
}

TEST_CASE("classes, triviality and solving are consistent") {
  Rng rng(44);
  for (const auto& rep : rep_pool(rng, 6)) {
    for (Parity p : {Parity::Even, Parity::Odd}) {
      CohomologySpace h(rep, 2, p);
      CHECK(h.cocycles().contains(h.coboundaries()));
      CHECK(h.dim() == h.cocycles().dim() - h.coboundaries().dim());
      Cochain lam = random_cochain(rng, rep, 1, p);
      Cochain z = coboundary(lam);
      CHECK(is_cocycle(z));
      CHECK(h.is_trivial(z));
      CHECK(is_zero(h.class_of(z)));
      auto sol = h.solve_coboundary(z);
      REQUIRE(sol.has_value());
      CHECK(coboundary(*sol) == z);
      CHECK(h.lower_kernel_dim() == cocycle_space(rep, 1, p).dim());

      auto reps = h.representatives();
      REQUIRE(reps.size() == h.dim());
      for (std::size_t i = 0; i < reps.size(); ++i) {
        CHECK(is_cocycle(reps[i]));
        CHECK(h.class_of(reps[i]) == unit_vector(h.dim(), i));
        CHECK(h.class_of(reps[i] + z) == unit_vector(h.dim(), i));
        CHECK_FALSE(h.is_trivial(reps[i]));
        CHECK_FALSE(h.solve_coboundary(reps[i]).has_value());
      }
      if (!reps.empty()) {
        Cochain mix = Rational(2) * reps[0] - z;
        CHECK(h.class_of(mix) == Rational(2) * unit_vector(h.dim(), 0));
      }
    }
  }
}

TEST_CASE("non-cocycles are rejected") {
  auto rep = share(Representation::adjoint(simple_a4()));
  CohomologySpace h(rep, 2, Parity::Even);
  Cochain f(rep, 2, Parity::Even);
  f.set(0 * 4 + 2, 0, 1);  // Omega(e1, e2, e3) = e1
  CHECK_FALSE(is_cocycle(f));
  try {
    h.class_of(f);
    FAIL("expected NotACocycle");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotACocycle);
  }
  CHECK_THROWS_AS(h.is_trivial(f), Error);
}

TEST_CASE("level cap and arity") {
  auto rep = share(Representation::adjoint(e123()));
  try {
    coboundary(Cochain(rep, 4, Parity::Even));
    FAIL("expected LevelCapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LevelCapExceeded);
  }
  CHECK_THROWS_AS(Cochain(rep, 0, Parity::Even), Error);
  CHECK_THROWS_AS(Cochain(rep, 2, Parity::Even).to_map(), Error);
  CHECK_THROWS_AS(coboundary_p1(Cochain(rep, 2, Parity::Even)), Error);
}

TEST_CASE("cohomology dimensions do not depend on the basis") {
  Rng rng(45);
  for (auto alg : {simple_a4(), induced_gl11()}) {
    auto moved = change_basis(*alg, random_even_invertible(rng, alg->space()));
    for (int level = 1; level <= 2; ++level) {
      auto a = graded_cohomology(share(Representation::adjoint(alg)), level);
      auto b = graded_cohomology(share(Representation::adjoint(moved)), level);
      CHECK(a.even.dim() == b.even.dim());
      CHECK(a.odd.dim() == b.odd.dim());
    }
  }
}

TEST_CASE("cochain evaluation is multilinear") {
  Rng rng(46);
  auto rep = share(Representation::adjoint(induced_gl11()));
  Cochain f = random_cochain(rng, rep, 2, Parity::Odd);
  const auto& alg = rep->algebra();
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c) {
        Vector w = wedge_expand(alg.space(), alg.wedge(), unit_vector(4, a), unit_vector(4, b));
        CHECK(f.eval({w}, unit_vector(4, c)) == at(f, a, b, c));
      }
  Vector w1 = random_vector(rng, alg.wedge().size()), w2 = random_vector(rng, alg.wedge().size());
  Vector z = random_vector(rng, 4);
  CHECK(f.eval({w1 + w2}, z) == f.eval({w1}, z) + f.eval({w2}, z));
  CHECK_THROWS_AS(f.eval({w1, w2}, z), Error);
}
