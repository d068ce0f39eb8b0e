#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

using namespace testgen;

namespace {

using oracle::Row;

// e1, e2 even, f1 odd, zero module v, Omega(e1, f1, f1) = v.
std::pair<RepresentationPtr, Cochain> heisenberg_data() {
  auto q = abelian(2, 1);
  auto rep = share(Representation::zero(q, make_space("V", 1, 0, "v", "w")));
  Cochain om(rep, 2, Parity::Even);
  auto t = q->wedge().term(0, 2);
  // Omega(e1, f1, f1) = v, so Omega(f1, e1, f1) = -v and Omega(f1, f1, e1) = v
  om.set(t.index * 3 + 2, 0, Rational(t.sign));
  om.set(q->wedge().term(2, 2).index * 3 + 0, 0, 1);
  return {rep, om};
}

// The bracket of L from (Q, Phi, Omega) computed on the oracle side.
Row expected_bracket(const ExtensionData& ext, const Representation& rep, const Cochain& om, std::size_t a,
                     std::size_t b, std::size_t c) {
  const auto& q = rep.algebra();
  const SuperSpace& s = q.space();
  std::size_t n = q.dim(), m = rep.module_dim(), total = ext.total->dim();
  auto split = [&](std::size_t l) -> std::pair<bool, std::size_t> {
    for (std::size_t j = 0; j < n; ++j)
      if (ext.quotient_indices[j] == l) return {true, j};
    for (std::size_t u = 0; u < m; ++u)
      if (ext.sub_indices[u] == l) return {false, u};
    throw std::logic_error("index");
  };
  auto [qa, ia] = split(a);
  auto [qb, ib] = split(b);
  auto [qc, ic] = split(c);
  Row out(total);
  auto add_p = [&](const Row& v, int sign) {
    for (std::size_t u = 0; u < m; ++u) out[ext.sub_indices[u]] += sign * v[u];
  };
  if (qa && qb && qc) {
    Row br = oracle::basis_bracket(q, ia, ib, ic);
    for (std::size_t j = 0; j < n; ++j) out[ext.quotient_indices[j]] += br[j];
    auto t = q.wedge().term(ia, ib);
    if (t.sign != 0) {
      auto v = om.value(t.index * n + ic);
      Row r(m);
      for (std::size_t u = 0; u < m; ++u) r[u] = v[u].to_mpq();
      add_p(r, t.sign);
    }
  } else if (qa && qb && !qc) {
    add_p(oracle::phi(rep, ia, ib, oracle::unit(m, ic)), 1);
  } else if (qa && !qb && qc) {
    int pz = s.parity_bit(ic), px = s.parity_bit(ia), pv = rep.module().parity_bit(ib);
    add_p(oracle::phi(rep, ic, ia, oracle::unit(m, ib)), oracle::sgn(pz * (px + pv)));
  } else if (!qa && qb && qc) {
    int pu = rep.module().parity_bit(ia), py = s.parity_bit(ib), pz = s.parity_bit(ic);
    add_p(oracle::phi(rep, ib, ic, oracle::unit(m, ia)), oracle::sgn(pu * (py + pz)));
  }
  return out;
}

void check_bracket(const ExtensionData& ext, const Representation& rep, const Cochain& om) {
  std::size_t total = ext.total->dim();
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b)
      for (std::size_t c = 0; c < total; ++c) {
        Row e = expected_bracket(ext, rep, om, a, b, c);
        const Vector& got = ext.total->structure(a, b, c);
        for (std::size_t k = 0; k < total; ++k) CHECK(got[k].to_mpq() == e[k]);
      }
}

std::vector<RepresentationPtr> small_reps(Rng& rng, std::size_t count) {
  std::vector<RepresentationPtr> out;
  while (out.size() < count) {
    for (const auto& alg : algebra_pool(rng, 1)) {
      auto rep = random_representation(rng, alg);
      if (alg->dim() + rep->module_dim() <= 9) out.push_back(rep);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("built extensions follow the bracket formula and are 3-Lie superalgebras") {
  Rng rng(51);
  for (const auto& rep : small_reps(rng, 5)) {
    Cochain om = random_skew_cocycle(rng, rep, Parity::Even);
    ExtensionData ext = build_extension(rep, om);
    CHECK(ext.total->dim() == rep->algebra().dim() + rep->module_dim());
    check_bracket(ext, *rep, om);
    CHECK(verify_algebra(*ext.total, 64).ok());
    CHECK(*ext.quotient == rep->algebra());
  }
  auto [rep, om] = heisenberg_data();
  ExtensionData ext = build_extension(rep, om);
  check_bracket(ext, *rep, om);
  CHECK(oracle::fundamental_identity(*ext.total));
}

TEST_CASE("direct product and semidirect extensions") {
  auto q = simple_a4();
  auto zero = share(Representation::zero(q, make_space("V", 1, 1, "v", "w")));
  ExtensionData prod = build_extension(zero, Cochain(zero, 2, Parity::Even));
  CHECK(verify_algebra(*prod.total).ok());
  Representation phi = extract_phi(prod);
  for (const auto& m : phi.phi()) CHECK(m.is_zero());
  CHECK(extract_omega(prod, zero).is_zero());

  auto ad = share(Representation::adjoint(q));
  ExtensionData semi = build_extension(ad, Cochain(ad, 2, Parity::Even));
  CHECK(oracle::fundamental_identity(*semi.total));
  CHECK(extract_phi(semi) == *ad);
}

TEST_CASE("a skew non-cocycle gives a bracket failing the fundamental identity") {
  Rng rng(52);
  auto rep = share(Representation::adjoint(simple_a4()));
  int found = 0;
  for (int trial = 0; trial < 10 && found < 3; ++trial) {
    Cochain om = random_skew_cochain(rng, rep, Parity::Even);
    REQUIRE(is_totally_skew(om));
    if (is_cocycle(om)) continue;
    ++found;
    try {
      build_extension(rep, om);
      FAIL("expected NotACocycle");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotACocycle);
    }
    ExtensionData ext = build_extension(rep, om, {.require_cocycle = false});
    CHECK_FALSE(verify_algebra(*ext.total).fundamental_identity);
    CHECK_FALSE(oracle::fundamental_identity(*ext.total));
  }
  CHECK(found > 0);
}

TEST_CASE("non-skew omega is rejected") {
  auto rep = share(Representation::adjoint(simple_a4()));
  Cochain om(rep, 2, Parity::Even);
  om.set(0 * 4 + 2, 0, 1);  // Omega(e1, e2, e3) set without its permutations
  CHECK_FALSE(is_totally_skew(om));
  try {
    build_extension(rep, om, {.require_cocycle = false});
    FAIL("expected SkewInconsistent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SkewInconsistent);
  }
  CHECK_THROWS_AS(is_totally_skew(Cochain(rep, 1, Parity::Even)), Error);
  Subspace skew = skew_cocycle_space(rep, Parity::Even);
  CochainSpace space(rep, 2, Parity::Even);
  for (const auto& b : skew.basis()) {
    CHECK(is_totally_skew(space.cochain(b)));
    CHECK(is_cocycle(space.cochain(b)));
  }
}

TEST_CASE("extraction inverts the construction") {
  Rng rng(53);
  for (const auto& rep : small_reps(rng, 6)) {
    Cochain om = random_skew_cocycle(rng, rep, Parity::Even);
    ExtensionData ext = build_extension(rep, om);
    Representation phi = extract_phi(ext);
    CHECK(phi == *rep);
    CHECK(verify_representation(phi).ok());
    auto shared = share(phi);
    Cochain back = extract_omega(ext, shared);
    CHECK(back.coefficients() == om.coefficients());
    CHECK(is_cocycle(back));
  }
}

TEST_CASE("two sections: equal Phi and omegas differing by the coboundary of their difference") {
  Rng rng(54);
  for (const auto& rep : small_reps(rng, 6)) {
    ExtensionData ext = build_extension(rep, random_skew_cocycle(rng, rep, Parity::Even));
    ExtensionData other = with_random_section(rng, ext);
    Representation phi1 = extract_phi(ext, other.section);
    Representation phi2 = extract_phi(other);
    CHECK(phi1 == phi2);
    auto shared = share(phi1);
    Cochain om1 = extract_omega(ext, shared), om2 = extract_omega(other, shared);
    CHECK(is_cocycle(om2));
    Cochain lam = section_difference(ext, ext.section, other.section, shared);
    CHECK(om1 - om2 == coboundary(lam));
  }
}

TEST_CASE("structural validation of hand-made extensions") {
  auto [rep, om] = heisenberg_data();
  ExtensionData built = build_extension(rep, om);
  std::size_t v = built.sub_indices[0];
  ExtensionData ext = make_extension(built.total, {v});
  CHECK(ext.quotient->dim() == 3);
  CHECK(ext.proj.matrix() * ext.incl.matrix() == Matrix(3, 1));
  CHECK(ext.proj.matrix() * ext.section.matrix() == Matrix::identity(3));
  CHECK(ext.sub_coordinates(unit_vector(4, v)) == Vector{1});
  CHECK_THROWS_AS(ext.sub_coordinates(unit_vector(4, ext.quotient_indices[0])), Error);
  CHECK(ext.retraction(unit_vector(4, v)) == Vector{1});

  // f1 does not span an ideal with [P, P, L] = 0: [f1, f1, e1] = -v is not in P
  try {
    make_extension(built.total, {built.quotient_indices[2]});
    FAIL("expected InvalidExtension");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidExtension);
  }
  // an odd or non-section matrix
  Matrix bad = ext.section.matrix();
  bad.at(ext.quotient_indices[0], 0) = 2;
  CHECK_THROWS_AS(make_extension(built.total, {v}, bad), Error);
  // [P, P, L] != 0 on A4 with P spanned by e1, e2
  CHECK_THROWS_AS(make_extension(simple_a4(), {0, 1}), Error);
}

TEST_CASE("splitting") {
  Rng rng(55);
  // Omega = delta(xi0) splits and s' is a homomorphism
  for (const auto& rep : small_reps(rng, 5)) {
    Cochain xi0 = random_cochain(rng, rep, 1, Parity::Even);
    Cochain om = coboundary(xi0);
    REQUIRE(is_totally_skew(om));
    ExtensionData ext = build_extension(rep, om);
    auto sp = is_split(ext);
    REQUIRE(sp.has_value());
    CHECK(coboundary(sp->xi) == om);
    CHECK(sp->homomorphism.ok);
    CHECK(is_homomorphic_section(ext, sp->section).ok);
    auto impl = h1_zero_implies_split(ext);
    CHECK(impl.split);
    CHECK(impl.holds);
  }
  // zero omega splits with s' = s
  auto zero = share(Representation::zero(e123(), make_space("V", 1, 0, "v", "w")));
  ExtensionData prod = build_extension(zero, Cochain(zero, 2, Parity::Even));
  auto sp = is_split(prod);
  REQUIRE(sp.has_value());
  CHECK(sp->xi.is_zero());
  CHECK(sp->section.matrix() == prod.section.matrix());

  // A4 with a line: H = 0, so every extension splits
  auto line = share(Representation::zero(simple_a4(), make_space("V", 1, 0, "v", "w")));
  for (int trial = 0; trial < 3; ++trial) {
    ExtensionData ext = build_extension(line, random_skew_cocycle(rng, line, Parity::Even));
    auto impl = h1_zero_implies_split(ext);
    CHECK(impl.cohomology_dim == 0);
    CHECK(impl.applicable);
    CHECK(impl.split);
    CHECK(impl.holds);
  }

  // the Heisenberg-type extension has a nontrivial class
  auto [rep, om] = heisenberg_data();
  ExtensionData heis = build_extension(rep, om);
  CHECK_FALSE(is_split(heis).has_value());
  auto impl = h1_zero_implies_split(heis);
  CHECK(impl.cohomology_dim > 0);
  CHECK_FALSE(impl.applicable);
  CHECK_FALSE(impl.split);
  CHECK(impl.holds);
  // and its canonical section is not a homomorphism
  auto hc = is_homomorphic_section(heis, heis.section);
  CHECK_FALSE(hc.ok);
  CHECK(hc.witness.has_value());
}

TEST_CASE("sections are validated") {
  auto [rep, om] = heisenberg_data();
  ExtensionData ext = build_extension(rep, om);
  Matrix odd = ext.section.matrix();
  odd.at(ext.quotient_indices[0], 2) = 1;  // f1 -> f1 + e1 is not even
  CHECK_THROWS(with_section(ext, GradedLinearMap(ext.quotient->space(), ext.total->space(), Parity::Even, odd)));
}
