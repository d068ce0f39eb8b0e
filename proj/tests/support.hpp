#pragma once

// Test-side generators of valid algebras, representations and cochains.

#include <algorithm>
#include <array>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "super3lie/obstruction.hpp"
#include "super3lie/errors.hpp"

namespace testgen {

using namespace super3lie;

using Rng = std::mt19937_64;

inline Rational small_rational(Rng& rng, int range = 2, bool fractions = true) {
  std::uniform_int_distribution<int> num(-range, range);
  if (fractions) {
    std::uniform_int_distribution<int> pick(0, 5);
    if (pick(rng) == 0) {
      std::uniform_int_distribution<int> den(2, 3);
      return Rational(num(rng), den(rng));
    }
  }
  return Rational(num(rng));
}

/// Sparse random value: mostly zero.
inline Rational sparse_rational(Rng& rng, int zero_weight = 1) {
  std::uniform_int_distribution<int> pick(0, zero_weight);
  if (pick(rng) != 0) return Rational(0);
  return small_rational(rng);
}

inline SuperSpace make_space(const std::string& name, std::size_t d0, std::size_t d1, const std::string& prefix = "e",
                             const std::string& odd_prefix = "f") {
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < d0; ++i) basis.push_back({prefix + std::to_string(i + 1), Parity::Even});
  for (std::size_t i = 0; i < d1; ++i) basis.push_back({odd_prefix + std::to_string(i + 1), Parity::Odd});
  return SuperSpace(name, std::move(basis));
}

inline AlgebraPtr share(ThreeLieSuperalgebra alg) { return std::make_shared<const ThreeLieSuperalgebra>(std::move(alg)); }
inline RepresentationPtr share(Representation rep) { return std::make_shared<const Representation>(std::move(rep)); }

inline Vector basis_value(std::size_t n, std::size_t i, const Rational& c) {
  Vector v(n);
  v[i] = c;
  return v;
}

// ----------------------------------------------------------------- catalog

inline AlgebraPtr abelian(std::size_t d0, std::size_t d1) {
  return share(ThreeLieSuperalgebra::abelian("abelian", make_space("G", d0, d1)));
}

/// [e1, e2, e3] = e1, all even.
inline AlgebraPtr e123() {
  auto sp = make_space("G", 3, 0);
  return share(ThreeLieSuperalgebra::from_brackets("e123", sp, {{0, 1, 2, basis_value(3, 0, 1)}}));
}

/// G0 = <e>, G1 = <f>, [e, f, f] = e.
inline AlgebraPtr super_ef() {
  SuperSpace sp("G", {{"e", Parity::Even}, {"f", Parity::Odd}});
  return share(ThreeLieSuperalgebra::from_brackets("super_ef", sp, {{0, 1, 1, basis_value(2, 0, 1)}}));
}

/// The simple 4-dimensional 3-Lie algebra: [e_j, e_k, e_l] = (-1)^i e_i with
/// {i, j, k, l} = {1..4}, j<k<l.
inline AlgebraPtr simple_a4() {
  auto sp = make_space("G", 4, 0);
  std::vector<ThreeLieSuperalgebra::StatedBracket> b;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < 4; ++k)
      if (k != i) rest.push_back(k);
    b.push_back({rest[0], rest[1], rest[2], basis_value(4, i, Rational(sign_of(static_cast<int>(i) + 1)))});
  }
  return share(ThreeLieSuperalgebra::from_brackets("A4", sp, b));
}

/// The 3-Lie superalgebra induced from gl(1|1) by its supertrace t:
/// [x,y,z] = t(x)[y,z] - (-1)^{|x||y|} t(y)[x,z] + (-1)^{|z|(|x|+|y|)} t(z)[x,y].
/// Basis E11, E22 (even), E12, E21 (odd).
inline AlgebraPtr induced_gl11() {
  SuperSpace sp("G", {{"E11", Parity::Even}, {"E22", Parity::Even}, {"E12", Parity::Odd}, {"E21", Parity::Odd}});
  const std::size_t row[4] = {0, 1, 0, 1}, col[4] = {0, 1, 1, 0};
  auto unit = [&](std::size_t r, std::size_t c) -> std::size_t {
    for (std::size_t k = 0; k < 4; ++k)
      if (row[k] == r && col[k] == c) return k;
    return 4;
  };
  // Lie superbracket [E_a, E_b] = E_a E_b - (-1)^{|a||b|} E_b E_a
  auto lie = [&](std::size_t a, std::size_t b) {
    Vector v(4);
    if (col[a] == row[b]) v[unit(row[a], col[b])] += 1;
    if (col[b] == row[a]) v[unit(row[b], col[a])] -= Rational(sign_of(sp.parity_bit(a) * sp.parity_bit(b)));
    return v;
  };
  const Rational trace[4] = {1, -1, 0, 0};
  std::vector<Vector> s;
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y)
      for (std::size_t z = 0; z < 4; ++z) {
        int px = sp.parity_bit(x), py = sp.parity_bit(y), pz = sp.parity_bit(z);
        Vector v = trace[x] * lie(y, z);
        axpy(v, Rational(-sign_of(px * py)) * trace[y], lie(x, z));
        axpy(v, Rational(sign_of(pz * (px ^ py))) * trace[z], lie(x, y));
        s.push_back(v);
      }
  return share(ThreeLieSuperalgebra("gl11", sp, s));
}

/// Two-step nilpotent: every bracket lands in the span of the last `central`
/// basis vectors of each parity block, which are central. Any super-skew
/// choice then satisfies the fundamental identity.
inline AlgebraPtr random_nilpotent(Rng& rng, std::size_t d0, std::size_t d1, std::size_t z0, std::size_t z1,
                                   int zero_weight = 1) {
  auto sp = make_space("G", d0, d1);
  std::size_t n = d0 + d1;
  std::vector<char> central(n, 0);
  for (std::size_t i = 0; i < z0 && i < d0; ++i) central[d0 - 1 - i] = 1;
  for (std::size_t i = 0; i < z1 && i < d1; ++i) central[n - 1 - i] = 1;
  std::vector<ThreeLieSuperalgebra::StatedBracket> b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        if (central[i] || central[j] || central[k]) continue;
        if ((i == j && sp.parity(i) == Parity::Even) || (j == k && sp.parity(j) == Parity::Even)) continue;
        Parity p = sp.parity(i) + sp.parity(j) + sp.parity(k);
        Vector v(n);
        bool any = false;
        for (std::size_t m = 0; m < n; ++m) {
          if (!central[m] || sp.parity(m) != p) continue;
          v[m] = sparse_rational(rng, zero_weight);
          any = any || !v[m].is_zero();
        }
        if (any) b.push_back({i, j, k, v});
      }
  return share(ThreeLieSuperalgebra::from_brackets("nilpotent", sp, b));
}

/// L1 (+) L2 with brackets mixing the summands set to zero.
inline AlgebraPtr direct_sum(const ThreeLieSuperalgebra& a, const ThreeLieSuperalgebra& b) {
  std::vector<BasisElement> basis;
  for (const auto& e : a.space().basis()) basis.push_back({e.label + "a", e.parity});
  for (const auto& e : b.space().basis()) basis.push_back({e.label + "b", e.parity});
  SuperSpace sp("G", basis);
  std::size_t na = a.dim(), n = sp.dim();
  std::vector<Vector> s(n * n * n, Vector(n));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t m = 0; m < na; ++m) s[(i * n + j) * n + k][m] = a.structure(i, j, k)[m];
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t m = 0; m < b.dim(); ++m)
          s[((na + i) * n + na + j) * n + na + k][na + m] = b.structure(i, j, k)[m];
  return share(ThreeLieSuperalgebra("sum", sp, s));
}

/// A random invertible even matrix on a superspace (block diagonal by parity).
inline Matrix random_even_invertible(Rng& rng, const SuperSpace& sp) {
  std::size_t n = sp.dim();
  while (true) {
    Matrix g(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (sp.parity(r) != sp.parity(c)) continue;
        g.at(r, c) = r == c ? Rational(1) : sparse_rational(rng, 2);
      }
    if (inverse(g)) return g;
  }
}

/// The same algebra in the basis g e_i: c'(i,j,k) = g^{-1}[g e_i, g e_j, g e_k].
inline AlgebraPtr change_basis(const ThreeLieSuperalgebra& alg, const Matrix& g) {
  std::size_t n = alg.dim();
  Matrix ginv = *inverse(g);
  std::vector<Vector> s;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s.push_back(ginv.apply(alg.bracket(g.column(i), g.column(j), g.column(k))));
  return share(ThreeLieSuperalgebra(alg.name() + "'", alg.space(), s));
}

/// Phi'(X) = T^{-1} Phi(X) T for an even invertible T on the module.
inline Representation change_module_basis(const Representation& rep, const Matrix& t) {
  Matrix tinv = *inverse(t);
  std::vector<Matrix> phi;
  for (const Matrix& m : rep.phi()) phi.push_back(tinv * m * t);
  return Representation(rep.algebra_ptr(), rep.module(), phi);
}

inline Vector random_vector(Rng& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = small_rational(rng);
  return v;
}

inline Cochain random_cochain(Rng& rng, const RepresentationPtr& rep, int level, Parity parity, int zero_weight = 1) {
  CochainSpace space(rep, level, parity);
  Vector coords(space.dim());
  for (auto& x : coords) x = sparse_rational(rng, zero_weight);
  return space.cochain(coords);
}

inline GradedLinearMap random_map(Rng& rng, const SuperSpace& source, const SuperSpace& target, Parity degree,
                                  int zero_weight = 1) {
  Matrix m(target.dim(), source.dim());
  for (std::size_t r = 0; r < target.dim(); ++r)
    for (std::size_t c = 0; c < source.dim(); ++c) {
      if (target.parity(r) == source.parity(c) + degree) m.at(r, c) = sparse_rational(rng, zero_weight);
    }
  return GradedLinearMap(source, target, degree, m);
}

/// A pool of verified algebras with both parities, dimensions 4..6.
inline std::vector<AlgebraPtr> algebra_pool(Rng& rng, std::size_t count) {
  std::vector<AlgebraPtr> out;
  std::uniform_int_distribution<int> kind(0, 7);
  while (out.size() < count) {
    AlgebraPtr alg;
    switch (kind(rng)) {
      case 0:
        alg = direct_sum(*simple_a4(), ThreeLieSuperalgebra::abelian("a", make_space("A", 0, 1, "e", "g")));
        break;
      case 1:
        alg = random_nilpotent(rng, 2, 2, 1, 1);
        break;
      case 2:
        alg = random_nilpotent(rng, 3, 2, 1, 1);
        break;
      case 3:
        alg = direct_sum(*e123(), *random_nilpotent(rng, 1, 2, 1, 0));
        break;
      case 4:
        alg = random_nilpotent(rng, 2, 3, 1, 1);
        break;
      case 5:
        alg = direct_sum(*e123(), ThreeLieSuperalgebra::abelian("a", make_space("A", 0, 1, "e", "g")));
        break;
      case 6:
        alg = induced_gl11();
        break;
      default:
        alg = direct_sum(*induced_gl11(), ThreeLieSuperalgebra::abelian("a", make_space("A", 0, 1, "e", "g")));
        break;
    }
    out.push_back(change_basis(*alg, random_even_invertible(rng, alg->space())));
  }
  return out;
}

/// A valid representation of alg: adjoint, zero, or a sum of those, in a
/// randomly changed module basis.
inline RepresentationPtr random_representation(Rng& rng, const AlgebraPtr& alg) {
  std::uniform_int_distribution<int> kind(0, 3);
  Representation rep = Representation::adjoint(alg);
  switch (kind(rng)) {
    case 0:
      break;
    case 1:
      rep = direct_sum(rep, Representation::zero(alg, make_space("V", 1, 1, "v", "w")));
      break;
    case 2:
      rep = Representation::zero(alg, make_space("V", 1, 2, "v", "w"));
      break;
    default:
      if (alg->dim() <= 4) rep = direct_sum(rep, Representation::adjoint(alg));
      break;
  }
  return share(change_module_basis(rep, random_even_invertible(rng, rep.module())));
}


/// A level-2 cochain super-skew in all three arguments: random values on
/// sorted triples, completed over all permutations.
inline Cochain random_skew_cochain(Rng& rng, const RepresentationPtr& rep, Parity parity, int zero_weight = 1) {
  const ThreeLieSuperalgebra& q = rep->algebra();
  const SuperSpace& sp = q.space();
  std::size_t n = q.dim(), m = rep->module_dim();
  Cochain f(rep, 2, parity);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = b; c < n; ++c) {
        std::array<std::size_t, 3> idx{a, b, c};
        std::array<int, 3> par{sp.parity_bit(a), sp.parity_bit(b), sp.parity_bit(c)};
        if ((a == b && !par[0]) || (b == c && !par[1])) continue;
        Vector v(m);
        for (std::size_t o = 0; o < m; ++o) {
          if (rep->module().parity_bit(o) == (par[0] ^ par[1] ^ par[2] ^ bit(parity))) v[o] = sparse_rational(rng, zero_weight);
        }
        std::array<int, 3> perm{0, 1, 2};
        do {
          std::size_t x = idx[perm[0]], y = idx[perm[1]], z = idx[perm[2]];
          auto t = q.wedge().term(x, y);
          if (t.sign == 0) continue;
          // sign of the permutation, computed by bubble sort on positions
          std::array<int, 3> w = perm;
          int s = 1;
          for (int pass = 0; pass < 3; ++pass)
            for (int k = 0; k < 2; ++k)
              if (w[k] > w[k + 1]) {
                s *= (par[w[k]] & par[w[k + 1]]) ? 1 : -1;
                std::swap(w[k], w[k + 1]);
              }
          for (std::size_t o = 0; o < m; ++o) f.set(t.index * n + z, o, Rational(s * t.sign) * v[o]);
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
  return f;
}

/// A random element of the skew cocycles, i.e. an Omega defining an extension.
inline Cochain random_skew_cocycle(Rng& rng, const RepresentationPtr& rep, Parity parity, int zero_weight = 1) {
  CochainSpace space(rep, 2, parity);
  Vector c(space.dim());
  for (const Vector& b : skew_cocycle_space(rep, parity).basis()) axpy(c, sparse_rational(rng, zero_weight), b);
  return space.cochain(c);
}

/// Section s + i lambda for a random even lambda.
inline ExtensionData with_random_section(Rng& rng, const ExtensionData& ext) {
  auto rep = share(extract_phi(ext));
  return with_section(ext, shifted_section(ext, random_cochain(rng, rep, 1, Parity::Even)));
}

/// A random combination of a compatible-pair basis.
inline DerivationPair random_pair(Rng& rng, const CompatiblePairSpace& space) {
  DerivationPair out = zero_pair(*space.rep, space.degree);
  for (const auto& b : space.basis) {
    Rational c = sparse_rational(rng, 1);
    out.d_p = out.d_p + c * b.d_p;
    out.d_q = out.d_q + c * b.d_q;
  }
  return out;
}

}  // namespace testgen
