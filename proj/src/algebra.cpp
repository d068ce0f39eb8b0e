#include "super3lie/algebra.hpp"

#include <array>
#include <map>

#include "super3lie/errors.hpp"

namespace super3lie {

SparseVector to_sparse(std::span<const Rational> v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.push_back({i, v[i]});
  }
  return out;
}

namespace {

void add_scaled(Vector& y, const Rational& s, const SparseVector& x) {
  if (s.is_zero()) return;
  for (const auto& t : x) y[t.index] += s * t.value;
}

constexpr std::array<std::array<int, 3>, 6> kPermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

}  // namespace

int permutation_sign(const std::array<int, 3>& parity, std::array<int, 3> perm) {
  int sign = 1;
  for (int pass = 0; pass < 3; ++pass) {
    for (int k = 0; k + 1 < 3; ++k) {
      if (perm[k] > perm[k + 1]) {
        sign *= -sign_of(parity[perm[k]] * parity[perm[k + 1]]);
        std::swap(perm[k], perm[k + 1]);
      }
    }
  }
  return sign;
}

ThreeLieSuperalgebra::ThreeLieSuperalgebra(std::string name, SuperSpace space, std::vector<Vector> structure)
    : name_(std::move(name)), space_(std::move(space)), structure_(std::move(structure)) {
  std::size_t n = space_.dim();
  if (structure_.size() != n * n * n) throw Error(ErrorKind::SpaceMismatch, "structure tensor has wrong size");
  for (const Vector& v : structure_) {
    if (v.size() != n) throw Error(ErrorKind::SpaceMismatch, "structure tensor entry has wrong length");
  }
  build_tables();
}

ThreeLieSuperalgebra ThreeLieSuperalgebra::abelian(std::string name, SuperSpace space) {
  std::size_t n = space.dim();
  return ThreeLieSuperalgebra(std::move(name), std::move(space), std::vector<Vector>(n * n * n, Vector(n)));
}

ThreeLieSuperalgebra ThreeLieSuperalgebra::from_brackets(std::string name, SuperSpace space,
                                                         const std::vector<StatedBracket>& brackets) {
  std::size_t n = space.dim();
  std::vector<Vector> structure(n * n * n, Vector(n));
  std::vector<std::size_t> origin(n * n * n, 0);  // 1 + index of the stated bracket
  auto label_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    return "(" + space.label(a) + ", " + space.label(b) + ", " + space.label(c) + ")";
  };
  for (std::size_t k = 0; k < brackets.size(); ++k) {
    const auto& stated = brackets[k];
    std::array<std::size_t, 3> idx = {stated.a, stated.b, stated.c};
    for (std::size_t i : idx) {
      if (i >= n) throw Error(ErrorKind::LabelUnknown, "bracket index out of range");
    }
    if (stated.value.size() != n) throw Error(ErrorKind::SpaceMismatch, "bracket value has wrong length");
    std::array<int, 3> parity = {space.parity_bit(idx[0]), space.parity_bit(idx[1]), space.parity_bit(idx[2])};
    for (const auto& perm : kPermutations) {
      std::size_t t = (idx[perm[0]] * n + idx[perm[1]]) * n + idx[perm[2]];
      Vector value = Rational(permutation_sign(parity, perm)) * stated.value;
      if (origin[t]) {
        if (structure[t] != value) {
          std::string at = label_triple(idx[perm[0]], idx[perm[1]], idx[perm[2]]);
          const auto& first = brackets[origin[t] - 1];
          if (origin[t] == k + 1) {
            throw Error(ErrorKind::SkewInconsistent,
                        "bracket " + label_triple(idx[0], idx[1], idx[2]) + " must vanish by super-skewness");
          }
          throw Error(ErrorKind::SkewInconsistent, "brackets " + label_triple(first.a, first.b, first.c) + " and " +
                                                       label_triple(idx[0], idx[1], idx[2]) +
                                                       " force different values on " + at);
        }
      } else {
        structure[t] = std::move(value);
        origin[t] = k + 1;
      }
    }
  }
  return ThreeLieSuperalgebra(std::move(name), std::move(space), std::move(structure));
}

void ThreeLieSuperalgebra::build_tables() {
  auto tables = std::make_shared<Tables>();
  tables->wedge = WedgeBasis(space_);
  std::size_t n = dim();
  std::size_t W = tables->wedge.size();
  tables->ad.reserve(W);
  tables->ad_sparse.resize(W * n);
  for (std::size_t w = 0; w < W; ++w) {
    auto [i, j] = tables->wedge.pair(w);
    Matrix m(n, n);
    for (std::size_t z = 0; z < n; ++z) {
      const Vector& col = structure(i, j, z);
      for (std::size_t r = 0; r < n; ++r) m.at(r, z) = col[r];
      tables->ad_sparse[w * n + z] = to_sparse(col);
    }
    tables->ad.push_back(std::move(m));
  }
  tables->leibniz.resize(W * W);
  for (std::size_t v = 0; v < W; ++v) {
    int xv = tables->wedge.parity_bit(v);
    for (std::size_t w = 0; w < W; ++w) {
      auto [c, d] = tables->wedge.pair(w);
      Vector out(W);
      // [X, e_c] ^ e_d
      for (const auto& t : tables->ad_sparse[v * n + c]) {
        auto term = tables->wedge.term(t.index, d);
        if (term.sign != 0) out[term.index] += Rational(term.sign) * t.value;
      }
      // (-1)^{|c||X|} e_c ^ [X, e_d]
      int s = sign_of(space_.parity_bit(c) * xv);
      for (const auto& t : tables->ad_sparse[v * n + d]) {
        auto term = tables->wedge.term(c, t.index);
        if (term.sign != 0) out[term.index] += Rational(s * term.sign) * t.value;
      }
      tables->leibniz[v * W + w] = to_sparse(out);
    }
  }
  tables_ = std::move(tables);
}

Vector ThreeLieSuperalgebra::bracket(std::span<const Rational> x, std::span<const Rational> y,
                                     std::span<const Rational> z) const {
  std::size_t n = dim();
  if (x.size() != n || y.size() != n || z.size() != n) {
    throw Error(ErrorKind::SpaceMismatch, "bracket arguments do not belong to the algebra");
  }
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (z[k].is_zero()) continue;
        Rational s = xy * z[k];
        const Vector& c = structure(i, j, k);
        for (std::size_t m = 0; m < n; ++m) {
          if (!c[m].is_zero()) out[m] += s * c[m];
        }
      }
    }
  }
  return out;
}

Vector ThreeLieSuperalgebra::bracket_wedge(std::span<const Rational> x_wedge, std::span<const Rational> z) const {
  if (x_wedge.size() != wedge().size() || z.size() != dim()) {
    throw Error(ErrorKind::SpaceMismatch, "bracket_wedge arguments do not belong to the algebra");
  }
  Vector out(dim());
  for (std::size_t w = 0; w < x_wedge.size(); ++w) {
    if (x_wedge[w].is_zero()) continue;
    for (std::size_t k = 0; k < dim(); ++k) {
      if (z[k].is_zero()) continue;
      add_scaled(out, x_wedge[w] * z[k], ad_column(w, k));
    }
  }
  return out;
}

Vector leibniz_bracket(const ThreeLieSuperalgebra& alg, std::span<const Rational> x_wedge,
                       std::span<const Rational> y_wedge) {
  std::size_t W = alg.wedge().size();
  if (x_wedge.size() != W || y_wedge.size() != W) {
    throw Error(ErrorKind::SpaceMismatch, "leibniz_bracket arguments are not wedge coordinates");
  }
  Vector out(W);
  for (std::size_t v = 0; v < W; ++v) {
    if (x_wedge[v].is_zero()) continue;
    for (std::size_t w = 0; w < W; ++w) {
      if (y_wedge[w].is_zero()) continue;
      add_scaled(out, x_wedge[v] * y_wedge[w], alg.leibniz_entry(v, w));
    }
  }
  return out;
}

// ---------------------------------------------------------- verification

namespace {

void record(AlgebraReport& report, std::map<std::string, std::size_t>& per_axiom, Violation v) {
  ++report.violation_count;
  if (per_axiom[v.axiom]++ < kMaxWitnesses) report.violations.push_back(std::move(v));
}

/// [v, e_b, e_c] for a vector v in the first slot.
void bracket_first(const ThreeLieSuperalgebra& alg, const Vector& v, std::size_t b, std::size_t c, const Rational& s,
                   Vector& out) {
  for (std::size_t m = 0; m < v.size(); ++m) {
    if (v[m].is_zero()) continue;
    Rational f = s * v[m];
    const Vector& t = alg.structure(m, b, c);
    for (std::size_t r = 0; r < t.size(); ++r) {
      if (!t[r].is_zero()) out[r] += f * t[r];
    }
  }
}

}  // namespace

AlgebraReport verify_algebra(const ThreeLieSuperalgebra& alg, std::size_t dim_cap) {
  std::size_t n = alg.dim();
  if (n > dim_cap) {
    throw Error(ErrorKind::DimensionCapExceeded,
                "algebra dimension " + std::to_string(n) + " exceeds cap " + std::to_string(dim_cap));
  }
  const SuperSpace& sp = alg.space();
  AlgebraReport report;
  std::map<std::string, std::size_t> per_axiom;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector& c = alg.structure(i, j, k);
        Parity expected = sp.parity(i) + sp.parity(j) + sp.parity(k);
        if (!is_zero(c) && !is_zero(homogeneous_component(sp, c, expected + Parity::Odd))) {
          report.grading = false;
          record(report, per_axiom, {"grading", {i, j, k}, c, homogeneous_component(sp, c, expected)});
        }
        Vector swap12 = Rational(-sign_of(sp.parity_bit(i) * sp.parity_bit(j))) * alg.structure(j, i, k);
        if (c != swap12) {
          report.super_skew = false;
          record(report, per_axiom, {"super_skew_12", {i, j, k}, c, swap12});
        }
        Vector swap23 = Rational(-sign_of(sp.parity_bit(j) * sp.parity_bit(k))) * alg.structure(i, k, j);
        if (c != swap23) {
          report.super_skew = false;
          record(report, per_axiom, {"super_skew_23", {i, j, k}, c, swap23});
        }
      }

  // [x1,x2,[x3,x4,x5]] = [[x1,x2,x3],x4,x5] + (-1)^{|x3|(|x1|+|x2|)}[x3,[x1,x2,x4],x5]
  //                     + (-1)^{(|x1|+|x2|)(|x3|+|x4|)}[x3,x4,[x1,x2,x5]]
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2) {
      int p12 = sp.parity_bit(x1) ^ sp.parity_bit(x2);
      for (std::size_t x3 = 0; x3 < n; ++x3)
        for (std::size_t x4 = 0; x4 < n; ++x4)
          for (std::size_t x5 = 0; x5 < n; ++x5) {
            Vector lhs(n);
            const Vector& inner = alg.structure(x3, x4, x5);
            for (std::size_t m = 0; m < n; ++m) {
              if (inner[m].is_zero()) continue;
              const Vector& t = alg.structure(x1, x2, m);
              for (std::size_t r = 0; r < n; ++r) {
                if (!t[r].is_zero()) lhs[r] += inner[m] * t[r];
              }
            }
            Vector rhs(n);
            bracket_first(alg, alg.structure(x1, x2, x3), x4, x5, Rational(1), rhs);
            {
              const Vector& v = alg.structure(x1, x2, x4);
              int s = sign_of(sp.parity_bit(x3) * p12);
              for (std::size_t m = 0; m < n; ++m) {
                if (v[m].is_zero()) continue;
                Rational f = Rational(s) * v[m];
                const Vector& t = alg.structure(x3, m, x5);
                for (std::size_t r = 0; r < n; ++r) {
                  if (!t[r].is_zero()) rhs[r] += f * t[r];
                }
              }
            }
            {
              const Vector& v = alg.structure(x1, x2, x5);
              int s = sign_of(p12 * (sp.parity_bit(x3) ^ sp.parity_bit(x4)));
              for (std::size_t m = 0; m < n; ++m) {
                if (v[m].is_zero()) continue;
                Rational f = Rational(s) * v[m];
                const Vector& t = alg.structure(x3, x4, m);
                for (std::size_t r = 0; r < n; ++r) {
                  if (!t[r].is_zero()) rhs[r] += f * t[r];
                }
              }
            }
            if (lhs != rhs) {
              report.fundamental_identity = false;
              record(report, per_axiom, {"fundamental_identity", {x1, x2, x3, x4, x5}, lhs, rhs});
            }
          }
    }
  return report;
}

DerivationCheck is_superderivation(const ThreeLieSuperalgebra& alg, const GradedLinearMap& d) {
  const SuperSpace& sp = alg.space();
  if (!(d.source() == sp) || !(d.target() == sp)) {
    throw Error(ErrorKind::SpaceMismatch, "derivation must be an endomorphism of the algebra");
  }
  std::size_t n = alg.dim();
  int beta = bit(d.degree());
  std::vector<Vector> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = d.matrix().column(i);
  DerivationCheck result;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vector lhs = d.apply(alg.structure(x, y, z));
        Vector ex = unit_vector(n, x), ey = unit_vector(n, y), ez = unit_vector(n, z);
        Vector rhs = alg.bracket(images[x], ey, ez);
        axpy(rhs, Rational(sign_of(beta * sp.parity_bit(x))), alg.bracket(ex, images[y], ez));
        axpy(rhs, Rational(sign_of(beta * (sp.parity_bit(x) ^ sp.parity_bit(y)))), alg.bracket(ex, ey, images[z]));
        if (lhs != rhs) {
          result.ok = false;
          result.witness = Violation{"superderivation", {x, y, z}, lhs, rhs};
          return result;
        }
      }
  return result;
}

std::vector<std::pair<std::size_t, std::size_t>> admissible_entries(const SuperSpace& source,
                                                                    const SuperSpace& target, Parity degree) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r = 0; r < target.dim(); ++r)
    for (std::size_t c = 0; c < source.dim(); ++c) {
      if (target.parity(r) == source.parity(c) + degree) out.emplace_back(r, c);
    }
  return out;
}

DerivationSpace derivation_space(const AlgebraPtr& alg, Parity degree) {
  const SuperSpace& sp = alg->space();
  std::size_t n = alg->dim();
  auto entries = admissible_entries(sp, sp, degree);
  std::vector<long> unknown(n * n, -1);
  for (std::size_t u = 0; u < entries.size(); ++u) unknown[entries[u].first * n + entries[u].second] = static_cast<long>(u);
  int beta = bit(degree);

  SparseMatrix system(entries.size());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        int sy = sign_of(beta * sp.parity_bit(x));
        int sz = sign_of(beta * (sp.parity_bit(x) ^ sp.parity_bit(y)));
        const Vector& c = alg->structure(x, y, z);
        for (std::size_t m = 0; m < n; ++m) {
          std::vector<SparseMatrix::Entry> row;
          // D([x,y,z])_m
          for (std::size_t k = 0; k < n; ++k) {
            if (c[k].is_zero() || unknown[m * n + k] < 0) continue;
            row.push_back({static_cast<std::size_t>(unknown[m * n + k]), c[k]});
          }
          // - [D x, y, z]_m - sy [x, D y, z]_m - sz [x, y, D z]_m
          for (std::size_t k = 0; k < n; ++k) {
            if (unknown[k * n + x] >= 0) {
              const Rational& v = alg->structure(k, y, z)[m];
              if (!v.is_zero()) row.push_back({static_cast<std::size_t>(unknown[k * n + x]), -v});
            }
            if (unknown[k * n + y] >= 0) {
              const Rational& v = alg->structure(x, k, z)[m];
              if (!v.is_zero()) row.push_back({static_cast<std::size_t>(unknown[k * n + y]), Rational(-sy) * v});
            }
            if (unknown[k * n + z] >= 0) {
              const Rational& v = alg->structure(x, y, k)[m];
              if (!v.is_zero()) row.push_back({static_cast<std::size_t>(unknown[k * n + z]), Rational(-sz) * v});
            }
          }
          if (!row.empty()) system.push_row(std::move(row));
        }
      }
  Subspace kernel = kernel_basis(system);
  DerivationSpace result{alg, degree, {}};
  for (const Vector& v : kernel.basis()) {
    Matrix m(n, n);
    for (std::size_t u = 0; u < entries.size(); ++u) m.at(entries[u].first, entries[u].second) = v[u];
    result.basis.emplace_back(sp, sp, degree, std::move(m));
  }
  return result;
}

GradedLinearMap adjoint_action(const ThreeLieSuperalgebra& alg, std::span<const Rational> x_wedge) {
  const WedgeBasis& wb = alg.wedge();
  if (x_wedge.size() != wb.size()) throw Error(ErrorKind::SpaceMismatch, "adjoint_action: not wedge coordinates");
  std::optional<Parity> degree;
  std::size_t n = alg.dim();
  Matrix m(n, n);
  for (std::size_t w = 0; w < wb.size(); ++w) {
    if (x_wedge[w].is_zero()) continue;
    if (degree && *degree != wb.parity(w)) {
      throw Error(ErrorKind::NotHomogeneous, "adjoint_action needs a homogeneous wedge element");
    }
    degree = wb.parity(w);
    m = m + x_wedge[w] * alg.ad_matrix(w);
  }
  return GradedLinearMap(alg.space(), alg.space(), degree.value_or(Parity::Even), std::move(m));
}

}  // namespace super3lie
