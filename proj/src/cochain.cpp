#include "super3lie/cochain.hpp"

#include <functional>

#include "super3lie/errors.hpp"

namespace super3lie {

std::size_t tuple_count(const Representation& rep, int level) {
  std::size_t count = rep.algebra().dim();
  std::size_t W = rep.algebra().wedge().size();
  for (int i = 1; i < level; ++i) count *= W;
  return count;
}

void decode_tuple(const Representation& rep, int level, std::size_t tuple, std::vector<std::size_t>& wedges,
                  std::size_t& z) {
  std::size_t n = rep.algebra().dim();
  std::size_t W = rep.algebra().wedge().size();
  wedges.assign(static_cast<std::size_t>(level - 1), 0);
  z = tuple % n;
  tuple /= n;
  for (std::size_t i = wedges.size(); i-- > 0;) {
    wedges[i] = tuple % W;
    tuple /= W;
  }
}

std::size_t encode_tuple(const Representation& rep, std::span<const std::size_t> wedges, std::size_t z) {
  std::size_t W = rep.algebra().wedge().size();
  std::size_t t = 0;
  for (std::size_t w : wedges) t = t * W + w;
  return t * rep.algebra().dim() + z;
}

int tuple_parity(const Representation& rep, int level, std::size_t tuple) {
  std::vector<std::size_t> wedges;
  std::size_t z = 0;
  decode_tuple(rep, level, tuple, wedges, z);
  int p = rep.algebra().space().parity_bit(z);
  for (std::size_t w : wedges) p ^= rep.algebra().wedge().parity_bit(w);
  return p;
}

// ----------------------------------------------------------------- Cochain

namespace {

std::vector<int> all_tuple_parities(const Representation& rep, int level) {
  std::size_t n = rep.algebra().dim();
  std::size_t W = rep.algebra().wedge().size();
  std::vector<int> parities;
  parities.reserve(tuple_count(rep, level));
  for (std::size_t z = 0; z < n; ++z) parities.push_back(rep.algebra().space().parity_bit(z));
  for (int l = 1; l < level; ++l) {
    std::vector<int> next;
    next.reserve(parities.size() * W);
    // prepend a wedge slot: new index = w * (old count) + old
    for (std::size_t w = 0; w < W; ++w)
      for (int p : parities) next.push_back(p ^ rep.algebra().wedge().parity_bit(w));
    parities = std::move(next);
  }
  return parities;
}

}  // namespace

Cochain::Cochain(RepresentationPtr rep, int level, Parity parity)
    : rep_(std::move(rep)), level_(level), parity_(parity) {
  if (level_ < 1) throw Error(ErrorKind::ArityMismatch, "cochain level must be at least 1");
  coefficients_.resize(super3lie::tuple_count(*rep_, level_) * rep_->module_dim());
}

Cochain::Cochain(RepresentationPtr rep, int level, Parity parity, Vector coefficients)
    : Cochain(std::move(rep), level, parity) {
  if (coefficients.size() != coefficients_.size()) {
    throw Error(ErrorKind::SpaceMismatch, "cochain coefficient tensor has the wrong size");
  }
  std::size_t m = rep_->module_dim();
  auto parities = all_tuple_parities(*rep_, level_);
  for (std::size_t t = 0; t < parities.size(); ++t)
    for (std::size_t o = 0; o < m; ++o) {
      if (!coefficients[t * m + o].is_zero() && rep_->module().parity_bit(o) != (parities[t] ^ bit(parity_))) {
        throw Error(ErrorKind::NotHomogeneous, "cochain coefficient violates its declared parity");
      }
    }
  coefficients_ = std::move(coefficients);
}

Cochain Cochain::from_map(RepresentationPtr rep, const GradedLinearMap& map) {
  if (!(map.source() == rep->algebra().space()) || !(map.target() == rep->module())) {
    throw Error(ErrorKind::SpaceMismatch, "map does not go from the algebra to the module");
  }
  std::size_t n = rep->algebra().dim();
  std::size_t m = rep->module_dim();
  Vector coeffs(n * m);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t o = 0; o < m; ++o) coeffs[z * m + o] = map.matrix().at(o, z);
  Parity degree = map.degree();
  return Cochain(std::move(rep), 1, degree, std::move(coeffs));
}

GradedLinearMap Cochain::to_map() const {
  if (level_ != 1) throw Error(ErrorKind::ArityMismatch, "only level-1 cochains are linear maps");
  std::size_t n = rep_->algebra().dim();
  std::size_t m = rep_->module_dim();
  Matrix mat(m, n);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t o = 0; o < m; ++o) mat.at(o, z) = coefficients_[z * m + o];
  return GradedLinearMap(rep_->algebra().space(), rep_->module(), parity_, std::move(mat));
}

void Cochain::set(std::size_t tuple, std::size_t module_index, Rational value) {
  std::size_t m = rep_->module_dim();
  if (module_index >= m || tuple >= tuple_count()) throw Error(ErrorKind::SpaceMismatch, "cochain slot out of range");
  if (!value.is_zero() &&
      rep_->module().parity_bit(module_index) != (tuple_parity(*rep_, level_, tuple) ^ bit(parity_))) {
    throw Error(ErrorKind::NotHomogeneous, "cochain value violates its declared parity");
  }
  coefficients_[tuple * m + module_index] = std::move(value);
}

Vector Cochain::eval(const std::vector<Vector>& wedge_args, std::span<const Rational> z) const {
  if (wedge_args.size() != static_cast<std::size_t>(level_ - 1)) {
    throw Error(ErrorKind::ArityMismatch, "cochain of level " + std::to_string(level_) + " takes " +
                                              std::to_string(level_ - 1) + " wedge arguments");
  }
  std::size_t W = rep_->algebra().wedge().size();
  std::size_t n = rep_->algebra().dim();
  for (const Vector& x : wedge_args) {
    if (x.size() != W) throw Error(ErrorKind::SpaceMismatch, "wedge argument has the wrong length");
  }
  if (z.size() != n) throw Error(ErrorKind::SpaceMismatch, "final argument has the wrong length");
  std::size_t m = rep_->module_dim();
  Vector out(m);
  std::function<void(std::size_t, std::size_t, const Rational&)> walk = [&](std::size_t slot, std::size_t prefix,
                                                                              const Rational& coeff) {
    if (slot == wedge_args.size()) {
      for (std::size_t k = 0; k < n; ++k) {
        if (z[k].is_zero()) continue;
        Rational c = coeff * z[k];
        axpy(out, c, value(prefix * n + k));
      }
      return;
    }
    const Vector& x = wedge_args[slot];
    for (std::size_t w = 0; w < W; ++w) {
      if (!x[w].is_zero()) walk(slot + 1, prefix * W + w, coeff * x[w]);
    }
  };
  walk(0, 0, Rational(1));
  return out;
}

namespace {

void require_compatible(const Cochain& a, const Cochain& b) {
  if (a.level() != b.level() || a.parity() != b.parity() ||
      (a.rep_ptr() != b.rep_ptr() && !(a.rep() == b.rep()))) {
    throw Error(ErrorKind::SpaceMismatch, "cochains live in different spaces");
  }
}

}  // namespace

Cochain operator+(const Cochain& a, const Cochain& b) {
  require_compatible(a, b);
  Cochain out = a;
  out.coefficients_ = a.coefficients_ + b.coefficients_;
  return out;
}

Cochain operator-(const Cochain& a, const Cochain& b) {
  require_compatible(a, b);
  Cochain out = a;
  out.coefficients_ = a.coefficients_ - b.coefficients_;
  return out;
}

Cochain operator*(const Rational& s, const Cochain& a) {
  Cochain out = a;
  out.coefficients_ = s * a.coefficients_;
  return out;
}

bool operator==(const Cochain& a, const Cochain& b) {
  return a.level_ == b.level_ && a.parity_ == b.parity_ && a.coefficients_ == b.coefficients_ &&
         (a.rep_ == b.rep_ || *a.rep_ == *b.rep_);
}

// ------------------------------------------------------------ CochainSpace

CochainSpace::CochainSpace(RepresentationPtr rep, int level, Parity parity)
    : rep_(std::move(rep)), level_(level), parity_(parity) {
  if (level_ < 1) throw Error(ErrorKind::ArityMismatch, "cochain level must be at least 1");
  auto data = std::make_shared<Data>();
  std::size_t m = rep_->module_dim();
  auto parities = all_tuple_parities(*rep_, level_);
  data->local.assign(parities.size() * m, -1);
  for (std::size_t t = 0; t < parities.size(); ++t)
    for (std::size_t o = 0; o < m; ++o) {
      if (rep_->module().parity_bit(o) == (parities[t] ^ bit(parity_))) {
        data->local[t * m + o] = static_cast<long>(data->slots.size());
        data->slots.push_back(t * m + o);
      }
    }
  data_ = std::move(data);
}

Vector CochainSpace::coordinates(const Cochain& f) const {
  if (f.level() != level_ || f.parity() != parity_ || (f.rep_ptr() != rep_ && !(f.rep() == *rep_))) {
    throw Error(ErrorKind::SpaceMismatch, "cochain does not belong to this cochain space");
  }
  Vector out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = f.coefficients()[data_->slots[k]];
  return out;
}

Cochain CochainSpace::cochain(std::span<const Rational> coordinates) const {
  if (coordinates.size() != dim()) throw Error(ErrorKind::SpaceMismatch, "coordinate vector has the wrong length");
  Vector coeffs(data_->local.size());
  for (std::size_t k = 0; k < dim(); ++k) coeffs[data_->slots[k]] = coordinates[k];
  return Cochain(rep_, level_, parity_, std::move(coeffs));
}

// -------------------------------------------------------- general engine

namespace {

struct EngineTerm {
  Rational coeff;
  long phi;  // wedge index of the acting Phi, or -1 for the identity
  std::size_t source;
};

/// Rows of each Phi(X_w) as sparse lists.
std::vector<std::vector<SparseVector>> sparse_phi_rows(const Representation& rep) {
  std::vector<std::vector<SparseVector>> rows(rep.phi().size());
  for (std::size_t w = 0; w < rep.phi().size(); ++w) {
    const Matrix& mat = rep.phi(w);
    rows[w].resize(mat.rows());
    for (std::size_t r = 0; r < mat.rows(); ++r) rows[w][r] = to_sparse(mat.row(r));
  }
  return rows;
}

/// Expansion of (delta f)(X_1..X_q, z) into values of f at basis tuples.
/// `w` holds the q output wedge slots; pi is the parity bit of f.
void engine_terms(const Representation& rep, int pi, const std::vector<std::size_t>& w, std::size_t z,
                  std::vector<EngineTerm>& terms, std::vector<std::size_t>& scratch) {
  terms.clear();
  const ThreeLieSuperalgebra& alg = rep.algebra();
  const WedgeBasis& wb = alg.wedge();
  const SuperSpace& sp = alg.space();
  std::size_t q = w.size();
  std::vector<int> pw(q);
  for (std::size_t i = 0; i < q; ++i) pw[i] = wb.parity_bit(w[i]);
  int pz = sp.parity_bit(z);

  auto source_without = [&](std::size_t skip, long replace_at, std::size_t replacement, std::size_t last) {
    scratch.clear();
    for (std::size_t i = 0; i < q; ++i) {
      if (i == skip) continue;
      scratch.push_back(static_cast<long>(i) == replace_at ? replacement : w[i]);
    }
    return encode_tuple(rep, scratch, last);
  };

  for (std::size_t j = 0; j < q; ++j) {
    int sign_j = sign_of(static_cast<int>(j) + 1);
    // f(.., X^_j, .., [X_j, X_k]_F, .., z)
    int between = 0;
    for (std::size_t k = j + 1; k < q; ++k) {
      int s = sign_j * sign_of(pw[j] * between);
      for (const auto& t : alg.leibniz_entry(w[j], w[k])) {
        terms.push_back({Rational(s) * t.value, -1, source_without(j, static_cast<long>(k), t.index, z)});
      }
      between ^= pw[k];
    }
    // f(.., X^_j, .., [X_j, z])
    {
      int after = 0;
      for (std::size_t i = j + 1; i < q; ++i) after ^= pw[i];
      int s = sign_j * sign_of(pw[j] * after);
      for (const auto& t : alg.ad_column(w[j], z)) {
        terms.push_back({Rational(s) * t.value, -1, source_without(j, -1, 0, t.index)});
      }
    }
    // Phi(X_j) f(.., X^_j, .., z)
    {
      int before = 0;
      for (std::size_t i = 0; i < j; ++i) before ^= pw[i];
      int s = -sign_j * sign_of(pw[j] * (pi ^ before));
      terms.push_back({Rational(s), static_cast<long>(w[j]), source_without(j, -1, 0, z)});
    }
  }
  // the last wedge slot X_q = a ^ b acting through Phi(b, z) and Phi(z, a)
  auto [a, b] = wb.pair(w[q - 1]);
  int pa = sp.parity_bit(a), pb = sp.parity_bit(b);
  int rest = 0;
  for (std::size_t i = 0; i + 1 < q; ++i) rest ^= pw[i];
  int outer = sign_of(static_cast<int>(q) + 1);
  {
    auto t = wb.term(b, z);
    if (t.sign != 0) {
      int s = outer * t.sign * sign_of((pb ^ pz) * (pi ^ rest ^ pa));
      terms.push_back({Rational(s), static_cast<long>(t.index), source_without(q - 1, -1, 0, a)});
    }
  }
  {
    auto t = wb.term(z, a);
    if (t.sign != 0) {
      int s = outer * t.sign * sign_of((pa ^ pz) * (pi ^ rest) + pw[q - 1] * pz);
      terms.push_back({Rational(s), static_cast<long>(t.index), source_without(q - 1, -1, 0, b)});
    }
  }
}

void check_cap(int level, int level_cap) {
  if (level > level_cap) {
    throw Error(ErrorKind::LevelCapExceeded, "coboundary at level " + std::to_string(level) + " exceeds cap " +
                                                 std::to_string(level_cap));
  }
}

}  // namespace

Cochain coboundary(const Cochain& f, int level_cap) {
  check_cap(f.level(), level_cap);
  const Representation& rep = f.rep();
  int out_level = f.level() + 1;
  std::size_t m = rep.module_dim();
  std::size_t count = tuple_count(rep, out_level);
  auto phi_rows = sparse_phi_rows(rep);
  Vector out(count * m);
  std::vector<EngineTerm> terms;
  std::vector<std::size_t> wedges, scratch;
  std::size_t z = 0;
  int pi = bit(f.parity());
  for (std::size_t t = 0; t < count; ++t) {
    decode_tuple(rep, out_level, t, wedges, z);
    engine_terms(rep, pi, wedges, z, terms, scratch);
    Rational* target = out.data() + t * m;
    for (const auto& term : terms) {
      auto src = f.value(term.source);
      if (term.phi < 0) {
        for (std::size_t o = 0; o < m; ++o) {
          if (!src[o].is_zero()) target[o] += term.coeff * src[o];
        }
      } else {
        const auto& rows = phi_rows[static_cast<std::size_t>(term.phi)];
        for (std::size_t o = 0; o < m; ++o) {
          for (const auto& e : rows[o]) {
            if (!src[e.index].is_zero()) target[o] += term.coeff * e.value * src[e.index];
          }
        }
      }
    }
  }
  return Cochain(f.rep_ptr(), out_level, f.parity(), std::move(out));
}

CoboundaryOperator coboundary_operator(const RepresentationPtr& rep, int level, Parity parity, int level_cap) {
  check_cap(level, level_cap);
  CochainSpace source(rep, level, parity);
  CochainSpace target(rep, level + 1, parity);
  SparseMatrix matrix(source.dim());
  std::size_t m = rep->module_dim();
  std::size_t count = tuple_count(*rep, level + 1);
  auto phi_rows = sparse_phi_rows(*rep);
  std::vector<EngineTerm> terms;
  std::vector<std::size_t> wedges, scratch;
  std::size_t z = 0;
  int pi = bit(parity);
  for (std::size_t t = 0; t < count; ++t) {
    bool any = false;
    for (std::size_t o = 0; o < m && !any; ++o) any = target.local_index(t * m + o) >= 0;
    if (!any) continue;
    decode_tuple(*rep, level + 1, t, wedges, z);
    engine_terms(*rep, pi, wedges, z, terms, scratch);
    for (std::size_t o = 0; o < m; ++o) {
      if (target.local_index(t * m + o) < 0) continue;
      std::vector<SparseMatrix::Entry> row;
      for (const auto& term : terms) {
        if (term.phi < 0) {
          long col = source.local_index(term.source * m + o);
          if (col >= 0) row.push_back({static_cast<std::size_t>(col), term.coeff});
        } else {
          for (const auto& e : phi_rows[static_cast<std::size_t>(term.phi)][o]) {
            long col = source.local_index(term.source * m + e.index);
            if (col >= 0) row.push_back({static_cast<std::size_t>(col), term.coeff * e.value});
          }
        }
      }
      matrix.push_row(std::move(row));
    }
  }
  return {std::move(source), std::move(target), std::move(matrix)};
}

// ---------------------------------------------------- closed forms p = 1, 2

namespace {

Vector phi_apply(const Representation& rep, std::size_t i, std::size_t j, std::span<const Rational> v) {
  return rep.phi_pair(i, j).apply(v);
}

}  // namespace

Cochain coboundary_p1(const Cochain& f) {
  if (f.level() != 1) throw Error(ErrorKind::ArityMismatch, "coboundary_p1 takes a level-1 cochain");
  const Representation& rep = f.rep();
  const ThreeLieSuperalgebra& alg = rep.algebra();
  const SuperSpace& sp = alg.space();
  std::size_t n = alg.dim();
  std::size_t m = rep.module_dim();
  int pf = bit(f.parity());
  Cochain out(f.rep_ptr(), 2, f.parity());
  auto fe = [&](const Vector& x) { return f.eval({}, x); };
  for (std::size_t w = 0; w < alg.wedge().size(); ++w) {
    auto [x1, x2] = alg.wedge().pair(w);
    for (std::size_t x3 = 0; x3 < n; ++x3) {
      int p1 = sp.parity_bit(x1), p2 = sp.parity_bit(x2), p3 = sp.parity_bit(x3);
      Vector e1 = unit_vector(n, x1), e2 = unit_vector(n, x2), e3 = unit_vector(n, x3);
      Vector v = Rational(-1) * fe(alg.bracket(e1, e2, e3));
      axpy(v, Rational(sign_of(pf * (p1 ^ p2))), phi_apply(rep, x1, x2, fe(e3)));
      axpy(v, Rational(sign_of((pf ^ p1) * (p2 ^ p3))), phi_apply(rep, x2, x3, fe(e1)));
      axpy(v, Rational(sign_of(pf * (p1 ^ p3) + p3 * (p1 ^ p2))), phi_apply(rep, x3, x1, fe(e2)));
      std::size_t t = w * n + x3;
      for (std::size_t o = 0; o < m; ++o) out.set(t, o, v[o]);
    }
  }
  return out;
}

Cochain coboundary_p2(const Cochain& f) {
  if (f.level() != 2) throw Error(ErrorKind::ArityMismatch, "coboundary_p2 takes a level-2 cochain");
  const Representation& rep = f.rep();
  const ThreeLieSuperalgebra& alg = rep.algebra();
  const SuperSpace& sp = alg.space();
  const WedgeBasis& wb = alg.wedge();
  std::size_t n = alg.dim();
  std::size_t m = rep.module_dim();
  int pf = bit(f.parity());
  Cochain out(f.rep_ptr(), 3, f.parity());
  // f(a, b, c) := f(a ^ b, c)
  auto f3 = [&](const Vector& a, const Vector& b, const Vector& c) {
    return f.eval({wedge_expand(sp, wb, a, b)}, c);
  };
  for (std::size_t w1 = 0; w1 < wb.size(); ++w1) {
    auto [x1, x2] = wb.pair(w1);
    for (std::size_t w2 = 0; w2 < wb.size(); ++w2) {
      auto [x3, x4] = wb.pair(w2);
      for (std::size_t x5 = 0; x5 < n; ++x5) {
        int p1 = sp.parity_bit(x1), p2 = sp.parity_bit(x2), p3 = sp.parity_bit(x3), p4 = sp.parity_bit(x4),
            p5 = sp.parity_bit(x5);
        int p12 = p1 ^ p2;
        Vector e1 = unit_vector(n, x1), e2 = unit_vector(n, x2), e3 = unit_vector(n, x3), e4 = unit_vector(n, x4),
               e5 = unit_vector(n, x5);
        Vector v = Rational(-1) * f3(alg.bracket(e1, e2, e3), e4, e5);
        axpy(v, Rational(-sign_of(p3 * p12)), f3(e3, alg.bracket(e1, e2, e4), e5));
        axpy(v, Rational(-sign_of(p12 * (p3 ^ p4))), f3(e3, e4, alg.bracket(e1, e2, e5)));
        axpy(v, Rational(1), f3(e1, e2, alg.bracket(e3, e4, e5)));
        axpy(v, Rational(sign_of(pf * p12)), phi_apply(rep, x1, x2, f3(e3, e4, e5)));
        axpy(v, Rational(-sign_of((pf ^ p12) * (p3 ^ p4))), phi_apply(rep, x3, x4, f3(e1, e2, e5)));
        axpy(v, Rational(-sign_of((pf ^ p12 ^ p3) * (p4 ^ p5))), phi_apply(rep, x4, x5, f3(e1, e2, e3)));
        axpy(v, Rational(-sign_of((pf ^ p12) * (p3 ^ p5) + p5 * (p3 ^ p4))), phi_apply(rep, x5, x3, f3(e1, e2, e4)));
        std::size_t t = (w1 * wb.size() + w2) * n + x5;
        for (std::size_t o = 0; o < m; ++o) out.set(t, o, v[o]);
      }
    }
  }
  return out;
}

}  // namespace super3lie
