#include "super3lie/graded.hpp"

#include <set>

#include "super3lie/errors.hpp"

namespace super3lie {

const char* parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

SuperSpace::SuperSpace(std::string name, std::vector<BasisElement> basis)
    : name_(std::move(name)), basis_(std::move(basis)) {
  std::set<std::string> seen;
  for (const auto& b : basis_) {
    if (b.label.empty()) throw Error(ErrorKind::ParseError, "empty basis label in space '" + name_ + "'");
    if (!seen.insert(b.label).second) {
      throw Error(ErrorKind::ParseError, "duplicate basis label '" + b.label + "' in space '" + name_ + "'");
    }
  }
}

std::size_t SuperSpace::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].label == label) return i;
  }
  throw Error(ErrorKind::LabelUnknown, "unknown label '" + label + "' in space '" + name_ + "'");
}

std::size_t SuperSpace::even_dim() const {
  std::size_t k = 0;
  for (const auto& b : basis_) k += b.parity == Parity::Even;
  return k;
}

std::size_t SuperSpace::odd_dim() const { return dim() - even_dim(); }

Vector homogeneous_component(const SuperSpace& space, std::span<const Rational> v, Parity p) {
  if (v.size() != space.dim()) throw Error(ErrorKind::SpaceMismatch, "vector length does not match space");
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (space.parity(i) == p) out[i] = v[i];
  }
  return out;
}

std::optional<Parity> parity_of(const SuperSpace& space, std::span<const Rational> v) {
  std::optional<Parity> found;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (found && *found != space.parity(i)) return std::nullopt;
    found = space.parity(i);
  }
  return found;
}

// -------------------------------------------------------- GradedLinearMap

GradedLinearMap::GradedLinearMap(SuperSpace source, SuperSpace target, Parity degree, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim()) {
    throw Error(ErrorKind::SpaceMismatch, "map matrix shape does not match its spaces");
  }
  for (std::size_t r = 0; r < matrix_.rows(); ++r) {
    for (std::size_t c = 0; c < matrix_.cols(); ++c) {
      if (matrix_.at(r, c).is_zero()) continue;
      if (target_.parity(r) != source_.parity(c) + degree_) {
        throw Error(ErrorKind::NotHomogeneous,
                    std::string("entry (") + target_.label(r) + ", " + source_.label(c) +
                        ") violates degree " + parity_name(degree_));
      }
    }
  }
}

GradedLinearMap GradedLinearMap::identity(const SuperSpace& space) {
  return GradedLinearMap(space, space, Parity::Even, Matrix::identity(space.dim()));
}

GradedLinearMap GradedLinearMap::zero(const SuperSpace& source, const SuperSpace& target, Parity degree) {
  return GradedLinearMap(source, target, degree, Matrix(target.dim(), source.dim()));
}

Vector GradedLinearMap::apply(std::span<const Rational> v) const {
  if (v.size() != source_.dim()) throw Error(ErrorKind::SpaceMismatch, "vector length does not match map source");
  return matrix_.apply(v);
}

std::pair<GradedLinearMap, GradedLinearMap> split_by_degree(const SuperSpace& source,
                                                            const SuperSpace& target,
                                                            const Matrix& m) {
  if (m.rows() != target.dim() || m.cols() != source.dim()) {
    throw Error(ErrorKind::SpaceMismatch, "matrix shape does not match spaces");
  }
  Matrix even(m.rows(), m.cols());
  Matrix odd(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (target.parity(r) == source.parity(c)) {
        even.at(r, c) = m.at(r, c);
      } else {
        odd.at(r, c) = m.at(r, c);
      }
    }
  }
  return {GradedLinearMap(source, target, Parity::Even, std::move(even)),
          GradedLinearMap(source, target, Parity::Odd, std::move(odd))};
}

GradedLinearMap compose_graded(const GradedLinearMap& f, const GradedLinearMap& g) {
  if (!(g.target() == f.source())) throw Error(ErrorKind::SpaceMismatch, "compose: g.target != f.source");
  return GradedLinearMap(g.source(), f.target(), f.degree() + g.degree(), f.matrix() * g.matrix());
}

namespace {

void require_same_shape(const GradedLinearMap& f, const GradedLinearMap& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    throw Error(ErrorKind::SpaceMismatch, "maps act between different spaces");
  }
  if (f.degree() != g.degree()) throw Error(ErrorKind::NotHomogeneous, "sum of maps of different degrees");
}

}  // namespace

GradedLinearMap operator+(const GradedLinearMap& f, const GradedLinearMap& g) {
  require_same_shape(f, g);
  return GradedLinearMap(f.source(), f.target(), f.degree(), f.matrix() + g.matrix());
}

GradedLinearMap operator-(const GradedLinearMap& f, const GradedLinearMap& g) {
  require_same_shape(f, g);
  return GradedLinearMap(f.source(), f.target(), f.degree(), f.matrix() - g.matrix());
}

GradedLinearMap operator*(const Rational& s, const GradedLinearMap& f) {
  return GradedLinearMap(f.source(), f.target(), f.degree(), s * f.matrix());
}

GradedLinearMap supercommutator(const GradedLinearMap& f, const GradedLinearMap& g) {
  if (!(f.source() == f.target()) || !(g.source() == g.target()) || !(f.source() == g.source())) {
    throw Error(ErrorKind::SpaceMismatch, "supercommutator needs endomorphisms of one space");
  }
  Matrix fg = f.matrix() * g.matrix();
  Matrix gf = g.matrix() * f.matrix();
  Rational s = sign_of(bit(f.degree()) * bit(g.degree()));
  return GradedLinearMap(f.source(), f.source(), f.degree() + g.degree(), fg - s * gf);
}

// ------------------------------------------------------------ WedgeBasis

WedgeBasis::WedgeBasis(const SuperSpace& space) : n_(space.dim()), lookup_(space.dim() * space.dim()) {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      if (i == j && space.parity(i) == Parity::Even) continue;
      pairs_.emplace_back(i, j);
      parity_bits_.push_back(space.parity_bit(i) ^ space.parity_bit(j));
    }
  }
  for (std::size_t w = 0; w < pairs_.size(); ++w) {
    auto [i, j] = pairs_[w];
    lookup_[i * n_ + j] = {w, 1};
    if (i != j) lookup_[j * n_ + i] = {w, -sign_of(space.parity_bit(i) * space.parity_bit(j))};
  }
}

std::size_t wedge_dimension(std::size_t d0, std::size_t d1) {
  return d0 * (d0 - (d0 > 0 ? 1 : 0)) / 2 + d0 * d1 + d1 * (d1 + 1) / 2;
}

Vector wedge_expand(const SuperSpace& space, const WedgeBasis& wedge, std::span<const Rational> x,
                    std::span<const Rational> y) {
  if (x.size() != space.dim() || y.size() != space.dim() || wedge.space_dim() != space.dim()) {
    throw Error(ErrorKind::SpaceMismatch, "wedge_expand: vectors do not belong to the space");
  }
  Vector out(wedge.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero()) continue;
      auto t = wedge.term(i, j);
      if (t.sign == 0) continue;
      Rational p = x[i] * y[j];
      if (t.sign > 0) {
        out[t.index] += p;
      } else {
        out[t.index] -= p;
      }
    }
  }
  return out;
}

}  // namespace super3lie
