#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "super3lie/linalg.hpp"

namespace super3lie {

enum class Parity : unsigned char { Even = 0, Odd = 1 };

inline int bit(Parity p) { return static_cast<int>(p); }
inline Parity parity_from_bit(int b) { return (b & 1) ? Parity::Odd : Parity::Even; }
inline Parity operator+(Parity a, Parity b) { return parity_from_bit(bit(a) ^ bit(b)); }
/// (-1)^exponent
inline int sign_of(int exponent) { return (exponent & 1) ? -1 : 1; }
const char* parity_name(Parity p);

struct BasisElement {
  std::string label;
  Parity parity = Parity::Even;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Finite-dimensional Z2-graded space with a named homogeneous basis.
class SuperSpace {
 public:
  SuperSpace() = default;
  /// Throws Error(ParseError) on duplicate or empty labels.
  SuperSpace(std::string name, std::vector<BasisElement> basis);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  Parity parity(std::size_t i) const { return basis_.at(i).parity; }
  int parity_bit(std::size_t i) const { return bit(basis_[i].parity); }
  const std::string& label(std::size_t i) const { return basis_.at(i).label; }
  /// Throws Error(LabelUnknown).
  std::size_t index_of(const std::string& label) const;
  std::size_t even_dim() const;
  std::size_t odd_dim() const;

  /// Spaces are interchangeable when their labelled bases agree; the name is
  /// cosmetic.
  friend bool operator==(const SuperSpace& a, const SuperSpace& b) { return a.basis_ == b.basis_; }

 private:
  std::string name_;
  std::vector<BasisElement> basis_;
};

/// Part of v supported on basis vectors of parity p.
Vector homogeneous_component(const SuperSpace& space, std::span<const Rational> v, Parity p);
/// Parity of a nonzero homogeneous v; nothing for zero or mixed vectors.
std::optional<Parity> parity_of(const SuperSpace& space, std::span<const Rational> v);

/// Linear map homogeneous of a single degree. matrix is target.dim x source.dim.
class GradedLinearMap {
 public:
  GradedLinearMap() = default;
  /// Throws Error(SpaceMismatch) on shape errors and Error(NotHomogeneous)
  /// when an entry connects basis vectors whose parities differ by more than
  /// the degree.
  GradedLinearMap(SuperSpace source, SuperSpace target, Parity degree, Matrix matrix);

  static GradedLinearMap identity(const SuperSpace& space);
  static GradedLinearMap zero(const SuperSpace& source, const SuperSpace& target, Parity degree);

  const SuperSpace& source() const { return source_; }
  const SuperSpace& target() const { return target_; }
  Parity degree() const { return degree_; }
  const Matrix& matrix() const { return matrix_; }
  Vector apply(std::span<const Rational> v) const;
  bool is_zero() const { return matrix_.is_zero(); }

  friend bool operator==(const GradedLinearMap&, const GradedLinearMap&) = default;

 private:
  SuperSpace source_;
  SuperSpace target_;
  Parity degree_ = Parity::Even;
  Matrix matrix_;
};

/// Even and odd parts of an arbitrary matrix between two superspaces.
std::pair<GradedLinearMap, GradedLinearMap> split_by_degree(const SuperSpace& source,
                                                            const SuperSpace& target,
                                                            const Matrix& m);
/// f after g. Throws Error(SpaceMismatch) unless g.target == f.source.
GradedLinearMap compose_graded(const GradedLinearMap& f, const GradedLinearMap& g);
GradedLinearMap operator+(const GradedLinearMap& f, const GradedLinearMap& g);
GradedLinearMap operator-(const GradedLinearMap& f, const GradedLinearMap& g);
GradedLinearMap operator*(const Rational& s, const GradedLinearMap& f);
/// fg - (-1)^{|f||g|} gf on a common space.
GradedLinearMap supercommutator(const GradedLinearMap& f, const GradedLinearMap& g);

/// Canonical basis of the super wedge square: pairs (i,j) with i<j, plus (i,i)
/// for odd i, in lexicographic order.
class WedgeBasis {
 public:
  struct Term {
    std::size_t index = 0;
    int sign = 0;  // 0 when e_i ^ e_j vanishes
  };

  WedgeBasis() = default;
  explicit WedgeBasis(const SuperSpace& space);

  std::size_t size() const { return pairs_.size(); }
  std::size_t space_dim() const { return n_; }
  std::pair<std::size_t, std::size_t> pair(std::size_t w) const { return pairs_.at(w); }
  Parity parity(std::size_t w) const { return parity_from_bit(parity_bits_[w]); }
  int parity_bit(std::size_t w) const { return parity_bits_[w]; }
  /// e_i ^ e_j as a signed basis element.
  Term term(std::size_t i, std::size_t j) const { return lookup_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<int> parity_bits_;
  std::vector<Term> lookup_;
};

std::size_t wedge_dimension(std::size_t even_dim, std::size_t odd_dim);

/// x ^ y in wedge coordinates. Throws Error(SpaceMismatch) on length errors.
Vector wedge_expand(const SuperSpace& space, const WedgeBasis& wedge, std::span<const Rational> x,
                    std::span<const Rational> y);

}  // namespace super3lie
