#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "super3lie/representation.hpp"

namespace super3lie {

/// Default highest input level the coboundary accepts.
inline constexpr int kDefaultLevelCap = 3;

/// Number of basis input tuples at a level: W^(level-1) * n.
std::size_t tuple_count(const Representation& rep, int level);
/// Parity bit of a basis input tuple.
int tuple_parity(const Representation& rep, int level, std::size_t tuple);
/// Splits a tuple index into its wedge slots and final algebra slot.
void decode_tuple(const Representation& rep, int level, std::size_t tuple, std::vector<std::size_t>& wedges,
                  std::size_t& z);
std::size_t encode_tuple(const Representation& rep, std::span<const std::size_t> wedges, std::size_t z);

/// A homogeneous level-p cochain (wedge^2 G)^{(p-1)} (x) G -> V, held as its
/// full coefficient tensor: coefficients[tuple * dim V + o].
class Cochain {
 public:
  /// The zero cochain. Throws Error(ArityMismatch) for level < 1.
  Cochain(RepresentationPtr rep, int level, Parity parity);
  /// Throws Error(NotHomogeneous) when a coefficient violates the parity.
  Cochain(RepresentationPtr rep, int level, Parity parity, Vector coefficients);

  /// A linear map G -> V as a level-1 cochain.
  static Cochain from_map(RepresentationPtr rep, const GradedLinearMap& map);
  /// The level-1 cochain as a graded map G -> V. Throws Error(ArityMismatch).
  GradedLinearMap to_map() const;

  const Representation& rep() const { return *rep_; }
  const RepresentationPtr& rep_ptr() const { return rep_; }
  int level() const { return level_; }
  Parity parity() const { return parity_; }
  std::size_t tuple_count() const { return coefficients_.size() / rep_->module_dim(); }
  const Vector& coefficients() const { return coefficients_; }
  std::span<const Rational> value(std::size_t tuple) const {
    return {coefficients_.data() + tuple * rep_->module_dim(), rep_->module_dim()};
  }
  /// Throws Error(NotHomogeneous) for a nonzero value of the wrong parity.
  void set(std::size_t tuple, std::size_t module_index, Rational value);
  bool is_zero() const { return super3lie::is_zero(coefficients_); }

  /// Multilinear evaluation. Throws Error(ArityMismatch) when the number of
  /// wedge arguments is not level-1, Error(SpaceMismatch) on lengths.
  Vector eval(const std::vector<Vector>& wedge_args, std::span<const Rational> z) const;

  friend Cochain operator+(const Cochain& a, const Cochain& b);
  friend Cochain operator-(const Cochain& a, const Cochain& b);
  friend Cochain operator*(const Rational& s, const Cochain& a);
  friend bool operator==(const Cochain& a, const Cochain& b);

 private:
  RepresentationPtr rep_;
  int level_;
  Parity parity_;
  Vector coefficients_;
};

/// Coordinates of the homogeneous cochains of one level and parity: the
/// (tuple, module index) slots whose parities are compatible, in tensor order.
class CochainSpace {
 public:
  CochainSpace(RepresentationPtr rep, int level, Parity parity);

  const RepresentationPtr& rep_ptr() const { return rep_; }
  int level() const { return level_; }
  Parity parity() const { return parity_; }
  std::size_t dim() const { return data_->slots.size(); }
  /// Tensor offset (tuple * dim V + o) of coordinate k.
  std::size_t slot(std::size_t k) const { return data_->slots[k]; }
  /// Coordinate of a tensor offset, or -1 when the slot is forced to zero.
  long local_index(std::size_t offset) const { return data_->local[offset]; }

  /// Throws Error(SpaceMismatch) when f has another level, parity or
  /// representation.
  Vector coordinates(const Cochain& f) const;
  Cochain cochain(std::span<const Rational> coordinates) const;

 private:
  struct Data {
    std::vector<std::size_t> slots;
    std::vector<long> local;
  };
  RepresentationPtr rep_;
  int level_;
  Parity parity_;
  std::shared_ptr<const Data> data_;
};

/// General coboundary: level p -> level p+1, same parity.
/// Throws Error(LevelCapExceeded) when p > level_cap.
Cochain coboundary(const Cochain& f, int level_cap = kDefaultLevelCap);
/// Closed form for level-1 input, evaluated element by element.
Cochain coboundary_p1(const Cochain& f);
/// Closed form for level-2 input, evaluated element by element.
Cochain coboundary_p2(const Cochain& f);

/// The coboundary from (level, parity) to (level+1, parity) as a sparse matrix
/// in CochainSpace coordinates.
struct CoboundaryOperator {
  CochainSpace source;
  CochainSpace target;
  SparseMatrix matrix;
};

CoboundaryOperator coboundary_operator(const RepresentationPtr& rep, int level, Parity parity,
                                       int level_cap = kDefaultLevelCap);

}  // namespace super3lie
