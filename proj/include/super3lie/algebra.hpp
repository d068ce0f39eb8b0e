#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "super3lie/graded.hpp"

namespace super3lie {

inline constexpr std::size_t kDefaultDimCap = 10;
/// Witnesses kept per axiom in verification reports; totals are always exact.
inline constexpr std::size_t kMaxWitnesses = 16;

/// A failed identity at a basis tuple, both sides evaluated.
struct Violation {
  std::string axiom;
  std::vector<std::size_t> tuple;
  Vector lhs;
  Vector rhs;
};

/// Sparse coordinate list used by the precomputed product tables.
struct SparseTerm {
  std::size_t index;
  Rational value;
};
using SparseVector = std::vector<SparseTerm>;

SparseVector to_sparse(std::span<const Rational> v);

/// Sign relating [x_{perm[0]}, x_{perm[1]}, x_{perm[2]}] to [x_0, x_1, x_2]
/// for elements of the given parity bits.
int permutation_sign(const std::array<int, 3>& parity, std::array<int, 3> perm);

class ThreeLieSuperalgebra {
 public:
  struct StatedBracket {
    std::size_t a, b, c;
    Vector value;
  };

  /// Raw structure tensor: structure[(i*n + j)*n + k] = [e_i, e_j, e_k].
  /// Nothing is validated beyond shapes; see verify_algebra.
  ThreeLieSuperalgebra(std::string name, SuperSpace space, std::vector<Vector> structure);

  /// Fills every permutation of each stated triple by the super-skew rule.
  /// Throws Error(SkewInconsistent) when two statements (or one statement and
  /// its own symmetry) disagree.
  static ThreeLieSuperalgebra from_brackets(std::string name, SuperSpace space,
                                            const std::vector<StatedBracket>& brackets);
  static ThreeLieSuperalgebra abelian(std::string name, SuperSpace space);

  const std::string& name() const { return name_; }
  const SuperSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const WedgeBasis& wedge() const { return tables_->wedge; }

  const Vector& structure(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * dim() + j) * dim() + k];
  }
  const std::vector<Vector>& structure() const { return structure_; }

  /// Trilinear extension. Throws Error(SpaceMismatch).
  Vector bracket(std::span<const Rational> x, std::span<const Rational> y, std::span<const Rational> z) const;
  /// [X, z] for X in wedge coordinates.
  Vector bracket_wedge(std::span<const Rational> x_wedge, std::span<const Rational> z) const;
  /// Matrix of z -> [e_i ^ e_j, z] for the wedge basis element w.
  const Matrix& ad_matrix(std::size_t w) const { return tables_->ad.at(w); }
  /// [X_w, e_z] sparse.
  const SparseVector& ad_column(std::size_t w, std::size_t z) const {
    return tables_->ad_sparse[w * dim() + z];
  }
  /// [X_v, X_w]_F in wedge coordinates, sparse.
  const SparseVector& leibniz_entry(std::size_t v, std::size_t w) const {
    return tables_->leibniz[v * wedge().size() + w];
  }

  friend bool operator==(const ThreeLieSuperalgebra& a, const ThreeLieSuperalgebra& b) {
    return a.space_ == b.space_ && a.structure_ == b.structure_;
  }

 private:
  struct Tables {
    WedgeBasis wedge;
    std::vector<Matrix> ad;
    std::vector<SparseVector> ad_sparse;
    std::vector<SparseVector> leibniz;
  };
  void build_tables();

  std::string name_;
  SuperSpace space_;
  std::vector<Vector> structure_;
  std::shared_ptr<const Tables> tables_;
};

using AlgebraPtr = std::shared_ptr<const ThreeLieSuperalgebra>;

/// [X, Y]_F = [X, y1] ^ y2 + (-1)^{|y1||X|} y1 ^ [X, y2], bilinear on wedge
/// coordinates.
Vector leibniz_bracket(const ThreeLieSuperalgebra& alg, std::span<const Rational> x_wedge,
                       std::span<const Rational> y_wedge);

struct AlgebraReport {
  bool grading = true;
  bool super_skew = true;
  bool fundamental_identity = true;
  std::vector<Violation> violations;
  std::size_t violation_count = 0;
  bool ok() const { return grading && super_skew && fundamental_identity; }
};

/// Exhaustive check of the three axioms. Throws Error(DimensionCapExceeded)
/// when dim > dim_cap.
AlgebraReport verify_algebra(const ThreeLieSuperalgebra& alg, std::size_t dim_cap = kDefaultDimCap);

struct DerivationCheck {
  bool ok = true;
  std::optional<Violation> witness;
};

DerivationCheck is_superderivation(const ThreeLieSuperalgebra& alg, const GradedLinearMap& d);

struct DerivationSpace {
  AlgebraPtr algebra;
  Parity degree = Parity::Even;
  std::vector<GradedLinearMap> basis;
  std::size_t dim() const { return basis.size(); }
};

DerivationSpace derivation_space(const AlgebraPtr& alg, Parity degree);
/// Homogeneous maps of the given degree on a space, flattened in row-major
/// order over the admissible entries.
std::vector<std::pair<std::size_t, std::size_t>> admissible_entries(const SuperSpace& source,
                                                                    const SuperSpace& target, Parity degree);

/// z -> [X, z], of degree parity(X) when X is homogeneous.
GradedLinearMap adjoint_action(const ThreeLieSuperalgebra& alg, std::span<const Rational> x_wedge);

}  // namespace super3lie
