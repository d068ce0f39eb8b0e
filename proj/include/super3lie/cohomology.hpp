#pragma once

#include <optional>
#include <vector>

#include "super3lie/cochain.hpp"

namespace super3lie {

/// Kernel of the coboundary leaving (level, parity).
Subspace cocycle_space(const RepresentationPtr& rep, int level, Parity parity, int level_cap = kDefaultLevelCap);
/// Image of the coboundary arriving at (level, parity); zero at level 1.
Subspace coboundary_space(const RepresentationPtr& rep, int level, Parity parity, int level_cap = kDefaultLevelCap);
bool is_cocycle(const Cochain& z, int level_cap = kDefaultLevelCap);

/// Cocycles modulo coboundaries at one level and parity. The level is the
/// internal arity key; in the paper's naming this is H^{level-1}, built from
/// level-cochains (elements of C^{level-1}).
class CohomologySpace {
 public:
  CohomologySpace(RepresentationPtr rep, int level, Parity parity, int level_cap = kDefaultLevelCap);

  const RepresentationPtr& rep_ptr() const { return rep_; }
  int level() const { return level_; }
  Parity parity() const { return parity_; }
  const CochainSpace& space() const { return space_; }
  const Subspace& cocycles() const { return cocycles_; }
  const Subspace& coboundaries() const { return coboundaries_; }
  std::size_t dim() const { return quotient_.dim(); }
  /// Canonical cocycles whose classes form a basis.
  std::vector<Cochain> representatives() const;

  /// Coordinates of [z] in the representative basis. Throws
  /// Error(NotACocycle).
  Vector class_of(const Cochain& z) const;
  /// z = delta(lambda) solvable. Throws Error(NotACocycle).
  bool is_trivial(const Cochain& z) const;
  /// One lambda with delta(lambda) = z (free coordinates zero), or nothing.
  /// At level 1 only z = 0 is a coboundary and lambda is absent.
  std::optional<Cochain> solve_coboundary(const Cochain& z) const;
  /// Dimension of the solution space of delta(lambda) = 0 one level down.
  std::size_t lower_kernel_dim() const;

 private:
  void require_cocycle(const Vector& coords) const;

  RepresentationPtr rep_;
  int level_;
  Parity parity_;
  CochainSpace space_;
  std::optional<CoboundaryOperator> incoming_;
  Subspace cocycles_;
  Subspace coboundaries_;
  QuotientData quotient_;
};

/// Both parities of one level.
struct GradedCohomology {
  CohomologySpace even;
  CohomologySpace odd;
  std::size_t dim() const { return even.dim() + odd.dim(); }
  const CohomologySpace& part(Parity p) const { return p == Parity::Even ? even : odd; }
};

GradedCohomology graded_cohomology(const RepresentationPtr& rep, int level, int level_cap = kDefaultLevelCap);

}  // namespace super3lie
