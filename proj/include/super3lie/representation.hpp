#pragma once

#include <memory>
#include <vector>

#include "super3lie/algebra.hpp"

namespace super3lie {

/// Phi : wedge^2 Q -> gl(V), stored on the canonical wedge pairs only so the
/// super-skew axiom holds by construction.
class Representation {
 public:
  /// phi[w] is the module endomorphism for wedge basis element w. Throws
  /// Error(SpaceMismatch) on shape errors.
  Representation(AlgebraPtr algebra, SuperSpace module, std::vector<Matrix> phi);

  /// Throws Error(InvalidAlgebra) unless verify_algebra passes.
  static Representation adjoint(const AlgebraPtr& algebra);
  static Representation zero(const AlgebraPtr& algebra, SuperSpace module);

  const ThreeLieSuperalgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const SuperSpace& module() const { return module_; }
  std::size_t module_dim() const { return module_.dim(); }
  const Matrix& phi(std::size_t w) const { return phi_.at(w); }
  const std::vector<Matrix>& phi() const { return phi_; }
  /// Phi(e_i, e_j) for any ordered pair.
  Matrix phi_pair(std::size_t i, std::size_t j) const;
  /// Phi(X) for X in wedge coordinates.
  Matrix phi_of(std::span<const Rational> x_wedge) const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return *a.algebra_ == *b.algebra_ && a.module_ == b.module_ && a.phi_ == b.phi_;
  }

 private:
  AlgebraPtr algebra_;
  SuperSpace module_;
  std::vector<Matrix> phi_;
};

using RepresentationPtr = std::shared_ptr<const Representation>;

/// Phi(X)(v), bilinear. Throws Error(SpaceMismatch).
Vector phi_eval(const Representation& rep, std::span<const Rational> x_wedge, std::span<const Rational> v);

struct RepresentationReport {
  bool degree = true;
  bool skew = true;
  bool axiom3 = true;
  bool axiom4 = true;
  std::vector<Violation> violations;
  std::size_t violation_count = 0;
  bool ok() const { return degree && skew && axiom3 && axiom4; }
};

RepresentationReport verify_representation(const Representation& rep, std::size_t dim_cap = kDefaultDimCap);

/// Phi1 (+) Phi2 on V1 (+) V2, block diagonal.
Representation direct_sum(const Representation& a, const Representation& b);

}  // namespace super3lie
