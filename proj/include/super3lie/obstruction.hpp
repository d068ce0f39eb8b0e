#pragma once

#include <optional>
#include <string>
#include <vector>

#include "super3lie/extension.hpp"

namespace super3lie {

/// (D_p, D_q) of a common degree: D_p on the module P, D_q a superderivation
/// of Q.
struct DerivationPair {
  GradedLinearMap d_p;
  GradedLinearMap d_q;
  Parity degree = Parity::Even;

  friend bool operator==(const DerivationPair&, const DerivationPair&) = default;
};

/// Checks degrees and that d_q is a superderivation of the algebra of `rep`.
/// Throws Error(SpaceMismatch), Error(NotHomogeneous) or
/// Error(NotADerivation).
DerivationPair make_pair(const Representation& rep, GradedLinearMap d_p, GradedLinearMap d_q);
DerivationPair zero_pair(const Representation& rep, Parity degree);
/// (Phi(a^b), ad(a^b)) for a wedge basis index w.
DerivationPair inner_pair(const Representation& rep, std::size_t w);

struct CompatibilityCheck {
  bool ok = true;
  std::optional<Violation> witness;  // tuple (x, y, row, column)
};

/// D_p Phi(x,y) - (-1)^{a(|x|+|y|)} Phi(x,y) D_p = Phi(D_q x, y) + (-1)^{a|x|} Phi(x, D_q y)
/// on all basis pairs. Throws Error(SpaceMismatch).
CompatibilityCheck is_compatible(const Representation& rep, const DerivationPair& pair);

struct CompatiblePairSpace {
  RepresentationPtr rep;
  Parity degree = Parity::Even;
  std::vector<DerivationPair> basis;
  std::size_t dim() const { return basis.size(); }
};

/// All compatible pairs of one degree, as the kernel of a linear system in the
/// entries of D_p and the coordinates of D_q in the derivation basis.
CompatiblePairSpace compatible_pair_space(const RepresentationPtr& rep, Parity degree);

/// Componentwise D D' - (-1)^{a a'} D' D. Throws Error(SpaceMismatch).
DerivationPair pair_supercommutator(const DerivationPair& a, const DerivationPair& b);

/// (D.f)(a_1..a_m) = D_p f(a) - (-1)^{a|f|} sum_i (-1)^{a(|a_1|+...+|a_{i-1}|)} f(.., D_q a_i, ..)
/// on the element slots of a cochain of any level. Parity |f| + a.
Cochain derivation_action(const DerivationPair& pair, const Cochain& f);
/// Ob = D_p Omega - Omega(D_q x, y, z) - ... for a level-2 Omega. Throws
/// Error(SpaceMismatch) or Error(ArityMismatch).
Cochain obstruction_cochain(const Representation& rep, const Cochain& omega, const DerivationPair& pair);

/// Class of D.z in h.part(|z| + a) for a cocycle z. Throws
/// Error(NotCompatible) or Error(NotACocycle).
Vector psi_action(const GradedCohomology& h, const DerivationPair& pair, const Cochain& cocycle);
/// Psi on the whole graded cohomology; columns and rows ordered even
/// representatives first, then odd. Throws Error(NotCompatible).
Matrix psi_matrix(const GradedCohomology& h, const DerivationPair& pair);

struct ObstructionClass {
  Cochain ob;
  Vector coordinates;  // in the representatives of level-2 cohomology of parity `degree`
  bool trivial = true;
};

/// [Ob] for the section of `ext`. Throws Error(NotCompatible).
ObstructionClass extension_obstruction(const ExtensionData& ext, const DerivationPair& pair,
                                       int level_cap = kDefaultLevelCap);

struct ExtensibilityReport {
  bool derivation = true;     // D_l superderivation of L
  bool sub_square = true;     // i D_p = D_l i
  bool quotient_square = true;  // pi D_l = D_q pi
  bool mu_in_sub = true;      // D_l s(x) - s(D_q x) lies in P
  bool compatible = true;     // pair compatible with the extracted Phi
  std::vector<Violation> witnesses;
  bool extensible() const { return derivation && sub_square && quotient_square && mu_in_sub; }
  /// A passing witness forces compatibility.
  bool consistent() const { return !extensible() || compatible; }
};

ExtensibilityReport check_extensible_witness(const ExtensionData& ext, const DerivationPair& pair,
                                             const GradedLinearMap& d_l);

struct LiftedDerivation {
  DerivationPair pair;
  GradedLinearMap d_l;
  Cochain mu;
  std::size_t solution_dim = 0;  // dim of the kernel of delta at level 1 (even)
  ExtensibilityReport report;
};

/// Solves Ob = delta(mu) and sets D_l = s D_q pi + i mu pi + i D_p r. Throws
/// Error(OddPairUnsupported), Error(NotCompatible) or Error(NotExtensible).
LiftedDerivation lift_pair(const ExtensionData& ext, const DerivationPair& pair, int level_cap = kDefaultLevelCap);

}  // namespace super3lie
