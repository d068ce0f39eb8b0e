#pragma once

#include <optional>
#include <vector>

#include "super3lie/cohomology.hpp"

namespace super3lie {

/// 0 -> P -> L -> Q -> 0 with [P, P, L] = 0. P is spanned by a subset of the
/// basis of L; Q carries the remaining basis labels and pi is the coordinate
/// projection onto them.
struct ExtensionData {
  AlgebraPtr total;                      // L
  std::vector<std::size_t> sub_indices;  // basis indices of L spanning P
  std::vector<std::size_t> quotient_indices;
  SuperSpace sub_space;                  // P
  AlgebraPtr quotient;                   // Q
  GradedLinearMap proj;                  // pi : L -> Q
  GradedLinearMap incl;                  // i : P -> L
  GradedLinearMap section;               // s : Q -> L

  /// P-coordinates of an element of L lying in i(P); Error(NotInSubspace)
  /// otherwise.
  Vector sub_coordinates(std::span<const Rational> l) const;
  /// r(l): P-coordinates of l - s(pi(l)).
  Vector retraction(std::span<const Rational> l) const;
};

/// Builds Q from L and the P-indices and validates every structural
/// invariant (pi i = 0, pi s = 1, [P,P,L] = 0, pi a homomorphism). The section
/// defaults to the coordinate inclusion. Throws Error(InvalidExtension).
ExtensionData make_extension(const AlgebraPtr& total, std::vector<std::size_t> sub_indices,
                             std::optional<Matrix> section = std::nullopt);
/// The same extension with another section. Throws Error(InvalidExtension)
/// unless s is even with pi s = 1.
ExtensionData with_section(const ExtensionData& ext, const GradedLinearMap& section);

struct BuildOptions {
  /// When false, a non-cocycle omega is accepted and the resulting bracket is
  /// left for verify_algebra to judge.
  bool require_cocycle = true;
  int level_cap = kDefaultLevelCap;
};

/// Omega(x,y,z) = -(-1)^{|y||z|} Omega(x,z,y) on all basis triples, i.e.
/// Omega is super-skew in all three arguments. Throws Error(ArityMismatch)
/// unless omega has level 2.
bool is_totally_skew(const Cochain& omega);
/// Cocycles of level 2 that are totally super-skew, in the coordinates of
/// CochainSpace(rep, 2, parity). These are exactly the Omega that define
/// extensions.
Subspace skew_cocycle_space(const RepresentationPtr& rep, Parity parity, int level_cap = kDefaultLevelCap);

/// L = Q (+) P with the bracket
///   [x+u, y+v, z+w] = [x,y,z]_Q + Omega(x,y,z) + Phi(x,y)w
///                     + (-1)^{|z|(|x|+|y|)} Phi(z,x)v + (-1)^{|x|(|y|+|z|)} Phi(y,z)u
/// and the canonical section. Throws Error(InvalidRepresentation),
/// Error(SkewInconsistent) for an omega that is not totally skew and, when
/// required, Error(NotACocycle).
ExtensionData build_extension(const RepresentationPtr& rep, const Cochain& omega, BuildOptions options = {});

/// Phi(x,y)v = [s x, s y, v]_L. With `other`, also checks that the second
/// section gives the same Phi. Throws Error(InvalidExtension).
Representation extract_phi(const ExtensionData& ext, const std::optional<GradedLinearMap>& other = std::nullopt);
/// Omega(x,y,z) = [s x, s y, s z]_L - s[x,y,z]_Q as a level-2 even cochain for
/// `rep` (normally extract_phi(ext)). Throws Error(NotInSubspace).
Cochain extract_omega(const ExtensionData& ext, const RepresentationPtr& rep);

/// s - i lambda for a level-1 even cochain lambda : Q -> P.
GradedLinearMap shifted_section(const ExtensionData& ext, const Cochain& lambda);
/// s1 - s2 as a level-1 even cochain Q -> P.
Cochain section_difference(const ExtensionData& ext, const GradedLinearMap& s1, const GradedLinearMap& s2,
                           const RepresentationPtr& rep);

struct HomomorphismCheck {
  bool ok = true;
  std::optional<Violation> witness;
};
/// [s x, s y, s z]_L = s [x, y, z]_Q on all basis triples.
HomomorphismCheck is_homomorphic_section(const ExtensionData& ext, const GradedLinearMap& section);

struct SplitResult {
  Cochain xi;
  GradedLinearMap section;
  HomomorphismCheck homomorphism;
};
/// Solves delta(xi) = Omega for even level-1 xi; on success s' = s - xi is
/// returned together with its homomorphism check. Nothing when [Omega] != 0.
std::optional<SplitResult> is_split(const ExtensionData& ext, int level_cap = kDefaultLevelCap);

struct SplitImplication {
  std::size_t cohomology_dim = 0;  // even skew cocycles of level 2 modulo coboundaries
  bool applicable = false;         // cohomology_dim == 0
  bool split = false;
  bool holds = true;               // !applicable || split (with a homomorphic s')
};
SplitImplication h1_zero_implies_split(const ExtensionData& ext, int level_cap = kDefaultLevelCap);

}  // namespace super3lie
