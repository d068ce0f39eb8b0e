#include "super3lie/cohomology.hpp"

#include "super3lie/errors.hpp"

namespace super3lie {

Subspace cocycle_space(const RepresentationPtr& rep, int level, Parity parity, int level_cap) {
  return kernel_basis(coboundary_operator(rep, level, parity, level_cap).matrix);
}

Subspace coboundary_space(const RepresentationPtr& rep, int level, Parity parity, int level_cap) {
  if (level <= 1) return Subspace(CochainSpace(rep, level, parity).dim());
  return image(coboundary_operator(rep, level - 1, parity, level_cap).matrix);
}

bool is_cocycle(const Cochain& z, int level_cap) { return coboundary(z, level_cap).is_zero(); }

namespace {

std::optional<CoboundaryOperator> incoming_operator(const RepresentationPtr& rep, int level, Parity parity,
                                                    int level_cap) {
  if (level <= 1) return std::nullopt;
  return coboundary_operator(rep, level - 1, parity, level_cap);
}

}  // namespace

CohomologySpace::CohomologySpace(RepresentationPtr rep, int level, Parity parity, int level_cap)
    : rep_(std::move(rep)),
      level_(level),
      parity_(parity),
      space_(rep_, level_, parity_),
      incoming_(incoming_operator(rep_, level_, parity_, level_cap)),
      cocycles_(cocycle_space(rep_, level_, parity_, level_cap)),
      coboundaries_(incoming_ ? image(incoming_->matrix) : Subspace(space_.dim())),
      quotient_(cocycles_, coboundaries_) {}

std::vector<Cochain> CohomologySpace::representatives() const {
  std::vector<Cochain> out;
  for (const Vector& v : quotient_.representatives()) out.push_back(space_.cochain(v));
  return out;
}

void CohomologySpace::require_cocycle(const Vector& coords) const {
  if (!cocycles_.contains(coords)) throw Error(ErrorKind::NotACocycle, "cochain is not a cocycle");
}

Vector CohomologySpace::class_of(const Cochain& z) const {
  Vector coords = space_.coordinates(z);
  require_cocycle(coords);
  return quotient_.reduce(coords);
}

bool CohomologySpace::is_trivial(const Cochain& z) const {
  Vector coords = space_.coordinates(z);
  require_cocycle(coords);
  if (!incoming_) return is_zero(coords);
  return solve(incoming_->matrix, coords).has_value();
}

std::optional<Cochain> CohomologySpace::solve_coboundary(const Cochain& z) const {
  Vector coords = space_.coordinates(z);
  if (!incoming_) return std::nullopt;
  auto x = solve(incoming_->matrix, coords);
  if (!x) return std::nullopt;
  return incoming_->source.cochain(*x);
}

std::size_t CohomologySpace::lower_kernel_dim() const {
  if (!incoming_) return 0;
  return kernel_basis(incoming_->matrix).dim();
}

GradedCohomology graded_cohomology(const RepresentationPtr& rep, int level, int level_cap) {
  return {CohomologySpace(rep, level, Parity::Even, level_cap), CohomologySpace(rep, level, Parity::Odd, level_cap)};
}

}  // namespace super3lie
