#pragma once

#include "phinkit/drinfeld/counting.hpp"
#include "phinkit/drinfeld/finite_field.hpp"

#include <vector>

namespace phinkit::drinfeld {

/// Betti numbers b_0, b_1, ... (index = cohomological degree).
using PoincarePoly = std::vector<Integer>;

/// Complement of the given hyperplanes (normal vectors over F, length r+1)
/// in P^r, by deletion and restriction: adding a hyperplane H to an
/// arrangement adds t times the complement of the restricted arrangement on
/// H, which is exact because all pieces are pure. The empty arrangement
/// gives the classes of P^r.
PoincarePoly deletion_restriction_poincare(const FiniteField& F, std::size_t r, const std::vector<FVector>& normals);

/// Same complement via the Moebius function of the intersection lattice:
/// sum over flats X of mu(X) (-t)^{codim X}, divided by 1 + t. Throws
/// PreconditionError("budget exceeded") beyond `flat_budget` flats.
PoincarePoly moebius_poincare(const FiniteField& F, std::size_t r, const std::vector<FVector>& normals,
                              std::size_t flat_budget = 20000);

struct ArrangementReport {
  PoincarePoly betti;            ///< agreed result
  PoincarePoly deletion_restriction;
  PoincarePoly moebius;
  bool cross_check = false;
};

/// P^r minus all F_q-rational hyperplanes, computed both ways. Throws
/// CrossCheckError when the two methods disagree.
ArrangementReport rational_arrangement_poincare(long r, unsigned q, std::size_t flat_budget = 20000);

/// prod_{k=1..r} (1 + q^k t).
PoincarePoly arrangement_closed_form(long r, const Integer& q);

} // namespace phinkit::drinfeld
