#pragma once

#include "phinkit/linalg/polynomial.hpp"

#include <vector>

namespace phinkit::linalg {

struct Factor {
  Polynomial poly; ///< monic, irreducible over Q
  unsigned multiplicity = 1;
};

/// Factorisation over Q into monic irreducibles: square-free decomposition,
/// then rational roots, then Kronecker's interpolation search for the
/// remaining parts. The search is exponential in the degree; `budget` bounds
/// the number of candidate interpolations tried (CrossCheckError when hit).
std::vector<Factor> factor_rational(const Polynomial& f, std::size_t budget = 2'000'000);

/// Primitive integer polynomial with positive leading coefficient, same roots.
std::vector<Integer> primitive_part(const Polynomial& f);

/// Positive divisors of |n| (n != 0) by trial division.
std::vector<Integer> divisors(const Integer& n);

} // namespace phinkit::linalg
