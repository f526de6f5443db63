#pragma once

#include "phinkit/linalg/polynomial.hpp"
#include "phinkit/phin/filtration.hpp"

#include <optional>
#include <vector>

namespace phinkit::phin {

using linalg::Integer;
using linalg::Polynomial;

/// Filtered (phi, N)-module over Q with q = p^a and a weight centre d.
struct PhiNModule {
  unsigned long p = 2;
  unsigned long a = 1;
  int d = 0;
  QMatrix phi;
  QMatrix N;
  IndexedFiltration fil; ///< decreasing Hodge filtration
  std::optional<IndexedFiltration> gamma_fil; ///< decreasing, overrides the slope-derived one

  std::size_t dim() const noexcept { return phi.rows(); }
  Integer q() const;
};

/// Checks every structural invariant. Throws PreconditionError naming the
/// first violated one: "non-invertible phi", "non-nilpotent N",
/// "commutation failure", "filtration failure" or "bad parameters".
void validate(const PhiNModule& D);

/// Generalised eigenspace block of phi grouped by q-adic valuation.
struct SlopeComponent {
  Rational slope;
  Subspace space;
};

/// Decomposition of the ambient space by slopes of op, sorted by slope.
/// Irreducible factors of the characteristic polynomial whose roots have
/// several valuations are rejected with PreconditionError("mixed-slope factor").
std::vector<SlopeComponent> slope_decomposition(const QMatrix& op, unsigned long p, unsigned long a);

/// Sum of the components whose slope satisfies pred.
template <class Pred>
Subspace slope_part(const std::vector<SlopeComponent>& comps, std::size_t ambient, Pred pred) {
  Subspace out = Subspace::zero(ambient);
  for (const auto& c : comps)
    if (pred(c.slope)) out = linalg::subspace_sum(out, c.space);
  return out;
}

} // namespace phinkit::phin
