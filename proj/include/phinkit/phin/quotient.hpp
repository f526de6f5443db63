#pragma once

#include "phinkit/phin/module.hpp"

#include <string>
#include <vector>

namespace phinkit::phin {

struct CbarQuotient {
  Subspace C;                    ///< phi-stable complement of the slope-0 part of ker N (0 for odd d)
  Subspace slope_zero_kernel;    ///< slope-0 part of ker N
  linalg::QuotientMap projection;
  PhiNModule Dbar;               ///< D / C with induced operators and filtrations
};

/// The Hodge filtration and the Gamma filtration (slope-derived unless the
/// module supplies one) are both pushed to the quotient.
CbarQuotient cbar_quotient(const PhiNModule& D);

struct ClauseResult {
  bool pass = false;
  std::string detail;
};

struct QuotientReport {
  std::size_t dim_C = 0;
  bool C_meets_upper_gamma_trivially = true; ///< C intersect F_Gamma^{d/2+1} = 0 (even d)
  bool C_inside_middle_gamma = true;         ///< C inside F_Gamma^{d/2} (even d)
  bool phi_scalar_on_C = true;               ///< phi = q^{d/2} on C (even d)
  bool kernel_passes_to_quotient = true;     ///< image of ker N equals ker Nbar
  ClauseResult opposite;    ///< Hodge and Gamma filtrations on Dbar are opposite
  ClauseResult frobenius;   ///< phi = q^{d-r} on the Gamma-graded pieces of Dbar
  ClauseResult kernel_image;///< Gamma^r = ker Nbar^{d+1-r} = im Nbar^r
  std::vector<std::size_t> gamma_graded_dims; ///< dim Fbar_Gamma^r / Fbar_Gamma^{r+1}, r = 0..d
};

QuotientReport quotient_check(const PhiNModule& D);

} // namespace phinkit::phin
