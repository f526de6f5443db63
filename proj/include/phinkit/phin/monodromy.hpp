#pragma once

#include "phinkit/phin/module.hpp"

#include <vector>

namespace phinkit::phin {

/// Increasing: index i >= 0 holds ker N^{i+1}.
IndexedFiltration kernel_filtration(const QMatrix& N);
/// Decreasing: index j >= 0 holds im N^j.
IndexedFiltration image_filtration(const QMatrix& N);

/// Sum over i >= 0 of ker N^{i+1} intersected with im N^{i-r}, where a
/// non-positive power of N means the identity.
Subspace kernel_image_convolution(const QMatrix& N, int r);

/// Increasing filtration M_r, r in [-d, d]. Throws
/// PreconditionError("N^{d+1} != 0") when N is not killed by its (d+1)-st power.
IndexedFiltration monodromy_filtration(const QMatrix& N, int d);
inline IndexedFiltration monodromy_filtration(const PhiNModule& D) { return monodromy_filtration(D.N, D.d); }

/// P_r = sum of slope components with 2 * slope <= d + r.
IndexedFiltration weight_filtration(const PhiNModule& D);
/// Increasing filtration by slope; the stored index of each step is its
/// position in `slopes`.
struct SlopeFiltration {
  std::vector<Rational> slopes;
  std::vector<Subspace> steps; ///< steps[k] = sum of components with slope <= slopes[k]
};
SlopeFiltration slope_filtration(const PhiNModule& D);
/// Decreasing F_Gamma^r = slope <= d - r part, unless the module supplies one.
IndexedFiltration gamma_filtration(const PhiNModule& D);

struct StepDiff {
  int r;
  std::size_t dim_M;
  std::size_t dim_P;
  bool equal;
};
struct MonodromyWeightReport {
  bool equal = false;
  std::vector<StepDiff> steps;
};
MonodromyWeightReport monodromy_weight_check(const PhiNModule& D);

struct KernelImageReport {
  bool h1 = false; ///< both convolution formulas agree for every j
  bool h2 = false; ///< ker N = F^d
  bool conclusion_checked = false;
  bool conclusion_holds = false; ///< ker N^{d+1-j} = im N^j = F^j for all j (only when checked)
  std::vector<std::size_t> F_dims;   ///< dim F^j, j = 0..d+1
  std::vector<std::size_t> alt_dims; ///< second formula, j = 0..d+1
};
/// F^j = M_{d-2j} and, alternatively, the convolution shifted by one.
KernelImageReport kernel_image_check(const QMatrix& N, int d);

} // namespace phinkit::phin
