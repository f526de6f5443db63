#pragma once

#include "phinkit/spectral/pages.hpp"

#include <map>
#include <utility>
#include <vector>

namespace phinkit::spectral {

/// Strata of a semistable special fibre by depth: level m (m >= 1) lists the
/// m-fold intersections, each with the dimensions of its cohomology. Maps
/// are block matrices over a whole level; missing maps are zero.
struct SteenbrinkDatum {
  int d = 0; ///< centre degree, informational
  std::vector<std::vector<std::vector<std::size_t>>> levels; ///< levels[m-1][stratum][a]
  /// key (m, a): H^a(level m) -> H^a(level m+1), signs already included
  std::map<std::pair<int, int>, QMatrix> restriction;
  /// key (m, a): H^a(level m) -> H^{a+2}(level m-1), m >= 2
  std::map<std::pair<int, int>, QMatrix> gysin;

  int max_level() const noexcept { return static_cast<int>(levels.size()); }
  std::size_t level_dim(int m, int a) const;
  QMatrix restriction_map(int m, int a) const;
  QMatrix gysin_map(int m, int a) const;
};

/// Basis vector of the total complex: copy j >= 0 of H^a of a level-m stratum
/// with m >= j + 1; it sits in total degree a + m - 1 and weight k = m - 2j - 1.
struct SteenbrinkBasis {
  int j;
  int m;
  std::size_t stratum;
  int a;
  std::size_t index; ///< basis index inside H^a of the stratum
  int k() const noexcept { return m - 2 * j - 1; }
  bool operator<(const SteenbrinkBasis& o) const;
  bool operator==(const SteenbrinkBasis& o) const = default;
};

struct SteenbrinkComplex {
  FilteredComplex fc;                                ///< F^p = P_{-p}
  std::vector<std::vector<SteenbrinkBasis>> basis;  ///< per total degree
};

/// Total complex with D = rho + (-1)^j gamma, where rho raises (j, m) to
/// (j+1, m+1) and gamma lowers m by one at fixed j. Throws
/// PreconditionError("inconsistent strata maps") when D o D != 0.
SteenbrinkComplex steenbrink_double_complex(const SteenbrinkDatum& sd);

/// The shift (j, m) -> (j+1, m) (when m >= j + 2) with sign (-1)^j, which
/// anticommutes with D, on the total complex in degree n.
QMatrix monodromy_chain_map(const SteenbrinkComplex& sc, int n);

/// Induced endomorphism of H^n in the coordinates of GradedComplex::cohomology(n).
QMatrix monodromy_endomorphism(const SteenbrinkComplex& sc, int n);

/// Increasing weight filtration P_k on H^n (k is the weight relative to n).
IndexedFiltration weight_filtration_on_cohomology(const SteenbrinkComplex& sc, int n);

} // namespace phinkit::spectral
