#pragma once

#include "phinkit/spectral/complex.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace phinkit::spectral {

/// Subsets of the component set {0, ..., n-1} as bit masks; bit i is component i.
using Mask = std::uint32_t;

/// Combinatorial covering data: for each nonempty J the graded dimensions of
/// the cohomology of the stratum M_J (absent means zero), and for each J1 in J2
/// with |J2| = |J1| + 1 the restriction maps H^s(M_J1) -> H^s(M_J2).
struct NerveDatum {
  std::size_t components = 0;
  std::map<Mask, std::vector<std::size_t>> strata;   ///< dims indexed by degree s
  std::map<std::pair<Mask, Mask>, std::vector<QMatrix>> restrictions; ///< one matrix per degree s
  std::map<Mask, std::vector<int>> weights;          ///< optional phi-weight per degree; default s

  std::size_t dim(Mask J, std::size_t s) const;
  std::size_t max_degree() const; ///< largest s with some nonzero stratum dimension, plus one
  /// Restriction for a covering pair; identity when unspecified and the
  /// dimensions agree, zero when either side vanishes.
  QMatrix restriction(Mask from, Mask to, std::size_t s) const;
  /// Composite restriction along any chain from J1 up to J2.
  QMatrix restriction_chain(Mask from, Mask to, std::size_t s) const;
  int weight(Mask J, std::size_t s) const;

  /// Throws InvalidInput for malformed data and
  /// PreconditionError("non-functorial restriction maps") for squares that do not commute.
  void validate() const;
};

/// Flags J_0 < J_1 < ... < J_m of nonempty subsets of an n-element set
/// with all inclusions strict, in lexicographic order of their masks.
std::vector<std::vector<Mask>> lambda_flags(std::size_t n, std::size_t m);

/// Cech double complex: degree r holds the (r+1)-fold strata, the
/// differential is the alternating sum of restrictions (sign by position of
/// the added component), the vertical differential is zero, and the
/// filtration is by r. Basis vectors are labelled with their phi-weight.
FilteredComplex cech_complex(const NerveDatum& nd);

/// Complex over flags: C^m = sum over Lambda_m of the cohomology of M_{J_m},
/// with differential the alternating sum of the face maps.
GradedComplex lambda_complex(const NerveDatum& nd, std::size_t s);
/// The plain Cech complex of row s.
GradedComplex cech_row(const NerveDatum& nd, std::size_t s);

struct CechComparison {
  bool equal = false;
  std::vector<std::size_t> cech_dims;   ///< total cohomology dims
  std::vector<std::size_t> lambda_dims;
};
CechComparison cech_vs_total_check(const NerveDatum& nd);

} // namespace phinkit::spectral
