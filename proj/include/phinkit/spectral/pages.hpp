#pragma once

#include "phinkit/spectral/complex.hpp"

#include <map>
#include <optional>
#include <utility>

namespace phinkit::spectral {

using Bidegree = std::pair<int, int>; ///< (p, q), total degree p + q

/// The r-th page of the spectral sequence of a filtered complex.
struct Page {
  int r = 0;
  std::map<Bidegree, std::size_t> dims;     ///< nonzero entries only
  std::map<Bidegree, QMatrix> differentials; ///< d_r out of (p, q) into (p + r, q - r + 1), nonzero maps only

  std::size_t dim(int p, int q) const;
  long euler_characteristic() const;
  bool differentials_vanish() const { return differentials.empty(); }
};

/// E_r^{p} = Z_r^p / (Z_{r-1}^{p+1} + d Z_{r-1}^{p-r+1}) with
/// Z_r^p = F^p cap d^{-1}(F^{p+r}); d_r is induced by d.
Page e_page(const FilteredComplex& fc, int r);

/// Number of pages after which every differential vanishes for good; the
/// filtration length bounds it.
int stable_page(const FilteredComplex& fc);

/// E_infinity, i.e. the page at stable_page.
Page e_infinity(const FilteredComplex& fc);

/// Image of F^p cap Z^n in H^n, in the coordinates of GradedComplex::cohomology(n).
IndexedFiltration abutment_filtration(const FilteredComplex& fc, int n);

struct DegenerationResult {
  int page = 1;         ///< smallest r with d_s = 0 for r <= s <= bound
  bool censored = false; ///< d_bound itself is nonzero
};
DegenerationResult degeneration_page(const FilteredComplex& fc, int bound);

/// True iff for every r >= 2 and every weight w the pieces E_r^{p,q}[w] and
/// E_r^{p+r,q-r+1}[w] are never both nonzero, so every d_r with r >= 2 is
/// forced to vanish by the labels. Requires weight labels.
bool equivariant_degeneration_check(const FilteredComplex& fc);

/// For labels read as phi = q^w on basis vectors: checks that phi acts as
/// q^{n-p} on gr^p H^n for every p, i.e. (phi - q^{n-p}) F^p subset F^{p+1}.
bool abutment_frobenius_check(const FilteredComplex& fc, int n, const linalg::Integer& q);

} // namespace phinkit::spectral
