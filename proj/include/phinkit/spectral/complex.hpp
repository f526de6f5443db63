#pragma once

#include "phinkit/phin/filtration.hpp"

#include <vector>

namespace phinkit::spectral {

using linalg::QMatrix;
using linalg::QuotientMap;
using linalg::Rational;
using linalg::Subspace;
using phin::IndexedFiltration;

/// Bounded cochain complex of finite-dimensional Q-spaces in degrees lo..hi.
class GradedComplex {
public:
  GradedComplex() = default;
  /// diffs[k] maps degree lo+k to lo+k+1 and has shape dims[k+1] x dims[k]
  /// (0 rows for the last degree). Throws InvalidInput on shape errors and
  /// PreconditionError("d o d != 0") when consecutive maps do not compose to 0.
  GradedComplex(int lo, std::vector<std::size_t> dims, std::vector<QMatrix> diffs);

  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(dims_.size()) - 1; }
  std::size_t dim(int n) const;
  /// Differential out of degree n (zero map outside the stored range).
  QMatrix d(int n) const;

  Subspace cocycles(int n) const;
  Subspace coboundaries(int n) const;
  std::size_t cohomology_dim(int n) const;
  /// Coordinates on H^n = Z^n / B^n. Deterministic for a given complex.
  QuotientMap cohomology(int n) const;

private:
  int lo_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<QMatrix> diffs_;
};

/// Cochain complex with a decreasing filtration in each degree and optional
/// integer weight labels on basis vectors.
struct FilteredComplex {
  GradedComplex complex;
  std::vector<IndexedFiltration> fil;   ///< fil[n - lo], decreasing
  std::vector<std::vector<int>> weights; ///< empty, or weights[n - lo][basis index]

  Subspace F(int p, int n) const;
  /// Smallest and largest p with a possibly nonzero graded piece.
  int p_min() const;
  int p_max() const;
  bool has_weights() const noexcept { return !weights.empty(); }

  /// Throws PreconditionError("filtration/differential incompatibility")
  /// unless d(F^p) lies in F^p, and PreconditionError("label-inconsistent
  /// differential") when weights are present and not respected by d or by
  /// the filtration.
  void validate() const;

  /// Sub-complex spanned by basis vectors of weight w, with the induced filtration.
  FilteredComplex weight_part(int w) const;
  std::vector<int> weight_values() const;
};

/// Builds a filtered complex whose filtration is given by an integer level
/// per basis vector: F^p is spanned by the basis vectors of level >= p.
FilteredComplex filter_by_levels(GradedComplex complex, const std::vector<std::vector<int>>& levels);

} // namespace phinkit::spectral
