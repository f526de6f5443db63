#pragma once

#include "phinkit/linalg/subspace.hpp"

#include <map>
#include <vector>

namespace phinkit::phin {

using linalg::QMatrix;
using linalg::Rational;
using linalg::Subspace;

/// Nonzero graded dimensions keyed by filtration index.
using GradedDims = std::map<int, std::size_t>;

enum class Orientation { increasing, decreasing };

/// Z-indexed monotone chain of subspaces with finitely many stored steps.
/// Outside the stored window a decreasing filtration is the full space below
/// and zero above; an increasing one is zero below and full above.
class IndexedFiltration {
public:
  IndexedFiltration() = default;
  IndexedFiltration(std::size_t ambient, Orientation orientation, int first, std::vector<Subspace> steps);

  /// Builds from explicitly listed indices. Decreasing: F^i equals the
  /// listed step at the smallest key >= i, and zero past the largest key;
  /// the smallest key must carry the full space. Increasing is the mirror
  /// image. Throws PreconditionError("filtration failure") otherwise.
  static IndexedFiltration from_steps(std::size_t ambient, Orientation orientation,
                                      const std::map<int, Subspace>& steps);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  Orientation orientation() const noexcept { return orientation_; }
  int first() const noexcept { return first_; }
  int last() const noexcept { return first_ + static_cast<int>(steps_.size()) - 1; }
  Subspace at(int i) const;

  /// Nonzero graded dimensions: dim F^i/F^{i+1} (decreasing) or
  /// dim F_i/F_{i-1} (increasing).
  GradedDims graded_dims() const;

  /// Throws PreconditionError("filtration failure") unless monotone.
  void validate() const;

  /// Image of every step under a quotient map.
  IndexedFiltration mapped(const linalg::QuotientMap& q) const;
  /// True when op maps every step into itself.
  bool is_stable_under(const QMatrix& op) const;

  /// Step-by-step equality over all indices.
  bool operator==(const IndexedFiltration& rhs) const;

private:
  std::size_t ambient_ = 0;
  Orientation orientation_ = Orientation::decreasing;
  int first_ = 0;
  std::vector<Subspace> steps_;
};

} // namespace phinkit::phin
