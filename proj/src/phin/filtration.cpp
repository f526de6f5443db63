#include "phinkit/phin/filtration.hpp"

#include "phinkit/error.hpp"

#include <algorithm>

namespace phinkit::phin {

IndexedFiltration::IndexedFiltration(std::size_t ambient, Orientation orientation, int first,
                                     std::vector<Subspace> steps)
    : ambient_(ambient), orientation_(orientation), first_(first), steps_(std::move(steps)) {
  for (const auto& s : steps_)
    if (s.ambient_dim() != ambient_) throw std::invalid_argument("filtration step has wrong ambient dimension");
}

IndexedFiltration IndexedFiltration::from_steps(std::size_t ambient, Orientation orientation,
                                                const std::map<int, Subspace>& steps) {
  if (steps.empty()) {
    // Nothing listed: the trivial filtration jumping at 0.
    return IndexedFiltration(ambient, orientation, 0, {Subspace::full(ambient)});
  }
  const int lo = steps.begin()->first, hi = steps.rbegin()->first;
  std::vector<Subspace> out;
  if (orientation == Orientation::decreasing) {
    if (!steps.begin()->second.is_full())
      throw PreconditionError("filtration failure", "not exhaustive: lowest listed step is not the whole space");
    for (int i = lo; i <= hi; ++i) out.push_back(steps.lower_bound(i)->second);
  } else {
    if (!steps.rbegin()->second.is_full())
      throw PreconditionError("filtration failure", "not exhaustive: highest listed step is not the whole space");
    for (int i = lo; i <= hi; ++i) out.push_back(std::prev(steps.upper_bound(i))->second);
  }
  IndexedFiltration f(ambient, orientation, lo, std::move(out));
  f.validate();
  return f;
}

Subspace IndexedFiltration::at(int i) const {
  const bool below = i < first_;
  const bool above = i > last();
  if (below || above) {
    const bool full = (orientation_ == Orientation::decreasing) == below;
    return full ? Subspace::full(ambient_) : Subspace::zero(ambient_);
  }
  return steps_[static_cast<std::size_t>(i - first_)];
}

GradedDims IndexedFiltration::graded_dims() const {
  GradedDims out;
  for (int i = first_ - 1; i <= last() + 1; ++i) {
    std::size_t g = orientation_ == Orientation::decreasing ? at(i).dim() - at(i + 1).dim()
                                                            : at(i).dim() - at(i - 1).dim();
    if (g) out[i] = g;
  }
  return out;
}

void IndexedFiltration::validate() const {
  for (int i = first_ - 1; i <= last(); ++i) {
    const Subspace lower = at(i), upper = at(i + 1);
    const bool ok = orientation_ == Orientation::decreasing ? lower.contains(upper) : upper.contains(lower);
    if (!ok) throw PreconditionError("filtration failure", "not monotone at index " + std::to_string(i));
  }
}

IndexedFiltration IndexedFiltration::mapped(const linalg::QuotientMap& q) const {
  std::vector<Subspace> out;
  for (const auto& s : steps_) out.push_back(q.image_of(s));
  return IndexedFiltration(q.dim(), orientation_, first_, std::move(out));
}

bool IndexedFiltration::is_stable_under(const QMatrix& op) const {
  return std::all_of(steps_.begin(), steps_.end(), [&](const Subspace& s) { return linalg::is_stable(op, s); });
}

bool IndexedFiltration::operator==(const IndexedFiltration& rhs) const {
  if (ambient_ != rhs.ambient_ || orientation_ != rhs.orientation_) return false;
  const int lo = std::min(first_, rhs.first_) - 1, hi = std::max(last(), rhs.last()) + 1;
  for (int i = lo; i <= hi; ++i)
    if (at(i) != rhs.at(i)) return false;
  return true;
}

} // namespace phinkit::phin
