#include "phinkit/spectral/complex.hpp"

#include "phinkit/error.hpp"

#include <algorithm>
#include <set>

namespace phinkit::spectral {

GradedComplex::GradedComplex(int lo, std::vector<std::size_t> dims, std::vector<QMatrix> diffs)
    : lo_(lo), dims_(std::move(dims)), diffs_(std::move(diffs)) {
  if (diffs_.size() != dims_.size()) throw InvalidInput("complex needs one differential per degree");
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    const std::size_t target = k + 1 < dims_.size() ? dims_[k + 1] : 0;
    if (diffs_[k].rows() != target || diffs_[k].cols() != dims_[k])
      throw InvalidInput("differential out of degree " + std::to_string(lo_ + static_cast<int>(k)) +
                         " has the wrong shape");
  }
  for (std::size_t k = 0; k + 1 < dims_.size(); ++k)
    if (!(diffs_[k + 1] * diffs_[k]).is_zero())
      throw PreconditionError("d o d != 0", "at degree " + std::to_string(lo_ + static_cast<int>(k)));
}

std::size_t GradedComplex::dim(int n) const {
  return n < lo_ || n > hi() ? 0 : dims_[static_cast<std::size_t>(n - lo_)];
}

QMatrix GradedComplex::d(int n) const {
  if (n < lo_ || n > hi()) return QMatrix(dim(n + 1), dim(n));
  return diffs_[static_cast<std::size_t>(n - lo_)];
}

Subspace GradedComplex::cocycles(int n) const { return linalg::kernel(d(n)); }
Subspace GradedComplex::coboundaries(int n) const { return linalg::image(d(n - 1)); }
std::size_t GradedComplex::cohomology_dim(int n) const { return cocycles(n).dim() - coboundaries(n).dim(); }
QuotientMap GradedComplex::cohomology(int n) const { return QuotientMap(cocycles(n), coboundaries(n)); }

Subspace FilteredComplex::F(int p, int n) const {
  if (n < complex.lo() || n > complex.hi()) return Subspace::zero(0);
  return fil[static_cast<std::size_t>(n - complex.lo())].at(p);
}

int FilteredComplex::p_min() const {
  int out = 0;
  bool any = false;
  for (const auto& f : fil) {
    out = any ? std::min(out, f.first() - 1) : f.first() - 1;
    any = true;
  }
  return out;
}

int FilteredComplex::p_max() const {
  int out = 0;
  bool any = false;
  for (const auto& f : fil) {
    out = any ? std::max(out, f.last()) : f.last();
    any = true;
  }
  return out;
}

void FilteredComplex::validate() const {
  const int lo = complex.lo(), hi = complex.hi();
  if (fil.size() != static_cast<std::size_t>(hi - lo + 1))
    throw InvalidInput("filtered complex needs one filtration per degree");
  for (int n = lo; n <= hi; ++n) {
    const auto& f = fil[static_cast<std::size_t>(n - lo)];
    if (f.ambient_dim() != complex.dim(n) || f.orientation() != phin::Orientation::decreasing)
      throw InvalidInput("filtration in degree " + std::to_string(n) + " does not match the complex");
    f.validate();
  }
  for (int n = lo; n <= hi; ++n)
    for (int p = p_min(); p <= p_max() + 1; ++p)
      if (n < hi && !F(p, n + 1).contains(linalg::apply(complex.d(n), F(p, n))))
        throw PreconditionError("filtration/differential incompatibility",
                                "d does not preserve F^" + std::to_string(p) + " in degree " + std::to_string(n));
  if (!has_weights()) return;
  if (weights.size() != fil.size()) throw InvalidInput("weight labels need one list per degree");
  for (int n = lo; n <= hi; ++n) {
    const auto& w = weights[static_cast<std::size_t>(n - lo)];
    if (w.size() != complex.dim(n)) throw InvalidInput("weight label count does not match the degree dimension");
    const QMatrix dn = complex.d(n);
    for (std::size_t i = 0; i < dn.rows(); ++i)
      for (std::size_t j = 0; j < dn.cols(); ++j)
        if (dn(i, j) != 0 && weights[static_cast<std::size_t>(n + 1 - lo)][i] != w[j])
          throw PreconditionError("label-inconsistent differential",
                                  "d mixes weights in degree " + std::to_string(n));
  }
  // The filtration must split along the weight decomposition.
  for (int n = lo; n <= hi; ++n) {
    const auto& w = weights[static_cast<std::size_t>(n - lo)];
    for (int p = p_min(); p <= p_max(); ++p) {
      Subspace split = Subspace::zero(complex.dim(n));
      for (int v : std::set<int>(w.begin(), w.end())) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < w.size(); ++i)
          if (w[i] == v) idx.push_back(i);
        split = linalg::subspace_sum(split,
                                     linalg::subspace_intersect(F(p, n), Subspace::coordinate(w.size(), idx)));
      }
      if (split != F(p, n))
        throw PreconditionError("label-inconsistent differential", "filtration is not graded by weight");
    }
  }
}

std::vector<int> FilteredComplex::weight_values() const {
  std::set<int> s;
  for (const auto& w : weights) s.insert(w.begin(), w.end());
  return {s.begin(), s.end()};
}

FilteredComplex FilteredComplex::weight_part(int wt) const {
  const int lo = complex.lo(), hi = complex.hi();
  std::vector<std::vector<std::size_t>> idx(static_cast<std::size_t>(hi - lo + 1));
  for (int n = lo; n <= hi; ++n) {
    const auto& w = weights.at(static_cast<std::size_t>(n - lo));
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] == wt) idx[static_cast<std::size_t>(n - lo)].push_back(i);
  }
  std::vector<std::size_t> dims;
  std::vector<QMatrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    const auto& src = idx[static_cast<std::size_t>(n - lo)];
    dims.push_back(src.size());
    const std::vector<std::size_t> none;
    const auto& dst = n < hi ? idx[static_cast<std::size_t>(n + 1 - lo)] : none;
    diffs.push_back(complex.d(n).select(dst, src));
  }
  FilteredComplex out;
  out.complex = GradedComplex(lo, dims, std::move(diffs));
  for (int n = lo; n <= hi; ++n) {
    const auto& src = idx[static_cast<std::size_t>(n - lo)];
    const auto& f = fil[static_cast<std::size_t>(n - lo)];
    const Subspace part = Subspace::coordinate(complex.dim(n), src);
    std::vector<Subspace> steps;
    for (int p = f.first(); p <= f.last(); ++p) {
      // Every vector of s vanishes off `src`, so dropping those columns is faithful.
      const Subspace s = linalg::subspace_intersect(f.at(p), part);
      std::vector<std::size_t> rows(s.dim());
      for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
      steps.push_back(s.is_zero() ? Subspace::zero(src.size()) : Subspace::span(s.basis().select(rows, src)));
    }
    out.fil.emplace_back(src.size(), phin::Orientation::decreasing, f.first(), std::move(steps));
    out.weights.emplace_back(src.size(), wt);
  }
  return out;
}

FilteredComplex filter_by_levels(GradedComplex complex, const std::vector<std::vector<int>>& levels) {
  FilteredComplex out;
  const int lo = complex.lo(), hi = complex.hi();
  if (levels.size() != static_cast<std::size_t>(hi - lo + 1)) throw InvalidInput("one level list per degree");
  int pmin = 0, pmax = 0;
  bool any = false;
  for (const auto& lv : levels)
    for (int l : lv) {
      pmin = any ? std::min(pmin, l) : l;
      pmax = any ? std::max(pmax, l) : l;
      any = true;
    }
  for (int n = lo; n <= hi; ++n) {
    const auto& lv = levels[static_cast<std::size_t>(n - lo)];
    if (lv.size() != complex.dim(n)) throw InvalidInput("level count does not match the degree dimension");
    std::vector<Subspace> steps;
    for (int p = pmin; p <= pmax; ++p) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < lv.size(); ++i)
        if (lv[i] >= p) idx.push_back(i);
      steps.push_back(Subspace::coordinate(lv.size(), idx));
    }
    out.fil.emplace_back(lv.size(), phin::Orientation::decreasing, pmin, std::move(steps));
  }
  out.complex = std::move(complex);
  out.validate();
  return out;
}

} // namespace phinkit::spectral
