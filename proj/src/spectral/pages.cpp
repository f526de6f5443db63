#include "phinkit/spectral/pages.hpp"

#include "phinkit/error.hpp"

#include <algorithm>

namespace phinkit::spectral {

using linalg::apply;
using linalg::preimage;
using linalg::subspace_intersect;
using linalg::subspace_sum;

std::size_t Page::dim(int p, int q) const {
  auto it = dims.find({p, q});
  return it == dims.end() ? 0 : it->second;
}

long Page::euler_characteristic() const {
  long chi = 0;
  for (const auto& [pq, dim] : dims) chi += ((pq.first + pq.second) % 2 == 0 ? 1 : -1) * static_cast<long>(dim);
  return chi;
}

namespace {

Subspace Z(const FilteredComplex& fc, int r, int p, int n) {
  const Subspace Fp = fc.F(p, n);
  if (fc.complex.dim(n + 1) == 0) return Fp;
  return subspace_intersect(Fp, preimage(fc.complex.d(n), fc.F(p + r, n + 1)));
}

QuotientMap term(const FilteredComplex& fc, int r, int p, int n) {
  Subspace den = Z(fc, r - 1, p + 1, n);
  if (fc.complex.dim(n - 1) > 0) den = subspace_sum(den, apply(fc.complex.d(n - 1), Z(fc, r - 1, p - r + 1, n - 1)));
  return QuotientMap(Z(fc, r, p, n), den);
}

} // namespace

Page e_page(const FilteredComplex& fc, int r) {
  if (r < 0) throw std::invalid_argument("page index must be nonnegative");
  Page page;
  page.r = r;
  const int lo = fc.complex.lo(), hi = fc.complex.hi();
  std::map<Bidegree, QuotientMap> terms;
  for (int n = lo; n <= hi; ++n)
    for (int p = fc.p_min(); p <= fc.p_max(); ++p) {
      QuotientMap t = term(fc, r, p, n);
      if (t.dim() == 0) continue;
      page.dims[{p, n - p}] = t.dim();
      terms.emplace(Bidegree{p, n - p}, std::move(t));
    }
  for (const auto& [pq, src] : terms) {
    auto target = terms.find({pq.first + r, pq.second - r + 1});
    if (target == terms.end()) continue;
    QMatrix m = src.induced(fc.complex.d(pq.first + pq.second), target->second);
    if (!m.is_zero()) page.differentials.emplace(pq, std::move(m));
  }
  return page;
}

int stable_page(const FilteredComplex& fc) { return std::max(1, fc.p_max() - fc.p_min() + 1); }

Page e_infinity(const FilteredComplex& fc) { return e_page(fc, stable_page(fc)); }

IndexedFiltration abutment_filtration(const FilteredComplex& fc, int n) {
  const QuotientMap H = fc.complex.cohomology(n);
  const Subspace cyc = fc.complex.cocycles(n);
  std::vector<Subspace> steps;
  const int lo = fc.p_min(), hi = fc.p_max();
  for (int p = lo; p <= hi; ++p) steps.push_back(H.image_of(subspace_intersect(fc.F(p, n), cyc)));
  return IndexedFiltration(H.dim(), phin::Orientation::decreasing, lo, std::move(steps));
}

DegenerationResult degeneration_page(const FilteredComplex& fc, int bound) {
  if (bound < 1) throw std::invalid_argument("degeneration bound must be at least 1");
  DegenerationResult res;
  res.page = bound + 1;
  for (int r = bound; r >= 1; --r) {
    if (!e_page(fc, r).differentials_vanish()) break;
    res.page = r;
  }
  res.censored = res.page > bound;
  return res;
}

bool equivariant_degeneration_check(const FilteredComplex& fc) {
  if (!fc.has_weights()) throw PreconditionError("missing weight labels", "equivariant check needs labels");
  fc.validate();
  const int last = stable_page(fc);
  for (int w : fc.weight_values()) {
    const FilteredComplex part = fc.weight_part(w);
    for (int r = 2; r <= last; ++r) {
      const Page page = e_page(part, r);
      for (const auto& [pq, dim] : page.dims)
        if (page.dim(pq.first + r, pq.second - r + 1) > 0) return false;
    }
  }
  return true;
}

bool abutment_frobenius_check(const FilteredComplex& fc, int n, const linalg::Integer& q) {
  if (!fc.has_weights()) throw PreconditionError("missing weight labels", "Frobenius check needs labels");
  const auto& w = fc.weights[static_cast<std::size_t>(n - fc.complex.lo())];
  std::vector<Rational> diag;
  for (int x : w) {
    Rational v = linalg::ipow(q, static_cast<unsigned long>(std::abs(x)));
    diag.push_back(x >= 0 ? v : Rational(1 / v));
  }
  const QuotientMap H = fc.complex.cohomology(n);
  const QMatrix phi = H.induced(QMatrix::diagonal(diag), H);
  const IndexedFiltration F = abutment_filtration(fc, n);
  for (int p = F.first() - 1; p <= F.last(); ++p) {
    const int e = n - p;
    Rational s = linalg::ipow(q, static_cast<unsigned long>(std::abs(e)));
    if (e < 0) s = 1 / s;
    const QMatrix shifted = phi - QMatrix::identity(H.dim()) * s;
    if (!F.at(p + 1).contains(apply(shifted, F.at(p)))) return false;
  }
  return true;
}

} // namespace phinkit::spectral
