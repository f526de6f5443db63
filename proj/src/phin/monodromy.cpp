#include "phinkit/phin/monodromy.hpp"

#include "phinkit/error.hpp"

#include <algorithm>

namespace phinkit::phin {

using linalg::image;
using linalg::kernel;
using linalg::subspace_intersect;
using linalg::subspace_sum;

namespace {

QMatrix power(const QMatrix& N, int k) {
  return k <= 0 ? QMatrix::identity(N.rows()) : N.pow(static_cast<unsigned>(k));
}

void require_nilpotent_order(const QMatrix& N, int d) {
  if (d < 0) throw PreconditionError("bad parameters", "d must be nonnegative");
  if (!power(N, d + 1).is_zero()) throw PreconditionError("N^{d+1} != 0", "N is not killed by N^{d+1}");
}

} // namespace

IndexedFiltration kernel_filtration(const QMatrix& N) {
  const std::size_t n = N.rows();
  std::vector<Subspace> steps;
  for (int i = 0;; ++i) {
    steps.push_back(kernel(power(N, i + 1)));
    if (steps.back().is_full() || i > static_cast<int>(n)) break;
  }
  return IndexedFiltration(n, Orientation::increasing, 0, std::move(steps));
}

IndexedFiltration image_filtration(const QMatrix& N) {
  const std::size_t n = N.rows();
  std::vector<Subspace> steps;
  for (int j = 0;; ++j) {
    steps.push_back(image(power(N, j)));
    if (steps.back().is_zero() || j > static_cast<int>(n)) break;
  }
  return IndexedFiltration(n, Orientation::decreasing, 0, std::move(steps));
}

Subspace kernel_image_convolution(const QMatrix& N, int r) {
  const std::size_t n = N.rows();
  Subspace out = Subspace::zero(n);
  // Beyond i = n both factors are stable: ker is full, im N^{i-r} is zero
  // once i - r >= n.
  const int hi = static_cast<int>(n) + std::max(r, 0) + 1;
  for (int i = 0; i <= hi; ++i)
    out = subspace_sum(out, subspace_intersect(kernel(power(N, i + 1)), image(power(N, i - r))));
  return out;
}

IndexedFiltration monodromy_filtration(const QMatrix& N, int d) {
  require_nilpotent_order(N, d);
  std::vector<Subspace> steps;
  for (int r = -d; r <= d; ++r) steps.push_back(kernel_image_convolution(N, r));
  if (!kernel_image_convolution(N, -d - 1).is_zero() || !steps.back().is_full())
    throw CrossCheckError("monodromy filtration does not reach 0 and D inside [-d, d]");
  return IndexedFiltration(N.rows(), Orientation::increasing, -d, std::move(steps));
}

IndexedFiltration weight_filtration(const PhiNModule& D) {
  const auto comps = slope_decomposition(D.phi, D.p, D.a);
  const std::size_t n = D.dim();
  if (comps.empty()) return IndexedFiltration(n, Orientation::increasing, 0, {Subspace::full(n)});
  // A component of slope s enters at the least integer r with 2s <= d + r.
  auto entry = [&](const Rational& s) {
    Rational x = 2 * s - D.d;
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return static_cast<int>(c.get_si());
  };
  const int lo = entry(comps.front().slope), hi = entry(comps.back().slope);
  std::vector<Subspace> steps;
  for (int r = lo; r <= hi; ++r)
    steps.push_back(slope_part(comps, n, [&](const Rational& s) { return 2 * s <= Rational(D.d + r); }));
  return IndexedFiltration(n, Orientation::increasing, lo, std::move(steps));
}

SlopeFiltration slope_filtration(const PhiNModule& D) {
  SlopeFiltration out;
  Subspace acc = Subspace::zero(D.dim());
  for (const auto& c : slope_decomposition(D.phi, D.p, D.a)) {
    acc = subspace_sum(acc, c.space);
    out.slopes.push_back(c.slope);
    out.steps.push_back(acc);
  }
  return out;
}

IndexedFiltration gamma_filtration(const PhiNModule& D) {
  if (D.gamma_fil) return *D.gamma_fil;
  const auto comps = slope_decomposition(D.phi, D.p, D.a);
  const std::size_t n = D.dim();
  if (comps.empty()) return IndexedFiltration(n, Orientation::decreasing, 0, {Subspace::full(n)});
  // slope <= d - r  <=>  r <= d - slope; the last index where a slope is
  // present is floor(d - slope).
  auto exit_index = [&](const Rational& s) {
    Rational x = Rational(D.d) - s;
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return static_cast<int>(f.get_si());
  };
  const int lo = exit_index(comps.back().slope), hi = exit_index(comps.front().slope);
  std::vector<Subspace> steps;
  for (int r = lo; r <= hi; ++r)
    steps.push_back(slope_part(comps, n, [&](const Rational& s) { return s <= Rational(D.d - r); }));
  return IndexedFiltration(n, Orientation::decreasing, lo, std::move(steps));
}

MonodromyWeightReport monodromy_weight_check(const PhiNModule& D) {
  const auto M = monodromy_filtration(D);
  const auto P = weight_filtration(D);
  MonodromyWeightReport rep;
  rep.equal = true;
  const int lo = std::min(M.first(), P.first()), hi = std::max(M.last(), P.last());
  for (int r = lo; r <= hi; ++r) {
    const Subspace m = M.at(r), w = P.at(r);
    rep.steps.push_back({r, m.dim(), w.dim(), m == w});
    rep.equal = rep.equal && m == w;
  }
  return rep;
}

KernelImageReport kernel_image_check(const QMatrix& N, int d) {
  require_nilpotent_order(N, d);
  KernelImageReport rep;
  std::vector<Subspace> F, alt;
  for (int j = 0; j <= d + 1; ++j) {
    F.push_back(kernel_image_convolution(N, d - 2 * j));
    alt.push_back(kernel_image_convolution(N, d - 2 * j + 1));
    rep.F_dims.push_back(F.back().dim());
    rep.alt_dims.push_back(alt.back().dim());
  }
  rep.h1 = F == alt;
  rep.h2 = kernel(N) == F[static_cast<std::size_t>(d)];
  if (rep.h1 && rep.h2) {
    rep.conclusion_checked = true;
    rep.conclusion_holds = true;
    for (int j = 0; j <= d + 1; ++j) {
      const Subspace& f = F[static_cast<std::size_t>(j)];
      rep.conclusion_holds = rep.conclusion_holds && kernel(power(N, d + 1 - j)) == f && image(power(N, j)) == f;
    }
  }
  return rep;
}

} // namespace phinkit::phin
