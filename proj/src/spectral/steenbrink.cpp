#include "phinkit/spectral/steenbrink.hpp"

#include "phinkit/error.hpp"

#include <algorithm>
#include <tuple>

namespace phinkit::spectral {

bool SteenbrinkBasis::operator<(const SteenbrinkBasis& o) const {
  return std::tie(j, m, stratum, a, index) < std::tie(o.j, o.m, o.stratum, o.a, o.index);
}

std::size_t SteenbrinkDatum::level_dim(int m, int a) const {
  if (m < 1 || m > max_level() || a < 0) return 0;
  std::size_t total = 0;
  for (const auto& dims : levels[static_cast<std::size_t>(m - 1)])
    if (static_cast<std::size_t>(a) < dims.size()) total += dims[static_cast<std::size_t>(a)];
  return total;
}

QMatrix SteenbrinkDatum::restriction_map(int m, int a) const {
  auto it = restriction.find({m, a});
  return it != restriction.end() ? it->second : QMatrix(level_dim(m + 1, a), level_dim(m, a));
}

QMatrix SteenbrinkDatum::gysin_map(int m, int a) const {
  auto it = gysin.find({m, a});
  return it != gysin.end() ? it->second : QMatrix(level_dim(m - 1, a + 2), level_dim(m, a));
}

namespace {

int max_a(const SteenbrinkDatum& sd) {
  int out = 0;
  for (const auto& level : sd.levels)
    for (const auto& dims : level) out = std::max(out, static_cast<int>(dims.size()) - 1);
  return out;
}

// Offset of stratum `s` inside the level block of degree a.
std::size_t stratum_offset(const SteenbrinkDatum& sd, int m, std::size_t s, int a) {
  std::size_t off = 0;
  const auto& level = sd.levels[static_cast<std::size_t>(m - 1)];
  for (std::size_t t = 0; t < s; ++t)
    if (static_cast<std::size_t>(a) < level[t].size()) off += level[t][static_cast<std::size_t>(a)];
  return off;
}

void check_shapes(const SteenbrinkDatum& sd) {
  for (const auto& [key, mat] : sd.restriction) {
    const auto [m, a] = key;
    if (m < 1 || m >= sd.max_level() || a < 0) throw InvalidInput("restriction map at an impossible level");
    if (mat.rows() != sd.level_dim(m + 1, a) || mat.cols() != sd.level_dim(m, a))
      throw InvalidInput("restriction map has the wrong shape");
  }
  for (const auto& [key, mat] : sd.gysin) {
    const auto [m, a] = key;
    if (m < 2 || m > sd.max_level() || a < 0) throw InvalidInput("Gysin map at an impossible level");
    if (mat.rows() != sd.level_dim(m - 1, a + 2) || mat.cols() != sd.level_dim(m, a))
      throw InvalidInput("Gysin map has the wrong shape");
  }
}

} // namespace

SteenbrinkComplex steenbrink_double_complex(const SteenbrinkDatum& sd) {
  if (sd.levels.empty()) throw InvalidInput("Steenbrink datum needs at least one level");
  check_shapes(sd);
  const int A = max_a(sd), Mx = sd.max_level();
  const int top = A + Mx - 1;
  SteenbrinkComplex sc;
  sc.basis.resize(static_cast<std::size_t>(top + 1));
  for (int m = 1; m <= Mx; ++m)
    for (int j = 0; j + 1 <= m; ++j)
      for (std::size_t s = 0; s < sd.levels[static_cast<std::size_t>(m - 1)].size(); ++s) {
        const auto& dims = sd.levels[static_cast<std::size_t>(m - 1)][s];
        for (int a = 0; a < static_cast<int>(dims.size()); ++a)
          for (std::size_t i = 0; i < dims[static_cast<std::size_t>(a)]; ++i)
            sc.basis[static_cast<std::size_t>(a + m - 1)].push_back({j, m, s, a, i});
      }
  for (auto& b : sc.basis) std::sort(b.begin(), b.end());

  auto locate = [&](int n, const SteenbrinkBasis& key) -> std::size_t {
    const auto& b = sc.basis[static_cast<std::size_t>(n)];
    auto it = std::lower_bound(b.begin(), b.end(), key);
    return static_cast<std::size_t>(it - b.begin());
  };

  std::vector<std::size_t> dims;
  std::vector<QMatrix> diffs;
  std::vector<std::vector<int>> levels;
  for (int n = 0; n <= top; ++n) {
    const auto& src = sc.basis[static_cast<std::size_t>(n)];
    dims.push_back(src.size());
    QMatrix D(n < top ? sc.basis[static_cast<std::size_t>(n + 1)].size() : 0, src.size());
    std::vector<int> lv;
    for (std::size_t col = 0; col < src.size(); ++col) {
      const auto& e = src[col];
      lv.push_back(-e.k());
      const std::size_t local = stratum_offset(sd, e.m, e.stratum, e.a) + e.index;
      if (e.m < Mx) {
        const QMatrix rho = sd.restriction_map(e.m, e.a);
        const auto& next = sd.levels[static_cast<std::size_t>(e.m)];
        for (std::size_t t = 0, row = 0; t < next.size(); ++t) {
          const std::size_t cnt = static_cast<std::size_t>(e.a) < next[t].size() ? next[t][static_cast<std::size_t>(e.a)] : 0;
          for (std::size_t i = 0; i < cnt; ++i, ++row)
            if (rho(row, local) != 0) D(locate(n + 1, {e.j + 1, e.m + 1, t, e.a, i}), col) += rho(row, local);
        }
      }
      if (e.m - 1 >= e.j + 1) {
        const QMatrix gam = sd.gysin_map(e.m, e.a);
        const Rational sign = e.j % 2 == 0 ? 1 : -1;
        const auto& prev = sd.levels[static_cast<std::size_t>(e.m - 2)];
        const int a2 = e.a + 2;
        for (std::size_t t = 0, row = 0; t < prev.size(); ++t) {
          const std::size_t cnt = static_cast<std::size_t>(a2) < prev[t].size() ? prev[t][static_cast<std::size_t>(a2)] : 0;
          for (std::size_t i = 0; i < cnt; ++i, ++row)
            if (gam(row, local) != 0) D(locate(n + 1, {e.j, e.m - 1, t, a2, i}), col) += sign * gam(row, local);
        }
      }
    }
    diffs.push_back(std::move(D));
    levels.push_back(std::move(lv));
  }
  for (std::size_t k = 0; k + 1 < diffs.size(); ++k)
    if (!(diffs[k + 1] * diffs[k]).is_zero())
      throw PreconditionError("inconsistent strata maps", "D o D != 0 in total degree " + std::to_string(k));
  sc.fc = filter_by_levels(GradedComplex(0, std::move(dims), std::move(diffs)), levels);
  return sc;
}

QMatrix monodromy_chain_map(const SteenbrinkComplex& sc, int n) {
  const auto& b = sc.basis.at(static_cast<std::size_t>(n));
  QMatrix nu(b.size(), b.size());
  for (std::size_t col = 0; col < b.size(); ++col) {
    const auto& e = b[col];
    if (e.m < e.j + 2) continue;
    const SteenbrinkBasis target{e.j + 1, e.m, e.stratum, e.a, e.index};
    const std::size_t row = static_cast<std::size_t>(std::lower_bound(b.begin(), b.end(), target) - b.begin());
    nu(row, col) = e.j % 2 == 0 ? 1 : -1;
  }
  return nu;
}

QMatrix monodromy_endomorphism(const SteenbrinkComplex& sc, int n) {
  const QuotientMap H = sc.fc.complex.cohomology(n);
  return H.induced(monodromy_chain_map(sc, n), H);
}

IndexedFiltration weight_filtration_on_cohomology(const SteenbrinkComplex& sc, int n) {
  const IndexedFiltration F = abutment_filtration(sc.fc, n);
  // P_k = F^{-k}.
  std::vector<Subspace> steps;
  for (int k = -F.last(); k <= -F.first() + 1; ++k) steps.push_back(F.at(-k));
  return IndexedFiltration(F.ambient_dim(), phin::Orientation::increasing, -F.last(), std::move(steps));
}

} // namespace phinkit::spectral
