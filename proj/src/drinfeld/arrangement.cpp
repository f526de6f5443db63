#include "phinkit/drinfeld/arrangement.hpp"

#include "phinkit/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace phinkit::drinfeld {

namespace {

PoincarePoly& accumulate(PoincarePoly& acc, const PoincarePoly& x, std::size_t shift) {
  if (acc.size() < x.size() + shift) acc.resize(x.size() + shift, 0);
  for (std::size_t i = 0; i < x.size(); ++i) acc[i + shift] += x[i];
  return acc;
}

void trim(PoincarePoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

} // namespace

PoincarePoly deletion_restriction_poincare(const FiniteField& F, std::size_t r, const std::vector<FVector>& normals) {
  if (normals.empty()) {
    PoincarePoly out(2 * r + 1, 0);
    for (std::size_t k = 0; k <= r; ++k) out[2 * k] = 1;
    return out;
  }
  // The first hyperplane leaves affine space; each later one adds t times
  // the complement inside it of the hyperplanes already removed.
  PoincarePoly out{1};
  for (std::size_t k = 1; k < normals.size(); ++k) {
    const auto basis = null_space(F, {normals[k]}, r + 1); // coordinates on H_k
    std::set<FVector> restricted;
    for (std::size_t i = 0; i < k; ++i) {
      FVector form;
      for (const auto& b : basis) form.push_back(dot(F, normals[i], b));
      restricted.insert(normalize(F, form));
    }
    // In P^0 distinct points never meet, so nothing is removed from H_k.
    std::vector<FVector> sub;
    if (r > 1) sub.assign(restricted.begin(), restricted.end());
    accumulate(out, deletion_restriction_poincare(F, r - 1, sub), 1);
  }
  trim(out);
  return out;
}

PoincarePoly moebius_poincare(const FiniteField& F, std::size_t r, const std::vector<FVector>& normals,
                              std::size_t flat_budget) {
  const std::size_t n = r + 1, h = normals.size();
  // A flat is determined by the span W of the normals vanishing on it; we
  // record it by the set of normals contained in W.
  struct Flat {
    std::vector<FVector> span;
    std::vector<bool> members;
    std::size_t codim;
  };
  auto members_of = [&](const std::vector<FVector>& span) {
    std::vector<bool> m(h);
    for (std::size_t i = 0; i < h; ++i) {
      auto rows = span;
      rows.push_back(normals[i]);
      m[i] = rref(F, rows).size() == span.size();
    }
    return m;
  };
  std::vector<Flat> flats;
  std::map<std::vector<FVector>, std::size_t> seen;
  flats.push_back({{}, std::vector<bool>(h, false), 0});
  seen[{}] = 0;
  for (std::size_t at = 0; at < flats.size(); ++at) {
    for (std::size_t i = 0; i < h; ++i) {
      if (flats[at].members[i]) continue;
      auto rows = flats[at].span;
      rows.push_back(normals[i]);
      rref(F, rows);
      if (seen.count(rows)) continue;
      if (flats.size() >= flat_budget) throw PreconditionError("budget exceeded", "too many flats");
      seen[rows] = flats.size();
      flats.push_back({rows, members_of(rows), rows.size()});
    }
  }
  std::stable_sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) { return a.codim < b.codim; });
  std::vector<Integer> mu(flats.size(), 0);
  PoincarePoly chi(n + 1, 0);
  for (std::size_t x = 0; x < flats.size(); ++x) {
    if (x == 0) {
      mu[x] = 1;
    } else {
      Integer s = 0;
      for (std::size_t y = 0; y < x && flats[y].codim < flats[x].codim; ++y) {
        bool below = true;
        for (std::size_t i = 0; i < h && below; ++i) below = !flats[y].members[i] || flats[x].members[i];
        if (below) s += mu[y];
      }
      mu[x] = -s;
    }
    // (-t)^codim times mu.
    chi[flats[x].codim] += (flats[x].codim % 2 == 0 ? 1 : -1) * mu[x];
  }
  // Central complement is (1 + t) times the projective one; divide.
  PoincarePoly out(n, 0);
  Integer carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = chi[i] - carry;
    carry = out[i];
  }
  if (chi[n] != carry) throw CrossCheckError("characteristic polynomial not divisible by 1 + t");
  trim(out);
  return out;
}

PoincarePoly arrangement_closed_form(long r, const Integer& q) {
  PoincarePoly out{1};
  for (long k = 1; k <= r; ++k) {
    const Integer c = linalg::ipow(q, static_cast<unsigned long>(k));
    PoincarePoly next(out.size() + 1, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i] += out[i];
      next[i + 1] += c * out[i];
    }
    out = std::move(next);
  }
  return out;
}

ArrangementReport rational_arrangement_poincare(long r, unsigned q, std::size_t flat_budget) {
  if (r < 1) throw PreconditionError("range", "need r >= 1");
  const FiniteField F(q);
  const auto normals = projective_space(F, static_cast<std::size_t>(r + 1));
  ArrangementReport rep;
  rep.deletion_restriction = deletion_restriction_poincare(F, static_cast<std::size_t>(r), normals);
  rep.moebius = moebius_poincare(F, static_cast<std::size_t>(r), normals, flat_budget);
  rep.cross_check = rep.deletion_restriction == rep.moebius;
  if (!rep.cross_check) throw CrossCheckError("arrangement cohomology: deletion-restriction and Moebius disagree");
  rep.betti = rep.moebius;
  return rep;
}

} // namespace phinkit::drinfeld
