#include "phinkit/drinfeld/blowup.hpp"

#include "phinkit/error.hpp"

#include <map>

namespace phinkit::drinfeld {

using linalg::ipow;

std::string to_string(SpaceKind k) {
  return k == SpaceKind::arrangement_complement ? "arrangement_complement" : "iterated_blowup";
}

namespace {

// g(e): points of P^e over F_Q = F_{q^s} lying on no F_q-rational hyperplane.
// Every point of P^e spans a smallest rational subspace, of some dimension k,
// and is such a point of it: #P^e = sum_k gauss(e+1, k+1) g(k).
std::vector<Integer> generic_points(long r, const Integer& q, long s) {
  const Integer Q = ipow(q, static_cast<unsigned long>(s));
  std::vector<Integer> g;
  for (long e = 0; e <= r; ++e) {
    Integer x = projective_points(e, Q);
    for (long k = 0; k < e; ++k) x -= gaussian_binomial(e + 1, k + 1, q) * g[static_cast<std::size_t>(k)];
    g.push_back(x);
  }
  return g;
}

} // namespace

Integer point_count_oracle(SpaceKind kind, long r, const Integer& q, long s) {
  if (r < 0 || s < 1) throw PreconditionError("range", "need r >= 0 and s >= 1");
  const auto g = generic_points(r, q, s);
  if (kind == SpaceKind::arrangement_complement) return g[static_cast<std::size_t>(r)];
  // A point whose smallest rational subspace L has dimension e < r sees the
  // exceptional fibre over L, which is the blow-up of the normal P^{r-e-1}.
  std::vector<Integer> B{1};
  for (long m = 1; m <= r; ++m) {
    Integer total = 0;
    for (long e = 0; e <= m; ++e) {
      const Integer fibre = e == m ? Integer(1) : B[static_cast<std::size_t>(m - e - 1)];
      total += gaussian_binomial(m + 1, e + 1, q) * g[static_cast<std::size_t>(e)] * fibre;
    }
    B.push_back(total);
  }
  return B[static_cast<std::size_t>(r)];
}

Integer purity_count(SpaceKind kind, long r, const PoincarePoly& betti, const Integer& q, long s) {
  Integer total = 0;
  for (std::size_t m = 0; m < betti.size(); ++m) {
    if (kind == SpaceKind::arrangement_complement) {
      const Integer term = betti[m] * ipow(q, static_cast<unsigned long>(s * (r - static_cast<long>(m))));
      total += m % 2 == 0 ? term : Integer(-term);
    } else if (m % 2 == 0) {
      total += betti[m] * ipow(q, static_cast<unsigned long>(s * static_cast<long>(m / 2)));
    }
  }
  return total;
}

PoincarePoly blowup_poincare(long r, const Integer& q) {
  if (r < 0) throw PreconditionError("range", "need r >= 0");
  std::vector<PoincarePoly> B;
  for (long m = 0; m <= r; ++m) {
    PoincarePoly P(static_cast<std::size_t>(2 * m + 1), 0);
    for (long k = 0; k <= m; ++k) P[static_cast<std::size_t>(2 * k)] = 1;
    for (long s = 0; s <= m - 2; ++s) {
      const Integer centres = gaussian_binomial(m + 1, s + 1, q);
      const auto& Bs = B[static_cast<std::size_t>(s)];
      for (long i = 1; i <= m - s - 1; ++i)
        for (std::size_t k = 0; k < Bs.size(); ++k) P[k + static_cast<std::size_t>(2 * i)] += centres * Bs[k];
    }
    B.push_back(std::move(P));
  }
  const PoincarePoly& out = B[static_cast<std::size_t>(r)];
  for (long s = 1; s <= 3; ++s)
    if (purity_count(SpaceKind::iterated_blowup, r, out, q, s) != point_count_oracle(SpaceKind::iterated_blowup, r, q, s))
      throw CrossCheckError("blow-up Betti numbers disagree with the point count at s = " + std::to_string(s));
  return out;
}

} // namespace phinkit::drinfeld
