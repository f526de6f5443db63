#include "phinkit/drinfeld/counting.hpp"

#include "phinkit/error.hpp"

namespace phinkit::drinfeld {

namespace {

// [n]_q! = prod_{k=1..n} (q^k - 1) / (q - 1), kept as the product of the
// numerators; all quotients below divide exactly.
Integer q_factorial_numerator(long n, const Integer& q) {
  Integer out = 1;
  for (long k = 1; k <= n; ++k) out *= linalg::ipow(q, static_cast<unsigned long>(k)) - 1;
  return out;
}

} // namespace

Integer gaussian_binomial(long n, long k, const Integer& q) {
  if (n < 0 || k < 0 || k > n) throw PreconditionError("range", "gaussian_binomial needs 0 <= k <= n");
  if (q < 2) throw PreconditionError("range", "gaussian_binomial needs q >= 2");
  return q_factorial_numerator(n, q) / (q_factorial_numerator(k, q) * q_factorial_numerator(n - k, q));
}

Integer q_multinomial(const std::vector<long>& parts, const Integer& q) {
  long total = 0;
  Integer den = 1;
  for (long p : parts) {
    if (p < 0) throw PreconditionError("range", "negative part in q-multinomial");
    total += p;
    den *= q_factorial_numerator(p, q);
  }
  return q_factorial_numerator(total, q) / den;
}

Integer projective_points(long r, const Integer& q) {
  if (r < 0) return 0;
  return gaussian_binomial(r + 1, 1, q);
}

Integer simplices_through_vertex(long d, const Integer& q, long i) {
  if (d < 1 || i < 1 || i > d + 1) throw PreconditionError("range", "need 1 <= i <= d + 1");
  // Sum over increasing signatures 0 < d_1 < ... < d_{i-1} < d+1.
  Integer total = 0;
  std::vector<long> sig;
  auto rec = [&](auto&& self, long next) -> void {
    if (static_cast<long>(sig.size()) == i - 1) {
      std::vector<long> gaps;
      long prev = 0;
      for (long x : sig) {
        gaps.push_back(x - prev);
        prev = x;
      }
      gaps.push_back(d + 1 - prev);
      total += q_multinomial(gaps, q);
      return;
    }
    for (long x = next; x <= d; ++x) {
      sig.push_back(x);
      self(self, x + 1);
      sig.pop_back();
    }
  };
  rec(rec, 1);
  return total;
}

std::vector<long> stratum_type(const SimplexType& signature, long d) {
  std::vector<long> out;
  long prev = 0;
  for (long x : signature) {
    if (x <= prev || x > d) throw PreconditionError("range", "signature must increase strictly inside 1..d");
    out.push_back(x - prev - 1);
    prev = x;
  }
  out.push_back(d + 1 - prev - 1);
  return out;
}

} // namespace phinkit::drinfeld
