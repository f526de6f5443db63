#include "phinkit/phin/numbers.hpp"

#include "phinkit/linalg/newton.hpp"

namespace phinkit::phin {

GradedDims hodge_numbers(const PhiNModule& D) { return D.fil.graded_dims(); }

SlopeDims newton_numbers(const QMatrix& phi, unsigned long p, unsigned long a) {
  SlopeDims out;
  if (phi.rows() == 0) return out;
  for (const auto& seg : linalg::newton_polygon(linalg::char_poly(phi), p, a).segments) out[seg.slope] += seg.length;
  return out;
}

SlopeDims newton_numbers(const PhiNModule& D) { return newton_numbers(D.phi, D.p, D.a); }

TNumbers t_numbers(const PhiNModule& D) { return t_numbers(D, Subspace::full(D.dim())); }

TNumbers t_numbers(const PhiNModule& D, const Subspace& sub) {
  TNumbers t{0, 0};
  if (sub.is_zero()) return t;
  for (const auto& [slope, mult] : newton_numbers(linalg::restrict_to(D.phi, sub), D.p, D.a))
    t.t_N += slope * Rational(static_cast<long>(mult));
  for (int i = D.fil.first() - 1; i <= D.fil.last(); ++i) {
    const auto hi = linalg::subspace_intersect(D.fil.at(i), sub).dim();
    const auto lo = linalg::subspace_intersect(D.fil.at(i + 1), sub).dim();
    t.t_H += Rational(i) * Rational(static_cast<long>(hi - lo));
  }
  return t;
}

} // namespace phinkit::phin
