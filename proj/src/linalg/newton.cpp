#include "phinkit/linalg/newton.hpp"

#include "phinkit/error.hpp"

#include <algorithm>

namespace phinkit::linalg {

std::size_t NewtonPolygon::total_length() const {
  std::size_t n = 0;
  for (const auto& s : segments) n += s.length;
  return n;
}

NewtonPolygon newton_polygon(const Polynomial& poly, unsigned long p, unsigned long a) {
  if (poly.degree() < 0) throw std::invalid_argument("Newton polygon of zero polynomial");
  if (sgn(poly.coefficient(0)) == 0)
    throw PreconditionError("non-invertible phi", "zero constant term in characteristic polynomial");

  struct Point {
    long x;
    Rational y;
  };
  std::vector<Point> pts;
  for (std::size_t i = 0; i < poly.coefficients().size(); ++i) {
    const auto& c = poly.coefficients()[i];
    if (sgn(c) != 0) pts.push_back({static_cast<long>(i), q_valuation(c, p, a)});
  }

  // Lower convex hull (monotone chain, left to right).
  std::vector<Point> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& m = hull.back();
      // Drop m when it lies on or above the segment o -> pt.
      Rational cross = (m.y - o.y) * (pt.x - o.x) - (pt.y - o.y) * (m.x - o.x);
      if (sgn(cross) >= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }

  NewtonPolygon out;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const long len = hull[i].x - hull[i - 1].x;
    Rational edge = (hull[i].y - hull[i - 1].y) / Rational(len);
    out.segments.push_back({-edge, static_cast<std::size_t>(len)});
  }
  std::sort(out.segments.begin(), out.segments.end(),
            [](const NewtonSegment& l, const NewtonSegment& r) { return l.slope < r.slope; });
  return out;
}

} // namespace phinkit::linalg
