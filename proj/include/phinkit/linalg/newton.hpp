#pragma once

#include "phinkit/linalg/polynomial.hpp"

#include <vector>

namespace phinkit::linalg {

struct NewtonSegment {
  Rational slope;     ///< common q-adic valuation of the roots on this segment
  std::size_t length; ///< number of roots with that valuation

  bool operator==(const NewtonSegment&) const = default;
};

/// Root valuations of a polynomial, read off the lower convex hull of the
/// points (i, v_q(c_i)). Segments are sorted by strictly increasing slope.
struct NewtonPolygon {
  std::vector<NewtonSegment> segments;

  std::size_t total_length() const;
  bool operator==(const NewtonPolygon&) const = default;
};

/// v_q = v_p / a with q = p^a. Throws PreconditionError("non-invertible phi")
/// when the constant term vanishes.
NewtonPolygon newton_polygon(const Polynomial& poly, unsigned long p, unsigned long a);

} // namespace phinkit::linalg
