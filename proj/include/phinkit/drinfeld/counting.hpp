#pragma once

#include "phinkit/linalg/rational.hpp"

#include <vector>

namespace phinkit::drinfeld {

using linalg::Integer;

/// Number of k-dimensional subspaces of F_q^n.
Integer gaussian_binomial(long n, long k, const Integer& q);
/// Number of flags with the given successive dimension gaps of F_q^{sum}.
Integer q_multinomial(const std::vector<long>& parts, const Integer& q);
/// Number of projective points of P^r over F_q.
Integer projective_points(long r, const Integer& q);

/// Number of (i-1)-simplices of the building through a fixed vertex, i.e.
/// flags of i-1 nonzero proper subspaces of F_q^{d+1}.
Integer simplices_through_vertex(long d, const Integer& q, long i);

/// Strictly increasing subspace dimensions 0 < d_1 < ... < d_{i-1} < d+1.
using SimplexType = std::vector<long>;
/// Dimensions r >= 0 of the factors of a stratum of the given type; each
/// factor is the full rational blow-up of P^r.
std::vector<long> stratum_type(const SimplexType& signature, long d);

} // namespace phinkit::drinfeld
