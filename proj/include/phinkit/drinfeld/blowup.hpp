#pragma once

#include "phinkit/drinfeld/arrangement.hpp"

#include <string>

namespace phinkit::drinfeld {

/// Even-degree Betti numbers of P^r blown up successively along the strict
/// transforms of all F_q-rational linear subspaces of dimension 0..r-2:
/// blowing up a centre of codimension c isomorphic to B_s adds
/// (t^2 + ... + t^{2(c-1)}) copies of its cohomology. Checked against the
/// point count oracle for s = 1..3 (CrossCheckError on mismatch).
PoincarePoly blowup_poincare(long r, const Integer& q);

enum class SpaceKind { arrangement_complement, iterated_blowup };
std::string to_string(SpaceKind k);

/// Number of F_{q^s}-points, by sorting the points of P^r by the smallest
/// rational linear subspace containing them. Independent of any Betti number.
Integer point_count_oracle(SpaceKind kind, long r, const Integer& q, long s);

/// Point count predicted from Betti numbers by purity: for the arrangement
/// complement sum (-1)^m b_m q^{s(r-m)}, for the blow-up sum b_{2k} q^{sk}.
Integer purity_count(SpaceKind kind, long r, const PoincarePoly& betti, const Integer& q, long s);

} // namespace phinkit::drinfeld
