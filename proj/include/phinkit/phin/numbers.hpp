#pragma once

#include "phinkit/phin/module.hpp"

#include <map>

namespace phinkit::phin {

using SlopeDims = std::map<Rational, std::size_t>;

/// h_H(D, i) = dim Fil^i / Fil^{i+1}, nonzero entries only.
GradedDims hodge_numbers(const PhiNModule& D);
/// h_N(D, alpha): horizontal lengths of the q-adic Newton polygon of char(phi).
SlopeDims newton_numbers(const PhiNModule& D);
SlopeDims newton_numbers(const QMatrix& phi, unsigned long p, unsigned long a);

struct TNumbers {
  Rational t_N;
  Rational t_H;
};
TNumbers t_numbers(const PhiNModule& D);

/// t_N and t_H of a (phi, N)-stable subspace with the induced filtration.
TNumbers t_numbers(const PhiNModule& D, const Subspace& sub);

} // namespace phinkit::phin
