#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace phinkit::linalg {

/// Arbitrary precision rational; GMP keeps it canonical (den > 0, reduced).
using Rational = mpq_class;
using Integer = mpz_class;

/// "num/den", or "num" when the denominator is one.
std::string to_string(const Rational& x);

/// Parses "a", "-a", "a/b". Throws InvalidInput on malformed text or b = 0.
Rational parse_rational(std::string_view text);

/// p-adic valuation of a nonzero integer.
long valuation(const Integer& n, unsigned long p);

/// v_p(x) / a, i.e. the valuation normalised so that v(q) = 1 for q = p^a.
Rational q_valuation(const Rational& x, unsigned long p, unsigned long a);

Integer ipow(const Integer& base, unsigned long exp);

bool is_prime(unsigned long n);

} // namespace phinkit::linalg
