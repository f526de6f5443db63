#include "phinkit/linalg/rational.hpp"

#include "phinkit/error.hpp"

#include <cctype>

namespace phinkit::linalg {

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto num_text = text.substr(0, slash);
  if (!is_integer_text(num_text))
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(parse_integer(num_text));
  auto den_text = text.substr(slash + 1);
  if (!is_integer_text(den_text) || den_text[0] == '-' || den_text[0] == '+')
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num_text), den);
  r.canonicalize();
  return r;
}

long valuation(const Integer& n, unsigned long p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  Integer m = abs(n);
  long v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

Rational q_valuation(const Rational& x, unsigned long p, unsigned long a) {
  Rational v(valuation(x.get_num(), p) - valuation(x.get_den(), p), static_cast<long>(a));
  v.canonicalize();
  return v;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

} // namespace phinkit::linalg
