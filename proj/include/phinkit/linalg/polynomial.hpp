#pragma once

#include "phinkit/linalg/matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace phinkit::linalg {

/// Univariate polynomial over Q, coefficients lowest degree first, trimmed
/// so the leading coefficient is nonzero (the zero polynomial is empty).
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// prod (x - r) over the given roots.
  static Polynomial from_roots(const std::vector<Rational>& roots);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational evaluate(const Rational& x) const;
  /// f(m) by Horner's rule.
  QMatrix evaluate(const QMatrix& m) const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const Rational& s) const;
  Polynomial pow(unsigned exp) const;

  bool operator==(const Polynomial& rhs) const = default;

  std::string to_string() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; divisor must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// det(x I - m), via the Faddeev-LeVerrier recursion.
Polynomial char_poly(const QMatrix& m);

} // namespace phinkit::linalg
