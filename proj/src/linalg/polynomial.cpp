#include "phinkit/linalg/polynomial.hpp"

#include <stdexcept>

namespace phinkit::linalg {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> co(degree + 1);
  co[degree] = c;
  return Polynomial(std::move(co));
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
  Polynomial p({Rational(1)});
  for (const auto& r : roots) p = p * Polynomial({-r, Rational(1)});
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / leading());
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QMatrix Polynomial::evaluate(const QMatrix& m) const {
  if (!m.is_square()) throw std::invalid_argument("polynomial of non-square matrix");
  const auto id = QMatrix::identity(m.rows());
  QMatrix acc = QMatrix::zero(m.rows(), m.cols());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + id * *it;
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<Rational> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coefficient(i) + rhs.coefficient(i);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + rhs * Rational(-1); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> c(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::pow(unsigned exp) const {
  Polynomial r({Rational(1)});
  for (unsigned i = 0; i < exp; ++i) r = r * *this;
  return r;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    std::string term = linalg::to_string(abs(c));
    if (i > 0 && abs(c) == 1) term.clear();
    if (i > 0) term += (term.empty() ? "x" : "*x") + (i > 1 ? "^" + std::to_string(i) : std::string());
    if (out.empty())
      out = (sgn(c) < 0 ? "-" : "") + term;
    else
      out += (sgn(c) < 0 ? " - " : " + ") + term;
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const long db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  for (long k = a.degree() - db; k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + db)] / b.leading();
    quo[static_cast<std::size_t>(k)] = c;
    if (sgn(c) == 0) continue;
    for (long j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k + j)] -= c * b.coefficients()[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial char_poly(const QMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix mk = QMatrix::zero(n, n);
  const auto id = QMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + id * c[n - k + 1];
    c[n - k] = -trace(m * mk) / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

} // namespace phinkit::linalg
