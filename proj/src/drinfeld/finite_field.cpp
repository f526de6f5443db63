#include "phinkit/drinfeld/finite_field.hpp"

#include "phinkit/error.hpp"
#include "phinkit/linalg/rational.hpp"

#include <string>

namespace phinkit::drinfeld {

namespace {

// Digits of x in base p, lowest first, padded to e.
std::vector<unsigned> digits(unsigned x, unsigned p, unsigned e) {
  std::vector<unsigned> out(e);
  for (unsigned i = 0; i < e; ++i, x /= p) out[i] = x % p;
  return out;
}

unsigned from_digits(const std::vector<unsigned>& d, unsigned p) {
  unsigned x = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) x = x * p + *it;
  return x;
}

// Product of two residues modulo the monic polynomial x^e + low (low has e digits).
std::vector<unsigned> poly_mulmod(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                                  const std::vector<unsigned>& low, unsigned p) {
  const std::size_t e = low.size();
  std::vector<unsigned> prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t k = 2 * e - 1; k >= e; --k) {
    const unsigned c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    // x^k = x^{k-e} * x^e = -x^{k-e} * low
    for (std::size_t i = 0; i < e; ++i) prod[k - e + i] = (prod[k - e + i] + (p - c) * low[i]) % p;
  }
  prod.resize(e);
  return prod;
}

// Irreducibility of x^e + low by trial division with every monic
// polynomial of degree 1..e/2.
bool is_irreducible(const std::vector<unsigned>& low, unsigned p) {
  const std::size_t e = low.size();
  std::vector<unsigned> f(low);
  f.push_back(1);
  for (std::size_t k = 1; 2 * k <= e; ++k) {
    unsigned count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (unsigned code = 0; code < count; ++code) {
      std::vector<unsigned> g = digits(code, p, static_cast<unsigned>(k));
      g.push_back(1);
      std::vector<unsigned> rem(f);
      for (std::size_t top = e; top + 1 > k; --top) {
        const unsigned c = rem[top];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= k; ++i) rem[top - k + i] = (rem[top - k + i] + (p - c) * g[i]) % p;
      }
      bool zero = true;
      for (std::size_t i = 0; i < k; ++i) zero = zero && rem[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

} // namespace

FiniteField::FiniteField(unsigned q) : q_(q), p_(0), e_(0) {
  if (q < 2 || q > 4096) throw PreconditionError("range", "field order must lie in 2..4096");
  for (unsigned p = 2; p <= q; ++p)
    if (q % p == 0) {
      p_ = p;
      break;
    }
  unsigned t = q;
  while (t % p_ == 0) {
    t /= p_;
    ++e_;
  }
  if (t != 1) throw PreconditionError("range", "field order " + std::to_string(q) + " is not a prime power");

  std::vector<unsigned> low(e_, 0);
  if (e_ > 1) {
    bool found = false;
    for (unsigned code = 0; code < q_ && !found; ++code) {
      low = digits(code, p_, e_);
      if (low[0] != 0 && is_irreducible(low, p_)) found = true;
    }
    if (!found) throw CrossCheckError("no irreducible polynomial found");
  }
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    const auto da = digits(a, p_, e_);
    std::vector<unsigned> dn(e_);
    for (unsigned i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = from_digits(dn, p_);
    for (unsigned b = 0; b < q_; ++b) {
      const auto db = digits(b, p_, e_);
      std::vector<unsigned> ds(e_);
      for (unsigned i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = from_digits(ds, p_);
      mul_[a * q_ + b] = e_ == 1 ? (a * b) % p_ : from_digits(poly_mulmod(da, db, low, p_), p_);
    }
  }
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul(a, b) == 1) inv_[a] = b;
}

unsigned FiniteField::inv(unsigned a) const {
  if (a == 0) throw std::domain_error("inverse of zero in a finite field");
  return inv_[a];
}

unsigned FiniteField::pow(unsigned a, unsigned long k) const {
  unsigned out = 1;
  for (; k; k >>= 1, a = mul(a, a))
    if (k & 1) out = mul(out, a);
  return out;
}

std::vector<unsigned> FiniteField::subfield(unsigned q0) const {
  std::vector<unsigned> out;
  for (unsigned x = 0; x < q_; ++x)
    if (pow(x, q0) == x) out.push_back(x);
  if (out.size() != q0) throw PreconditionError("range", "F_" + std::to_string(q0) + " is not a subfield");
  return out;
}

std::vector<std::size_t> rref(const FiniteField& F, std::vector<FVector>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const unsigned s = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const unsigned f = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<FVector> null_space(const FiniteField& F, std::vector<FVector> rows, std::size_t n) {
  const auto pivots = rref(F, rows);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<FVector> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    FVector v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(rows[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

unsigned dot(const FiniteField& F, const FVector& a, const FVector& b) {
  unsigned s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = F.add(s, F.mul(a[i], b[i]));
  return s;
}

FVector normalize(const FiniteField& F, FVector v) {
  for (unsigned x : v)
    if (x != 0) {
      const unsigned s = F.inv(x);
      for (auto& y : v) y = F.mul(y, s);
      return v;
    }
  return v;
}

std::vector<FVector> projective_space(const FiniteField& F, std::size_t n) {
  std::vector<FVector> out;
  const unsigned q = F.order();
  // Leading 1 at position lead, zeros before, anything after.
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t tail = n - lead - 1;
    std::size_t count = 1;
    for (std::size_t i = 0; i < tail; ++i) count *= q;
    for (std::size_t code = 0; code < count; ++code) {
      FVector v(n, 0);
      v[lead] = 1;
      std::size_t c = code;
      for (std::size_t i = 0; i < tail; ++i, c /= q) v[lead + 1 + i] = static_cast<unsigned>(c % q);
      out.push_back(std::move(v));
    }
  }
  return out;
}

} // namespace phinkit::drinfeld
