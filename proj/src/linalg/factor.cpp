#include "phinkit/linalg/factor.hpp"

#include "phinkit/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace phinkit::linalg {

std::vector<Integer> primitive_part(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("primitive part of zero polynomial");
  Integer lcm_den = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : f.coefficients()) {
    Integer v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (sgn(f.leading()) < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  if (n == 0) throw std::domain_error("divisors of zero");
  Integer m = abs(n);
  std::vector<std::pair<Integer, unsigned>> primes;
  for (Integer f = 2; f * f <= m; ++f) {
    if (f > 100'000'000) throw CrossCheckError("integer too large to factor by trial division");
    if (m % f != 0) continue;
    unsigned e = 0;
    while (m % f == 0) {
      m /= f;
      ++e;
    }
    primes.emplace_back(f, e);
  }
  if (m > 1) primes.emplace_back(m, 1);
  std::vector<Integer> out{1};
  for (const auto& [pr, e] : primes) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= pr;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Polynomial to_poly(const std::vector<Integer>& c) {
  std::vector<Rational> r;
  for (const auto& x : c) r.emplace_back(x);
  return Polynomial(std::move(r));
}

Integer eval_int(const std::vector<Integer>& c, const Integer& x) {
  Integer acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool has_integer_coefficients(const Polynomial& p) {
  for (const auto& c : p.coefficients())
    if (c.get_den() != 1) return false;
  return true;
}

/// Splits off all rational roots of a square-free polynomial.
void extract_rational_roots(Polynomial& f, std::vector<Polynomial>& linear) {
  if (f.degree() < 1) return;
  auto c = primitive_part(f);
  // x = 0 is a root iff the constant term vanishes.
  if (c.front() == 0) {
    linear.push_back(Polynomial({Rational(0), Rational(1)}));
    f = divmod(f, linear.back()).first;
    c = primitive_part(f);
  }
  if (f.degree() < 1) return;
  const auto num_cands = divisors(c.front());
  const auto den_cands = divisors(c.back());
  std::vector<Rational> roots;
  for (const auto& a : num_cands)
    for (const auto& b : den_cands)
      for (int s : {1, -1}) {
        Rational r(a * s, b);
        r.canonicalize();
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
        if (sgn(f.evaluate(r)) == 0) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  for (const auto& r : roots) {
    Polynomial lin({-r, Rational(1)});
    linear.push_back(lin);
    f = divmod(f, lin).first;
  }
}

/// Kronecker: find a factor of degree k of the primitive integer polynomial g.
bool find_factor(const std::vector<Integer>& g, long k, Polynomial& out, std::size_t& budget) {
  // Choose k+1 evaluation points with the fewest divisors.
  std::vector<std::pair<std::size_t, Integer>> cand;
  for (long t = 0; cand.size() < static_cast<std::size_t>(3 * (k + 1)) + 2; ++t) {
    for (long x : {t, -t}) {
      Integer v = eval_int(g, Integer(x));
      if (v == 0) continue;
      if (std::any_of(cand.begin(), cand.end(), [&](const auto& c) { return c.second == x; })) continue;
      cand.emplace_back(divisors(v).size(), Integer(x));
    }
  }
  std::stable_sort(cand.begin(), cand.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Integer> xs;
  std::vector<std::vector<Integer>> choices;
  for (long i = 0; i <= k; ++i) {
    const Integer& x = cand[static_cast<std::size_t>(i)].second;
    xs.push_back(x);
    auto ds = divisors(eval_int(g, x));
    std::vector<Integer> signed_ds;
    for (const auto& d : ds) {
      signed_ds.push_back(d);
      if (i > 0) signed_ds.push_back(-d); // fix the sign at the first point
    }
    choices.push_back(std::move(signed_ds));
  }
  const Polynomial gp = to_poly(g);
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    if (budget == 0) throw CrossCheckError("factorisation search budget exhausted");
    --budget;
    // Lagrange interpolation through (xs[i], choices[i][idx[i]]).
    Polynomial h;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      Polynomial basis({Rational(1)});
      Rational denom = 1;
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (j == i) continue;
        basis = basis * Polynomial({Rational(-xs[j]), Rational(1)});
        denom *= Rational(xs[i] - xs[j]);
      }
      h = h + basis * (Rational(choices[i][idx[i]]) / denom);
    }
    if (h.degree() == k && has_integer_coefficients(h)) {
      auto [q, r] = divmod(gp, h);
      if (r.is_zero()) {
        out = h.monic();
        return true;
      }
    }
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
    if (pos == idx.size()) return false;
  }
}

void factor_squarefree(Polynomial f, std::vector<Polynomial>& out, std::size_t& budget) {
  extract_rational_roots(f, out);
  if (f.degree() < 1) return;
  if (f.degree() <= 3) {
    out.push_back(f.monic());
    return;
  }
  for (long k = 2; k <= f.degree() / 2; ++k) {
    Polynomial h;
    if (find_factor(primitive_part(f), k, h, budget)) {
      factor_squarefree(h, out, budget);
      factor_squarefree(divmod(f, h).first, out, budget);
      return;
    }
  }
  out.push_back(f.monic());
}

} // namespace

std::vector<Factor> factor_rational(const Polynomial& f, std::size_t budget) {
  if (f.degree() < 1) return {};
  // Yun's square-free decomposition.
  std::vector<std::pair<Polynomial, unsigned>> sqf;
  Polynomial a = f.monic();
  Polynomial b = a.derivative();
  Polynomial c = gcd(a, b);
  Polynomial w = divmod(a, c).first;
  Polynomial y = divmod(b, c).first;
  Polynomial z = y - w.derivative();
  unsigned i = 1;
  while (w.degree() > 0) {
    Polynomial g = gcd(w, z);
    if (g.degree() > 0) sqf.emplace_back(g, i);
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    z = y - w.derivative();
    ++i;
  }
  std::vector<Factor> out;
  for (const auto& [part, mult] : sqf) {
    std::vector<Polynomial> irr;
    factor_squarefree(part, irr, budget);
    for (auto& p : irr) out.push_back({p.monic(), mult});
  }
  std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) {
    if (x.poly.degree() != y.poly.degree()) return x.poly.degree() < y.poly.degree();
    return x.poly.coefficients() < y.poly.coefficients();
  });
  return out;
}

} // namespace phinkit::linalg
