#include "doctest.h"

#include "phinkit/error.hpp"
#include "phinkit/linalg/factor.hpp"
#include "phinkit/linalg/newton.hpp"
#include "phinkit/linalg/subspace.hpp"

#include <map>
#include <random>

using namespace phinkit::linalg;

namespace {

QVector vec(std::initializer_list<long> xs) {
  QVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

QMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

} // namespace

TEST_CASE("rational text round trip and canonical form") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), phinkit::InvalidInput);
  CHECK_THROWS_AS(parse_rational("1/-2"), phinkit::InvalidInput);
  CHECK_THROWS_AS(parse_rational("x"), phinkit::InvalidInput);
  CHECK(q_valuation(Rational(8, 3), 2, 1) == 3);
  CHECK(q_valuation(Rational(1, 27), 3, 2) == Rational(-3, 2));
}

TEST_CASE("kernel") {
  CHECK(kernel(QMatrix::zero(2, 2)) == Subspace::full(2));
  CHECK(kernel(QMatrix::identity(3)) == Subspace::zero(3));
  // Row reduction of [[1,1],[1,1]] leaves x + y = 0.
  auto k = kernel(QMatrix{{1, 1}, {1, 1}});
  CHECK(k == Subspace::span({vec({1, -1})}, 2));
  CHECK(k.dim() == 1);
}

TEST_CASE("image") {
  CHECK(image(QMatrix::identity(4)) == Subspace::full(4));
  CHECK(image(QMatrix::zero(3, 2)) == Subspace::zero(3));
  CHECK(image(QMatrix{{1, 2}, {2, 4}}) == Subspace::span({vec({1, 2})}, 2));
}

TEST_CASE("sum and intersection") {
  auto a = Subspace::span({vec({1, 2, 3}), vec({0, 1, 1})}, 3);
  CHECK(subspace_sum(a, a) == a);
  CHECK(subspace_intersect(a, a) == a);
  auto l1 = Subspace::span({vec({1, 0})}, 2), l2 = Subspace::span({vec({1, 1})}, 2);
  CHECK(subspace_sum(l1, l2).is_full());
  CHECK(subspace_intersect(l1, l2).is_zero());
  auto e12 = Subspace::coordinate(3, {0, 1}), e23 = Subspace::coordinate(3, {1, 2});
  CHECK(subspace_intersect(e12, e23) == Subspace::coordinate(3, {1}));
  CHECK_THROWS(subspace_sum(l1, e12));
}

TEST_CASE("rank-nullity, canonical form and the modular law on random inputs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    auto m = random_matrix(rng, r, c, -2, 2);
    CHECK(kernel(m).dim() + image(m).dim() == c);

    std::size_t n = 1 + rng() % 5;
    auto a = Subspace::span(random_matrix(rng, rng() % (n + 1), n, -1, 1));
    auto b = Subspace::span(random_matrix(rng, rng() % (n + 1), n, -1, 1));
    CHECK(a.dim() + b.dim() == subspace_sum(a, b).dim() + subspace_intersect(a, b).dim());
    // Same subspace, different generators: identical representation.
    auto g = random_matrix(rng, a.dim(), a.dim(), -3, 3);
    if (a.dim() > 0 && sgn(determinant(g)) != 0) CHECK(Subspace::span(g * a.basis()) == a);
    if (a.contains(b) && b.contains(a)) CHECK(a == b);
  }
}

TEST_CASE("preimage and quotient coordinates") {
  QMatrix n{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  auto target = Subspace::coordinate(3, {0});
  CHECK(preimage(n, target) == Subspace::coordinate(3, {0, 1}));
  QuotientMap q(Subspace::full(3), Subspace::coordinate(3, {0}));
  CHECK(q.dim() == 2);
  CHECK(q.coordinates(vec({5, 0, 0})) == vec({0, 0}));
  auto induced = q.induced(n, q);
  CHECK(induced == QMatrix{{0, 1}, {0, 0}});
}

TEST_CASE("characteristic polynomial") {
  CHECK(char_poly(QMatrix::identity(2)) == Polynomial::from_roots({1, 1}));
  const Rational q = 5;
  CHECK(char_poly(QMatrix{{1, 0}, {0, q}}) == Polynomial::from_roots({1, q}));
  // Companion matrix of x^2 - 3x + 2.
  CHECK(char_poly(QMatrix{{0, -2}, {1, 3}}) == Polynomial({2, -3, 1}));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    auto m = random_matrix(rng, 4, 4, -3, 3);
    auto cp = char_poly(m);
    CHECK(cp.leading() == 1);
    CHECK(cp.coefficient(0) == determinant(m));
    CHECK(cp.coefficient(3) == -trace(m));
    CHECK(cp.evaluate(m).is_zero()); // Cayley-Hamilton
  }
  CHECK_THROWS(char_poly(QMatrix(2, 3)));
}

TEST_CASE("Newton polygon") {
  auto np = newton_polygon(Polynomial::from_roots({1, 2}), 2, 1);
  CHECK(np.segments == std::vector<NewtonSegment>{{0, 1}, {1, 1}});
  CHECK(newton_polygon(Polynomial::from_roots({1, 1, 1, 1}), 5, 1).segments ==
        std::vector<NewtonSegment>{{0, 4}});
  CHECK(newton_polygon(Polynomial::from_roots({9, 3}), 3, 1).segments ==
        std::vector<NewtonSegment>{{1, 1}, {2, 1}});
  // Slopes are measured in units of q = p^a.
  CHECK(newton_polygon(Polynomial::from_roots({4, 2}), 2, 2).segments ==
        std::vector<NewtonSegment>{{Rational(1, 2), 1}, {1, 1}});
  CHECK(newton_polygon(Polynomial({-3, 0, 1}), 3, 1).segments ==
        std::vector<NewtonSegment>{{Rational(1, 2), 2}});
  CHECK_THROWS_AS(newton_polygon(Polynomial({0, 1}), 2, 1), phinkit::PreconditionError);
}

TEST_CASE("Newton slopes of products of (x - u p^k) equal the chosen exponents") {
  std::mt19937_64 rng(3);
  const unsigned long primes[] = {2, 3, 5};
  for (int t = 0; t < 100; ++t) {
    unsigned long p = primes[rng() % 3];
    std::vector<Rational> roots;
    std::map<long, std::size_t> expected;
    std::size_t n = 1 + rng() % 5;
    for (std::size_t i = 0; i < n; ++i) {
      long k = static_cast<long>(rng() % 4);
      long u = 1 + static_cast<long>(rng() % 4);
      while (u % static_cast<long>(p) == 0) ++u;
      if (rng() % 2) u = -u;
      roots.emplace_back(Rational(ipow(p, static_cast<unsigned long>(k))) * u);
      ++expected[k];
    }
    auto np = newton_polygon(Polynomial::from_roots(roots), p, 1);
    std::map<long, std::size_t> got;
    for (const auto& s : np.segments) {
      REQUIRE(s.slope.get_den() == 1);
      got[s.slope.get_num().get_si()] = s.length;
    }
    CHECK(got == expected);
    CHECK(np.total_length() == n);
  }
}

TEST_CASE("factorisation over Q") {
  auto f = factor_rational(Polynomial::from_roots({1, 1, 2, Rational(1, 3)}));
  REQUIRE(f.size() == 3);
  CHECK(f[0].poly == Polynomial::from_roots({2}));
  CHECK(f[1].poly == Polynomial::from_roots({1}));
  CHECK(f[1].multiplicity == 2);
  CHECK(f[2].poly == Polynomial::from_roots({Rational(1, 3)}));
  unsigned total = 0;
  for (auto& x : f) total += x.multiplicity * static_cast<unsigned>(x.poly.degree());
  CHECK(total == 4);
  // (x^2 + x + 2)(x^2 - 3): irreducible quadratics found by interpolation.
  auto g = Polynomial({2, 1, 1}) * Polynomial({-3, 0, 1});
  auto fg = factor_rational(g);
  REQUIRE(fg.size() == 2);
  CHECK(fg[0].poly * fg[1].poly == g);
  // x^4 + 1 is irreducible.
  auto h = factor_rational(Polynomial({1, 0, 0, 0, 1}));
  REQUIRE(h.size() == 1);
  CHECK(h[0].poly.degree() == 4);
  CHECK(divisors(Integer(12)) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
}
