#pragma once
// Module and matrix builders shared by the unit tests and the acceptance runner.

#include "phinkit/phin/module.hpp"

#include <map>
#include <random>
#include <vector>

namespace fixtures {

using namespace phinkit::linalg;
using phinkit::phin::IndexedFiltration;
using phinkit::phin::Orientation;
using phinkit::phin::PhiNModule;

inline QVector vec(std::initializer_list<long> xs) {
  QVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Subspace span_of(std::size_t n, const std::vector<QVector>& vs) { return Subspace::span(vs, n); }

/// Decreasing filtration from explicitly listed steps (JSON semantics).
inline IndexedFiltration decreasing(std::size_t n, const std::map<int, std::vector<QVector>>& steps) {
  std::map<int, Subspace> s;
  for (const auto& [i, vs] : steps) s[i] = Subspace::span(vs, n);
  return IndexedFiltration::from_steps(n, Orientation::decreasing, s);
}

/// Nilpotent in Jordan form: within a block, e_k -> e_{k-1}.
inline QMatrix jordan_nilpotent(const std::vector<std::size_t>& blocks) {
  std::size_t n = 0;
  for (auto b : blocks) n += b;
  QMatrix N(n, n);
  std::size_t off = 0;
  for (auto b : blocks) {
    for (std::size_t k = 1; k < b; ++k) N(off + k - 1, off + k) = 1;
    off += b;
  }
  return N;
}

inline QMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> dist(-2, 2);
  for (;;) {
    QMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = dist(rng);
    if (determinant(g) != 0) return g;
  }
}

inline QMatrix conjugate(const QMatrix& g, const QMatrix& m) { return g * m * inverse(g); }

inline QMatrix diag(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return QMatrix::diagonal(v);
}

/// d = 1, phi = diag(1, q), N e2 = e1, Fil^1 = the given line.
inline PhiNModule tate_curve(const QVector& fil_line, unsigned long p = 2) {
  PhiNModule D;
  D.p = p;
  D.d = 1;
  D.phi = diag({1, static_cast<long>(p)});
  D.N = QMatrix{{0, 1}, {0, 0}};
  D.fil = decreasing(2, {{0, {vec({1, 0}), vec({0, 1})}}, {1, {fil_line}}});
  return D;
}

/// Dimension one, phi = q^i, Fil jumps at i.
inline PhiNModule tate_twist(int i, unsigned long p = 2) {
  PhiNModule D;
  D.p = p;
  D.d = 2 * i > 0 ? 2 * i : 0;
  Rational q = ipow(Integer(p), static_cast<unsigned long>(i < 0 ? -i : i));
  D.phi = QMatrix{{i >= 0 ? q : Rational(1 / q)}};
  D.N = QMatrix{{0}};
  D.fil = decreasing(1, {{i, {vec({1})}}});
  return D;
}

/// d = 2 with basis (v0, a, b, w) of slopes (0, 1, 1, 2): N w = a, N a = v0,
/// N b = 0. The Gamma-graded dimensions are (1, 2, 1), C = span(b), and the
/// Hodge filtration is chosen opposite to the Gamma filtration on D/C.
inline PhiNModule middle_degree_module(unsigned long p = 2) {
  const long q = static_cast<long>(p);
  PhiNModule D;
  D.p = p;
  D.d = 2;
  D.phi = diag({1, q, q, q * q});
  D.N = QMatrix(4, 4);
  D.N(1, 3) = 1; // w -> a
  D.N(0, 1) = 1; // a -> v0
  D.fil = decreasing(4, {{0, {vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 1, 0}), vec({0, 0, 0, 1})}},
                         {1, {vec({1, 0, 0, 1}), vec({1, 1, 0, 0}), vec({0, 0, 1, 0})}},
                         {2, {vec({2, 1, 0, 1})}}});
  return D;
}

} // namespace fixtures
