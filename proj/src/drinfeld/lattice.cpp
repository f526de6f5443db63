#include "phinkit/drinfeld/lattice.hpp"

#include "phinkit/error.hpp"
#include "phinkit/drinfeld/finite_field.hpp"
#include "phinkit/linalg/rational.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <tuple>

namespace phinkit::drinfeld {

namespace {

using Row = std::vector<std::int64_t>;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw PreconditionError("budget exceeded", "lattice entries overflow 64 bits");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw PreconditionError("budget exceeded", "lattice entries overflow 64 bits");
  return out;
}

// row_a <- x*row_a + y*row_b, row_b <- u*row_a + v*row_b (old values).
void combine(Row& a, Row& b, std::int64_t x, std::int64_t y, std::int64_t u, std::int64_t v) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    const std::int64_t na = checked_sub(checked_mul(x, a[j]), checked_mul(-y, b[j]));
    const std::int64_t nb = checked_sub(checked_mul(u, a[j]), checked_mul(-v, b[j]));
    a[j] = na;
    b[j] = nb;
  }
}

// Upper-triangular Hermite normal form of the row lattice (full rank n).
std::vector<Row> hermite(std::vector<Row> rows, std::size_t n) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < n; ++c) {
    // Euclid down column c over rows r.. until one nonzero entry remains.
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      // Extended gcd on (rows[r][c], rows[i][c]).
      std::int64_t a = rows[r][c], b = rows[i][c];
      std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
      while (b != 0) {
        const std::int64_t t = a / b;
        std::tie(a, b) = std::make_pair(b, a - t * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - t * x1);
        std::tie(y0, y1) = std::make_pair(y1, y0 - t * y1);
      }
      // x0*A + y0*B = a = gcd; x1*A + y1*B = 0, determinant +-1.
      combine(rows[r], rows[i], x0, y0, x1, y1);
    }
    if (rows[r][c] == 0) throw PreconditionError("bad parameters", "lattice generators are not of full rank");
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    ++r;
  }
  rows.resize(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < c; ++i) {
      const std::int64_t piv = rows[c][c];
      std::int64_t f = rows[i][c] / piv;
      if (rows[i][c] - f * piv < 0) --f;
      if (f != 0)
        for (std::size_t j = c; j < n; ++j) rows[i][j] = checked_sub(rows[i][j], checked_mul(f, rows[c][j]));
    }
  return rows;
}

} // namespace

LatticeClass LatticeClass::standard(int d) {
  LatticeClass L;
  L.d_ = d;
  L.entries_.assign(L.size() * L.size(), 0);
  for (std::size_t i = 0; i < L.size(); ++i) L.entries_[i * L.size() + i] = 1;
  return L;
}

LatticeClass LatticeClass::from_generators(int d, unsigned p, const std::vector<Row>& gens) {
  if (d < 1) throw PreconditionError("bad parameters", "d must be at least 1");
  const std::size_t n = static_cast<std::size_t>(d + 1);
  auto rows = hermite(gens, n);
  // Divide by p while every entry is divisible, giving the primitive representative.
  for (;;) {
    bool divisible = true;
    for (const auto& r : rows)
      for (auto x : r) divisible = divisible && x % static_cast<std::int64_t>(p) == 0;
    if (!divisible) break;
    for (auto& r : rows)
      for (auto& x : r) x /= static_cast<std::int64_t>(p);
  }
  rows = hermite(rows, n);
  LatticeClass L;
  L.d_ = d;
  for (const auto& r : rows) L.entries_.insert(L.entries_.end(), r.begin(), r.end());
  return L;
}

int LatticeClass::det_exponent(unsigned p) const {
  int m = 0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::int64_t x = at(i, i); x % static_cast<std::int64_t>(p) == 0; x /= static_cast<std::int64_t>(p)) ++m;
  return m;
}

namespace {

// Every nonzero proper subspace of F_p^n in RREF, built by adjoining points.
std::vector<std::vector<FVector>> proper_subspaces(unsigned p, std::size_t n) {
  const FiniteField F(p);
  const auto points = projective_space(F, n);
  std::set<std::vector<FVector>> seen;
  std::vector<std::vector<FVector>> frontier;
  for (const auto& pt : points) frontier.push_back({pt});
  while (!frontier.empty()) {
    std::vector<std::vector<FVector>> next;
    for (auto rows : frontier) {
      rref(F, rows);
      if (rows.size() >= n || !seen.insert(rows).second) continue;
      for (const auto& pt : points) {
        auto bigger = rows;
        bigger.push_back(pt);
        next.push_back(std::move(bigger));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Neighbor> neighbors_from(const LatticeClass& v, unsigned p,
                                     const std::vector<std::vector<FVector>>& subspaces) {
  const std::size_t n = v.size();
  std::vector<Row> basis(n, Row(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis[i][j] = v.at(i, j);
  std::vector<Neighbor> out;
  for (const auto& W : subspaces) {
    std::vector<Row> gens;
    for (const auto& b : basis) {
      Row r(n);
      for (std::size_t j = 0; j < n; ++j) r[j] = checked_mul(b[j], p);
      gens.push_back(std::move(r));
    }
    for (const auto& w : W) {
      Row r(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[j] = checked_sub(r[j], -checked_mul(w[i], basis[i][j]));
      gens.push_back(std::move(r));
    }
    out.push_back({LatticeClass::from_generators(v.d(), p, gens), static_cast<int>(W.size())});
  }
  std::sort(out.begin(), out.end(), [](const Neighbor& a, const Neighbor& b) {
    return std::tie(a.subspace_dim, a.vertex) < std::tie(b.subspace_dim, b.vertex);
  });
  return out;
}

} // namespace

std::vector<Neighbor> vertex_neighbors(const LatticeClass& v, unsigned p) {
  if (!linalg::is_prime(p)) throw PreconditionError("bad parameters", "p must be prime");
  return neighbors_from(v, p, proper_subspaces(p, v.size()));
}

std::size_t BuildingBall::count_at_most(int n) const {
  return static_cast<std::size_t>(std::count_if(distance.begin(), distance.end(), [&](int x) { return x <= n; }));
}

BuildingBall ball(int d, unsigned p, int n, std::size_t vertex_budget) {
  if (n < 0) throw PreconditionError("bad parameters", "radius must be nonnegative");
  std::map<LatticeClass, int> dist;
  std::map<LatticeClass, std::vector<Neighbor>> nbrs;
  std::deque<LatticeClass> queue;
  if (!linalg::is_prime(p)) throw PreconditionError("bad parameters", "p must be prime");
  const auto subspaces = proper_subspaces(p, static_cast<std::size_t>(d + 1));
  const LatticeClass v0 = LatticeClass::standard(d);
  dist[v0] = 0;
  queue.push_back(v0);
  while (!queue.empty()) {
    const LatticeClass v = queue.front();
    queue.pop_front();
    auto& list = nbrs[v] = neighbors_from(v, p, subspaces);
    if (dist[v] == n) continue;
    for (const auto& nb : list) {
      if (dist.count(nb.vertex)) continue;
      dist[nb.vertex] = dist[v] + 1;
      if (dist.size() > vertex_budget)
        throw PreconditionError("budget exceeded", "ball exceeds " + std::to_string(vertex_budget) + " vertices");
      queue.push_back(nb.vertex);
    }
  }
  BuildingBall b;
  b.d = d;
  b.p = p;
  b.radius = n;
  std::vector<std::pair<int, LatticeClass>> order;
  for (const auto& [v, k] : dist) order.emplace_back(k, v);
  std::sort(order.begin(), order.end());
  std::map<LatticeClass, std::size_t> index;
  for (const auto& [k, v] : order) {
    index[v] = b.vertices.size();
    b.vertices.push_back(v);
    b.distance.push_back(k);
  }
  for (std::size_t u = 0; u < b.vertices.size(); ++u)
    for (const auto& nb : nbrs[b.vertices[u]]) {
      auto it = index.find(nb.vertex);
      if (it != index.end() && u < it->second) b.edges.push_back({u, it->second, nb.subspace_dim});
    }
  std::sort(b.edges.begin(), b.edges.end());
  return b;
}

std::vector<std::size_t> v_n_m(const BuildingBall& b, int n, int m) {
  if (b.radius < n + 1) throw PreconditionError("insufficient radius", "V_n^m needs a ball of radius n + 1");
  if (m < 1 || m > b.d) throw PreconditionError("bad parameters", "need 1 <= m <= d");
  std::set<std::size_t> out;
  for (std::size_t v = 0; v < b.vertices.size(); ++v)
    if (b.distance[v] <= n) out.insert(v);
  for (const auto& e : b.edges) {
    // Orient the edge from the inner vertex to the outer one.
    const bool forward = b.distance[e.u] == n && b.distance[e.v] == n + 1;
    const bool backward = b.distance[e.v] == n && b.distance[e.u] == n + 1;
    if (forward && e.dim_from_u <= m) out.insert(e.v);
    if (backward && b.d + 1 - e.dim_from_u <= m) out.insert(e.u);
  }
  return {out.begin(), out.end()};
}

} // namespace phinkit::drinfeld
