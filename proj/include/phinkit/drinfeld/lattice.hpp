#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace phinkit::drinfeld {

/// Homothety class of a full-rank lattice in Q_p^{d+1}, stored as the unique
/// representative L with L in Z^{d+1}, L not in pZ^{d+1}, given by the rows
/// of its upper-triangular Hermite normal form: diagonal entries are powers
/// of p and entries above the diagonal are reduced modulo the diagonal entry
/// of their column.
class LatticeClass {
public:
  /// The standard lattice Z^{d+1}.
  static LatticeClass standard(int d);
  /// Class of the row span of the given integer rows (any number, full rank).
  static LatticeClass from_generators(int d, unsigned p, const std::vector<std::vector<std::int64_t>>& rows);

  int d() const noexcept { return d_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(d_ + 1); }
  std::int64_t at(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  /// Exponent m of det = p^m.
  int det_exponent(unsigned p) const;

  auto operator<=>(const LatticeClass&) const = default;

private:
  int d_ = 0;
  std::vector<std::int64_t> entries_;
};

struct Neighbor {
  LatticeClass vertex;
  int subspace_dim; ///< dim of the image of the neighbour in L / pL
};

/// One neighbour per nonzero proper subspace W of L / pL = F_p^{d+1}:
/// the lattice pL + (lift of W).
std::vector<Neighbor> vertex_neighbors(const LatticeClass& v, unsigned p);

struct Edge {
  std::size_t u;
  std::size_t v;
  int dim_from_u; ///< subspace dimension of v seen from u; from v it is d+1 minus this
  auto operator<=>(const Edge&) const = default;
};

struct BuildingBall {
  int d = 1;
  unsigned p = 2;
  int radius = 0;
  std::vector<LatticeClass> vertices; ///< sorted by (distance, representative)
  std::vector<int> distance;
  std::vector<Edge> edges;             ///< u < v, sorted

  std::size_t count_at_most(int n) const;
};

/// Breadth-first enumeration of all vertices within distance n of the
/// standard vertex. Throws PreconditionError("budget exceeded") beyond
/// `vertex_budget` vertices.
BuildingBall ball(int d, unsigned p, int n, std::size_t vertex_budget = 200000);

/// V_n together with every vertex at distance n+1 adjacent to some vertex of
/// V_n whose subspace (seen from that vertex) has dimension at most m.
std::vector<std::size_t> v_n_m(const BuildingBall& b, int n, int m);

} // namespace phinkit::drinfeld
