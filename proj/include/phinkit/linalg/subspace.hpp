#pragma once

#include "phinkit/linalg/matrix.hpp"

#include <cstddef>
#include <vector>

namespace phinkit::linalg {

/// Subspace of Q^n stored as the nonzero rows of its reduced row echelon
/// basis. The representation is canonical, so == is subspace equality.
class Subspace {
public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  /// Span of the rows of `generators` (any rank).
  static Subspace span(const QMatrix& generators);
  static Subspace span(const std::vector<QVector>& vectors, std::size_t ambient);
  /// Span of the standard basis vectors with the given indices.
  static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& indices);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_; }
  const QMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::vector<QVector> basis_vectors() const;

  bool contains(const QVector& v) const;
  bool contains(const Subspace& other) const;

  /// Linear functionals vanishing on this subspace, as rows.
  QMatrix annihilator() const;

  bool operator==(const Subspace& rhs) const = default;

private:
  std::size_t ambient_ = 0;
  QMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
Subspace kernel(const QMatrix& m);
/// Column span of m.
Subspace image(const QMatrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// m(V), for m : Q^cols -> Q^rows.
Subspace apply(const QMatrix& m, const Subspace& v);
/// m^{-1}(W) = {v : m v in W}.
Subspace preimage(const QMatrix& m, const Subspace& w);

bool is_stable(const QMatrix& m, const Subspace& v);

/// Matrix of m restricted to the m-stable subspace w, in the RREF basis of w.
QMatrix restrict_to(const QMatrix& m, const Subspace& w);
/// Subspace of the ambient space whose coordinates in the RREF basis of w
/// form `coords`.
Subspace embed(const Subspace& coords, const Subspace& w);

/// Coordinates on a quotient V/W for W inside V. A basis of V is chosen as
/// the basis of W followed by representatives of a complement; coordinates()
/// returns the complement part of the expansion of a vector of V.
class QuotientMap {
public:
  QuotientMap() = default;
  QuotientMap(const Subspace& whole, const Subspace& sub);

  std::size_t dim() const noexcept { return reps_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  /// Complement representatives in the ambient space, one per quotient coordinate.
  const std::vector<QVector>& representatives() const noexcept { return reps_; }
  /// Quotient coordinates of v; v must lie in the whole space.
  QVector coordinates(const QVector& v) const;
  /// Image of a subspace of the whole space, as a subspace of Q^dim().
  Subspace image_of(const Subspace& s) const;
  /// Matrix of the induced map of `op` from this quotient to `target`.
  QMatrix induced(const QMatrix& op, const QuotientMap& target) const;

private:
  std::size_t ambient_ = 0;
  std::size_t sub_dim_ = 0;
  std::vector<QVector> reps_;
  std::vector<std::size_t> cols_;
  QMatrix solve_; // inverse of the chosen square block of the basis
};

} // namespace phinkit::linalg
