#include "phinkit/linalg/subspace.hpp"

#include <stdexcept>

namespace phinkit::linalg {

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = QMatrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = QMatrix::identity(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(const QMatrix& generators) {
  auto e = rref(generators);
  Subspace s;
  s.ambient_ = generators.cols();
  s.basis_ = QMatrix(e.rank(), generators.cols());
  for (std::size_t i = 0; i < e.rank(); ++i)
    for (std::size_t j = 0; j < generators.cols(); ++j) s.basis_(i, j) = e.reduced(i, j);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::span(const std::vector<QVector>& vectors, std::size_t ambient) {
  return span(QMatrix::from_rows(vectors, ambient));
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& indices) {
  QMatrix g(indices.size(), ambient);
  for (std::size_t i = 0; i < indices.size(); ++i) g(i, indices[i]) = 1;
  return span(g);
}

std::vector<QVector> Subspace::basis_vectors() const {
  std::vector<QVector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

bool Subspace::contains(const QVector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector/subspace dimension mismatch");
  // Reduce against the RREF basis; v is inside iff the remainder vanishes.
  QVector r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Rational c = r[pivots_[i]];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= c * basis_(i, j);
  }
  for (const auto& x : r)
    if (sgn(x) != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

QMatrix Subspace::annihilator() const {
  // Functionals f with f . b = 0 for every basis row b: kernel of the basis.
  Subspace k = kernel(basis_.rows() == 0 ? QMatrix(0, ambient_) : basis_);
  return k.basis_;
}

Subspace kernel(const QMatrix& m) {
  const std::size_t n = m.cols();
  auto e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  QMatrix gens(n - e.rank(), n);
  std::size_t row = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    gens(row, free) = 1;
    for (std::size_t i = 0; i < e.rank(); ++i) gens(row, e.pivots[i]) = -e.reduced(i, free);
    ++row;
  }
  return Subspace::span(gens);
}

Subspace image(const QMatrix& m) { return Subspace::span(m.transpose()); }

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
}

QMatrix stack(const QMatrix& a, const QMatrix& b) {
  QMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

} // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return Subspace::span(stack(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  if (a.is_full()) return b;
  if (b.is_full()) return a;
  return kernel(stack(a.annihilator(), b.annihilator()));
}

Subspace apply(const QMatrix& m, const Subspace& v) {
  if (m.cols() != v.ambient_dim()) throw std::invalid_argument("apply: dimension mismatch");
  if (v.is_zero()) return Subspace::zero(m.rows());
  return Subspace::span(v.basis() * m.transpose());
}

Subspace preimage(const QMatrix& m, const Subspace& w) {
  if (m.rows() != w.ambient_dim()) throw std::invalid_argument("preimage: dimension mismatch");
  if (w.is_full()) return Subspace::full(m.cols());
  return kernel(w.annihilator() * m);
}

bool is_stable(const QMatrix& m, const Subspace& v) { return v.contains(apply(m, v)); }

QMatrix restrict_to(const QMatrix& m, const Subspace& w) {
  if (!is_stable(m, w)) throw std::invalid_argument("restrict_to: subspace is not stable");
  const std::size_t k = w.dim();
  QMatrix out(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    QVector img = m * w.basis().row(j);
    // RREF basis: the coordinate along row i is the entry at its pivot column.
    for (std::size_t i = 0; i < k; ++i) out(i, j) = img[w.pivots()[i]];
  }
  return out;
}

Subspace embed(const Subspace& coords, const Subspace& w) {
  if (coords.ambient_dim() != w.dim()) throw std::invalid_argument("embed: dimension mismatch");
  if (coords.is_zero()) return Subspace::zero(w.ambient_dim());
  return Subspace::span(coords.basis() * w.basis());
}

QuotientMap::QuotientMap(const Subspace& whole, const Subspace& sub)
    : ambient_(whole.ambient_dim()), sub_dim_(sub.dim()) {
  if (!whole.contains(sub)) throw std::invalid_argument("quotient: subspace not contained");
  std::vector<QVector> basis = sub.basis_vectors();
  Subspace acc = sub;
  for (const auto& v : whole.basis_vectors()) {
    if (acc.contains(v)) continue;
    basis.push_back(v);
    reps_.push_back(v);
    acc = subspace_sum(acc, Subspace::span({v}, ambient_));
  }
  if (basis.empty()) return;
  QMatrix g = QMatrix::from_rows(basis, ambient_);
  auto e = rref(g);
  cols_ = e.pivots;
  std::vector<std::size_t> all_rows(basis.size());
  for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
  solve_ = inverse(g.select(all_rows, cols_));
}

QVector QuotientMap::coordinates(const QVector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("quotient coordinates: dimension mismatch");
  const std::size_t k = sub_dim_ + reps_.size();
  QVector out(reps_.size());
  // x^T G = v  =>  x^T = v[cols] * inverse(G[:, cols])
  for (std::size_t j = sub_dim_; j < k; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (sgn(v[cols_[i]]) != 0) s += v[cols_[i]] * solve_(i, j);
    out[j - sub_dim_] = s;
  }
  return out;
}

Subspace QuotientMap::image_of(const Subspace& s) const {
  std::vector<QVector> rows;
  for (const auto& v : s.basis_vectors()) rows.push_back(coordinates(v));
  return Subspace::span(rows, dim());
}

QMatrix QuotientMap::induced(const QMatrix& op, const QuotientMap& target) const {
  QMatrix out(target.dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    QVector c = target.coordinates(op * reps_[j]);
    for (std::size_t i = 0; i < target.dim(); ++i) out(i, j) = c[i];
  }
  return out;
}

} // namespace phinkit::linalg
