#pragma once

#include "phinkit/linalg/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace phinkit::linalg {

using QVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals. Acts on column vectors.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }
  static QMatrix diagonal(std::span<const Rational> entries);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QVector row(std::size_t i) const;
  QVector col(std::size_t j) const;

  bool is_zero() const;
  QMatrix transpose() const;
  QMatrix pow(unsigned exp) const;
  /// Sub-matrix picking the given rows and columns, in order.
  QMatrix select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;

  QMatrix operator*(const QMatrix& rhs) const;
  QMatrix operator+(const QMatrix& rhs) const;
  QMatrix operator-(const QMatrix& rhs) const;
  QMatrix operator*(const Rational& s) const;
  QVector operator*(const QVector& v) const;

  bool operator==(const QMatrix& rhs) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  QMatrix reduced;                 ///< reduced row echelon form, zero rows kept
  std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
  std::size_t rank() const noexcept { return pivots.size(); }
};

RowEchelon rref(QMatrix m);
std::size_t rank(const QMatrix& m);
Rational determinant(QMatrix m);
Rational trace(const QMatrix& m);
/// Inverse of a square matrix; throws std::domain_error when singular.
QMatrix inverse(const QMatrix& m);

/// Block-diagonal sum.
QMatrix direct_sum(const QMatrix& a, const QMatrix& b);

} // namespace phinkit::linalg
