#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "qframe/quaternion.hpp"

namespace qframe {

/// Dense row-major matrix of quaternions. Vectors are n x 1 matrices and
/// scalars act on them from the right.
class QMatrix {
 public:
  /// Zero matrix; both dimensions must be positive.
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries);

  static QMatrix identity(std::size_t n);
  static QMatrix column(std::vector<Quaternion> entries);
  /// Unit coordinate vector e_index in H^n.
  static QMatrix unit(std::size_t n, std::size_t index);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool is_vector() const noexcept { return cols_ == 1; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Quaternion& operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
  Quaternion& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }
  /// Vector entry access (cols() == 1).
  const Quaternion& operator[](std::size_t r) const noexcept { return entries_[r]; }
  Quaternion& operator[](std::size_t r) noexcept { return entries_[r]; }

  std::span<const Quaternion> entries() const noexcept { return entries_; }
  std::span<Quaternion> entries() noexcept { return entries_; }

  QMatrix col(std::size_t c) const;
  void set_col(std::size_t c, const QMatrix& v);

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(double s) noexcept;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Quaternion> entries_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator*(double s, QMatrix a);
QMatrix operator*(QMatrix a, double s);
/// Right scalar action: every entry becomes m(r,c) * q.
QMatrix operator*(QMatrix m, const Quaternion& q);
/// Row-by-column product with entries multiplied in the order a(r,t) * b(t,c).
QMatrix operator*(const QMatrix& a, const QMatrix& b);

inline QMatrix matmul(const QMatrix& a, const QMatrix& b) { return a * b; }

/// Conjugate transpose.
QMatrix adjoint(const QMatrix& m);

double frobenius_norm(const QMatrix& m) noexcept;
/// Largest componentwise absolute difference; throws on shape mismatch.
double max_abs_diff(const QMatrix& a, const QMatrix& b);
bool approx_equal(const QMatrix& a, const QMatrix& b, double tol);

/// [a | b] side by side.
QMatrix hstack(const std::vector<QMatrix>& blocks);
/// Blocks stacked top to bottom.
QMatrix vstack(const std::vector<QMatrix>& blocks);

std::ostream& operator<<(std::ostream& os, const QMatrix& m);

/// Dense row-major complex matrix; the target of the complex adjoint embedding.
class ComplexMatrix {
 public:
  using value_type = std::complex<double>;

  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<value_type> entries);
  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const value_type& operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
  value_type& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }

  std::span<const value_type> entries() const noexcept { return entries_; }
  std::span<value_type> entries() noexcept { return entries_; }
  value_type* row_data(std::size_t r) noexcept { return entries_.data() + r * cols_; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m) noexcept;

}  // namespace qframe
