#include "qframe/qmatrix.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "qframe/error.hpp"
#include "qframe/kernels/kernels.hpp"

namespace qframe {
namespace {

void require_positive(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
}

void require_same_shape(std::size_t r0, std::size_t c0, std::size_t r1, std::size_t c1, const char* op) {
  if (r0 != r1 || c0 != c1) {
    throw Error(ErrorCode::DimensionMismatch, std::string(op) + ": " + std::to_string(r0) + "x" +
                                                  std::to_string(c0) + " vs " + std::to_string(r1) + "x" +
                                                  std::to_string(c1));
  }
}

bool finite(const Quaternion& q) noexcept {
  return std::isfinite(q.a0()) && std::isfinite(q.a1()) && std::isfinite(q.a2()) && std::isfinite(q.a3());
}

}  // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  require_positive(rows, cols);
  entries_.assign(rows * cols, Quaternion{});
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require_positive(rows, cols);
  if (entries_.size() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch, "entry count " + std::to_string(entries_.size()) +
                                                  " does not match " + std::to_string(rows) + "x" +
                                                  std::to_string(cols));
  }
  for (const auto& q : entries_) {
    if (!finite(q)) throw Error(ErrorCode::NonFinite, "matrix entry is NaN or infinite");
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t t = 0; t < n; ++t) m(t, t) = Quaternion::one();
  return m;
}

QMatrix QMatrix::column(std::vector<Quaternion> entries) {
  const std::size_t n = entries.size();
  return QMatrix(n, 1, std::move(entries));
}

QMatrix QMatrix::unit(std::size_t n, std::size_t index) {
  if (index >= n) throw Error(ErrorCode::DimensionMismatch, "unit vector index out of range");
  QMatrix v(n, 1);
  v[index] = Quaternion::one();
  return v;
}

QMatrix QMatrix::col(std::size_t c) const {
  QMatrix v(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void QMatrix::set_col(std::size_t c, const QMatrix& v) {
  require_same_shape(v.rows(), v.cols(), rows_, 1, "set_col");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  require_same_shape(rows_, cols_, o.rows_, o.cols_, "add");
  for (std::size_t t = 0; t < entries_.size(); ++t) entries_[t] += o.entries_[t];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  require_same_shape(rows_, cols_, o.rows_, o.cols_, "subtract");
  for (std::size_t t = 0; t < entries_.size(); ++t) entries_[t] -= o.entries_[t];
  return *this;
}

QMatrix& QMatrix::operator*=(double s) noexcept {
  for (auto& q : entries_) q *= s;
  return *this;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator*(double s, QMatrix a) { return a *= s; }
QMatrix operator*(QMatrix a, double s) { return a *= s; }

QMatrix operator*(QMatrix m, const Quaternion& q) {
  for (auto& e : m.entries()) e = e * q;
  return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "matmul: " + std::to_string(a.rows()) + "x" +
                                                  std::to_string(a.cols()) + " times " +
                                                  std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  QMatrix c(a.rows(), b.cols());
  kernels::active().qgemm(a.rows(), a.cols(), b.cols(), a.entries().data(), b.entries().data(),
                          c.entries().data());
  return c;
}

QMatrix adjoint(const QMatrix& m) {
  QMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = conjugate(m(r, c));
  return t;
}

double frobenius_norm(const QMatrix& m) noexcept {
  double s = 0.0;
  for (const auto& q : m.entries()) s += norm_squared(q);
  return std::sqrt(s);
}

double max_abs_diff(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(), "compare");
  double d = 0.0;
  for (std::size_t t = 0; t < a.size(); ++t)
    for (std::size_t u = 0; u < 4; ++u) d = std::max(d, std::abs(a.entries()[t][u] - b.entries()[t][u]));
  return d;
}

bool approx_equal(const QMatrix& a, const QMatrix& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) <= tol;
}

QMatrix hstack(const std::vector<QMatrix>& blocks) {
  if (blocks.empty()) throw Error(ErrorCode::EmptyInput, "hstack of no blocks");
  const std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw Error(ErrorCode::DimensionMismatch, "hstack: row counts differ");
    cols += b.cols();
  }
  QMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, offset + c) = b(r, c);
    offset += b.cols();
  }
  return out;
}

QMatrix vstack(const std::vector<QMatrix>& blocks) {
  if (blocks.empty()) throw Error(ErrorCode::EmptyInput, "vstack of no blocks");
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorCode::DimensionMismatch, "vstack: column counts differ");
    rows += b.rows();
  }
  QMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) out(offset + r, c) = b(r, c);
    offset += b.rows();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const QMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << "]\n";
  }
  return os;
}

// ---------------------------------------------------------------------------

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  require_positive(rows, cols);
  entries_.assign(rows * cols, value_type{});
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<value_type> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require_positive(rows, cols);
  if (entries_.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "complex entry count mismatch");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t t = 0; t < n; ++t) m(t, t) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_shape(rows_, cols_, o.rows_, o.cols_, "add");
  for (std::size_t t = 0; t < entries_.size(); ++t) entries_[t] += o.entries_[t];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_shape(rows_, cols_, o.rows_, o.cols_, "subtract");
  for (std::size_t t = 0; t < entries_.size(); ++t) entries_[t] -= o.entries_[t];
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "complex matmul shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  kernels::active().cgemm(a.rows(), a.cols(), b.cols(), a.entries().data(), b.entries().data(),
                          c.entries().data());
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = std::conj(m(r, c));
  return t;
}

double frobenius_norm(const ComplexMatrix& m) noexcept {
  double s = 0.0;
  for (const auto& z : m.entries()) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace qframe
