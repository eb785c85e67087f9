#include "qframe/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qframe/error.hpp"
#include "qframe/jacobi.hpp"

namespace qframe {
namespace {

using cplx = std::complex<double>;

void require_vector_pair(const QMatrix& u, const QMatrix& v) {
  if (!u.is_vector() || !v.is_vector() || u.rows() != v.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "inner product needs two vectors of equal length");
  }
}

void require_hermitian(const QMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotHermitian, "matrix is not square");
  if (!is_hermitian(m)) throw Error(ErrorCode::NotHermitian, "||m - m*||_F exceeds 1e-8 (1 + ||m||_F)");
}

ComplexEigen embedded_eigen(const QMatrix& m) {
  require_hermitian(m);
  return jacobi_eigen(embed(m));
}

void check_pairing(const std::vector<double>& values) {
  for (std::size_t t = 0; t + 1 < values.size(); t += 2) {
    const double lo = values[t];
    const double hi = values[t + 1];
    if (!(std::abs(hi - lo) < 1e-8 * (1.0 + std::abs(lo)))) {
      throw Error(ErrorCode::PairingFailure, "embedded eigenvalues " + std::to_string(lo) + " and " +
                                                 std::to_string(hi) + " do not pair");
    }
  }
}

// Quaternionic vector v with embed(m) (y; z) = lambda (y; z)  <=>  m v = v lambda,
// where v = y - conj(z) j.
QMatrix quaternion_vector_from_embedded(const ComplexMatrix& vectors, std::size_t column) {
  const std::size_t n = vectors.rows() / 2;
  QMatrix v(n, 1);
  for (std::size_t r = 0; r < n; ++r) {
    v[r] = from_complex_pair(vectors(r, column), -std::conj(vectors(n + r, column)));
  }
  return v;
}

QMatrix hermitian_part(const QMatrix& m) { return 0.5 * (m + adjoint(m)); }

}  // namespace

Quaternion inner_product(const QMatrix& u, const QMatrix& v) {
  require_vector_pair(u, v);
  Quaternion acc;
  for (std::size_t t = 0; t < u.rows(); ++t) acc += conjugate(u[t]) * v[t];
  return acc;
}

double norm(const QMatrix& v) {
  if (!v.is_vector()) throw Error(ErrorCode::DimensionMismatch, "norm of a non-vector");
  return frobenius_norm(v);
}

ComplexMatrix embed(const QMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  ComplexMatrix x(2 * r, 2 * c);
  for (std::size_t p = 0; p < r; ++p) {
    for (std::size_t q = 0; q < c; ++q) {
      const auto [alpha, beta] = to_complex_pair(m(p, q));
      x(p, q) = alpha;
      x(p, c + q) = beta;
      x(r + p, q) = -std::conj(beta);
      x(r + p, c + q) = std::conj(alpha);
    }
  }
  return x;
}

double embedding_symmetry_defect(const ComplexMatrix& x) {
  if (x.rows() % 2 != 0 || x.cols() % 2 != 0) return std::numeric_limits<double>::infinity();
  const std::size_t r = x.rows() / 2;
  const std::size_t c = x.cols() / 2;
  double defect = 0.0;
  for (std::size_t p = 0; p < r; ++p) {
    for (std::size_t q = 0; q < c; ++q) {
      defect = std::max(defect, std::abs(x(r + p, q) + std::conj(x(p, c + q))));
      defect = std::max(defect, std::abs(x(r + p, c + q) - std::conj(x(p, q))));
    }
  }
  return defect;
}

QMatrix unembed(const ComplexMatrix& x) {
  if (x.rows() % 2 != 0 || x.cols() % 2 != 0) {
    throw Error(ErrorCode::SymmetryViolation, "embedded matrix must have even dimensions");
  }
  double scale = 1.0;
  for (const auto& z : x.entries()) scale = std::max(scale, std::abs(z));
  if (embedding_symmetry_defect(x) > 1e-8 * scale) {
    throw Error(ErrorCode::SymmetryViolation, "matrix is not in the image of the embedding");
  }
  const std::size_t r = x.rows() / 2;
  const std::size_t c = x.cols() / 2;
  QMatrix m(r, c);
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = 0; q < c; ++q) m(p, q) = from_complex_pair(x(p, q), x(p, c + q));
  return m;
}

bool is_hermitian(const QMatrix& m) {
  if (!m.is_square()) return false;
  return frobenius_norm(m - adjoint(m)) < 1e-8 * (1.0 + frobenius_norm(m));
}

std::vector<double> hermitian_eigenvalues(const QMatrix& m) {
  const ComplexEigen eig = embedded_eigen(m);
  check_pairing(eig.values);
  std::vector<double> out;
  out.reserve(m.rows());
  for (std::size_t t = 0; t < eig.values.size(); t += 2) out.push_back(eig.values[t]);
  return out;
}

Eigenpair hermitian_extreme_eigenpair(const QMatrix& m, Extreme which) {
  const ComplexEigen eig = embedded_eigen(m);
  check_pairing(eig.values);
  const std::size_t column = which == Extreme::Lowest ? 0 : eig.values.size() - 1;
  QMatrix v = quaternion_vector_from_embedded(eig.vectors, column);
  v *= 1.0 / norm(v);
  return {eig.values[column], std::move(v)};
}

QMatrix hermitian_function(const QMatrix& m, SpectralFunction f) {
  const ComplexEigen eig = embedded_eigen(m);
  check_pairing(eig.values);
  const double lo = eig.values.front();
  const double hi = eig.values.back();
  if (f == SpectralFunction::Sqrt) {
    if (lo < -kRankTolerance) {
      throw Error(ErrorCode::SingularOperator, "square root of an operator with eigenvalue " + std::to_string(lo));
    }
  } else if (!(lo > kRankTolerance * std::max(1.0, hi))) {
    throw Error(ErrorCode::SingularOperator,
                "operator is numerically singular (lambda_min = " + std::to_string(lo) + ")");
  }

  const std::size_t n2 = eig.values.size();
  ComplexMatrix scaled = eig.vectors;
  for (std::size_t k = 0; k < n2; ++k) {
    const double lambda = eig.values[k];
    double g = 0.0;
    switch (f) {
      case SpectralFunction::Inverse: g = 1.0 / lambda; break;
      case SpectralFunction::InverseSqrt: g = 1.0 / std::sqrt(lambda); break;
      case SpectralFunction::Sqrt: g = std::sqrt(std::max(lambda, 0.0)); break;
    }
    for (std::size_t r = 0; r < n2; ++r) scaled(r, k) *= g;
  }
  return hermitian_part(unembed(scaled * adjoint(eig.vectors)));
}

double operator_norm(const QMatrix& m) {
  const QMatrix gram = m.rows() < m.cols() ? m * adjoint(m) : adjoint(m) * m;
  const double top = hermitian_eigenvalues(hermitian_part(gram)).back();
  return std::sqrt(std::max(top, 0.0));
}

double min_singular_value(const QMatrix& m) {
  if (m.rows() < m.cols()) return 0.0;
  const double bottom = hermitian_eigenvalues(hermitian_part(adjoint(m) * m)).front();
  return std::sqrt(std::max(bottom, 0.0));
}

QMatrix gram_schmidt(const QMatrix& vectors) {
  const std::size_t n = vectors.rows();
  std::vector<QMatrix> accepted;
  for (std::size_t c = 0; c < vectors.cols(); ++c) {
    QMatrix v = vectors.col(c);
    const double initial = norm(v);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : accepted) v -= u * inner_product(u, v);
    }
    const double residual = norm(v);
    if (residual < kRankTolerance * (initial + 1.0)) continue;
    v *= 1.0 / residual;
    accepted.push_back(std::move(v));
  }
  if (accepted.empty()) throw Error(ErrorCode::EmptyInput, "Gram-Schmidt input has rank zero");
  QMatrix out(n, accepted.size());
  for (std::size_t c = 0; c < accepted.size(); ++c) out.set_col(c, accepted[c]);
  return out;
}

Subspace Subspace::from_orthonormal(QMatrix basis) {
  const QMatrix gram = adjoint(basis) * basis;
  if (max_abs_diff(gram, QMatrix::identity(basis.cols())) > 1e-10) {
    throw Error(ErrorCode::NotOrthonormal, "subspace basis columns are not right-orthonormal");
  }
  return Subspace(std::move(basis));
}

Subspace Subspace::span_of(const QMatrix& vectors) { return Subspace(gram_schmidt(vectors)); }

Subspace Subspace::full(std::size_t n) { return Subspace(QMatrix::identity(n)); }

QMatrix projection(const Subspace& w) { return w.basis() * adjoint(w.basis()); }

Subspace subspace_image(const QMatrix& t, const Subspace& w) {
  if (t.cols() != w.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "operator columns do not match the subspace's ambient dimension");
  }
  QMatrix image = t * w.basis();
  // Spans are scale invariant; normalize so rank decisions are relative to t.
  double largest = 0.0;
  for (std::size_t c = 0; c < image.cols(); ++c) largest = std::max(largest, norm(image.col(c)));
  if (largest == 0.0) throw Error(ErrorCode::ZeroImage, "operator annihilates the subspace");
  image *= 1.0 / largest;
  try {
    return Subspace::span_of(image);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::EmptyInput) throw Error(ErrorCode::ZeroImage, "operator annihilates the subspace");
    throw;
  }
}

}  // namespace qframe
