#pragma once

// Right quaternionic linear algebra on H^n: inner products, adjoints,
// orthonormalization, projections, and spectral calculus. All spectral work
// goes through the complex adjoint embedding
//
//   M = A + B j   |->   [[ A,       B      ],
//                        [ -conj(B), conj(A) ]]
//
// which is a *-homomorphism into 2n x 2n complex matrices.

#include <vector>

#include "qframe/qmatrix.hpp"

namespace qframe {

/// Relative tolerance for rank and positivity decisions.
inline constexpr double kRankTolerance = 1e-10;

/// <u, v> = sum conj(u_i) v_i. Right-linear in v, conjugate-symmetric.
Quaternion inner_product(const QMatrix& u, const QMatrix& v);

/// sqrt(<v, v>); satisfies ||v q|| = |q| ||v||.
double norm(const QMatrix& v);

ComplexMatrix embed(const QMatrix& m);

/// Inverse of embed(). Reads the top blocks; throws ErrorCode::SymmetryViolation
/// when x is farther than 1e-8 (relative to its Frobenius norm, floor 1) from
/// the image of embed().
QMatrix unembed(const ComplexMatrix& x);

/// Distance of x from the block structure produced by embed(), max-abs.
double embedding_symmetry_defect(const ComplexMatrix& x);

/// True when ||m - m*||_F < 1e-8 (1 + ||m||_F).
bool is_hermitian(const QMatrix& m);

/// The n quaternionic eigenvalues of a Hermitian matrix, ascending. Computed
/// from the 2n embedded eigenvalues, which must pair up.
/// Throws ErrorCode::NotHermitian or ErrorCode::PairingFailure.
std::vector<double> hermitian_eigenvalues(const QMatrix& m);

struct Eigenpair {
  double value;
  QMatrix vector;  ///< unit norm, m * vector = vector * value
};

enum class Extreme { Lowest, Highest };

/// Eigenpair at the bottom or top of the spectrum of a Hermitian matrix.
Eigenpair hermitian_extreme_eigenpair(const QMatrix& m, Extreme which);

enum class SpectralFunction { Inverse, InverseSqrt, Sqrt };

/// f(m) by spectral calculus on embed(m). Result is Hermitian.
/// Inverse/InverseSqrt need lambda_min > 1e-10 max(1, lambda_max); Sqrt needs
/// lambda_min >= -1e-10 (small negatives are clamped to zero).
/// Throws ErrorCode::SingularOperator or ErrorCode::NotHermitian.
QMatrix hermitian_function(const QMatrix& m, SpectralFunction f);

/// Largest singular value, sqrt(lambda_max(m* m)).
double operator_norm(const QMatrix& m);

/// Smallest singular value of a matrix with at least as many rows as columns,
/// sqrt(lambda_min(m* m)).
double min_singular_value(const QMatrix& m);

/// Modified Gram-Schmidt with right coefficients (v <- v - u <u, v>), two
/// passes per column. Columns whose residual falls below
/// 1e-10 (initial norm + 1) are dropped. Throws ErrorCode::EmptyInput when
/// nothing survives.
QMatrix gram_schmidt(const QMatrix& vectors);

/// Closed subspace of H^n stored as right-orthonormal basis columns.
class Subspace {
 public:
  /// Validates basis* basis = I within 1e-10.
  static Subspace from_orthonormal(QMatrix basis);
  /// Right span of the columns of `vectors`, orthonormalized.
  static Subspace span_of(const QMatrix& vectors);
  static Subspace full(std::size_t n);

  std::size_t ambient_dim() const noexcept { return basis_.rows(); }
  std::size_t dim() const noexcept { return basis_.cols(); }
  const QMatrix& basis() const noexcept { return basis_; }

 private:
  explicit Subspace(QMatrix basis) : basis_(std::move(basis)) {}
  QMatrix basis_;
};

/// Orthogonal projection basis * basis*.
QMatrix projection(const Subspace& w);

/// The subspace t W. Throws ErrorCode::ZeroImage if t annihilates W.
Subspace subspace_image(const QMatrix& t, const Subspace& w);

}  // namespace qframe
