#include "qframe/quaternion.hpp"

#include <ostream>

#include "qframe/error.hpp"

namespace qframe {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonFinite: return "non-finite value";
    case ErrorCode::ZeroDivisor: return "zero divisor";
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::EmptyInput: return "empty input";
    case ErrorCode::ZeroVector: return "zero vector";
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::NotHermitian: return "not Hermitian";
    case ErrorCode::PairingFailure: return "eigenvalue pairing failure";
    case ErrorCode::SingularOperator: return "singular operator";
    case ErrorCode::SymmetryViolation: return "embedding symmetry violation";
    case ErrorCode::NotOrthonormal: return "basis not orthonormal";
    case ErrorCode::ZeroImage: return "zero image";
    case ErrorCode::InvalidWeight: return "invalid weight";
    case ErrorCode::NotAFrame: return "not a frame";
    case ErrorCode::HypothesisViolation: return "hypothesis violation";
    case ErrorCode::NumericalFailure: return "numerical failure";
    case ErrorCode::Parse: return "parse error";
  }
  return "unknown error";
}

Quaternion::Quaternion(double a0, double a1, double a2, double a3) : c_{a0, a1, a2, a3} {
  for (double x : c_) {
    if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "quaternion component is NaN or infinite");
  }
}

Quaternion inverse(const Quaternion& q) {
  const double m = modulus(q);
  if (m < kZeroDivisorThreshold) throw Error(ErrorCode::ZeroDivisor, "inverse of a zero quaternion");
  // Divide twice by |q| instead of once by |q|^2 so tiny moduli do not underflow.
  return conjugate(q) * (1.0 / m) * (1.0 / m);
}

Quaternion from_complex_pair(std::complex<double> alpha, std::complex<double> beta) {
  return Quaternion(alpha.real(), alpha.imag(), beta.real(), beta.imag());
}

bool approx_equal(const Quaternion& p, const Quaternion& q, double tol) noexcept {
  for (std::size_t t = 0; t < 4; ++t) {
    if (!(std::abs(p[t] - q[t]) <= tol)) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.a0() << ' ' << std::showpos << q.a1() << "i " << q.a2() << "j " << q.a3() << 'k'
            << std::noshowpos << ')';
}

}  // namespace qframe
