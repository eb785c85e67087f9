#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <iosfwd>
#include <utility>

namespace qframe {

/// Element a0 + a1 i + a2 j + a3 k of the real quaternion algebra.
///
/// The public constructor rejects NaN/Inf components. Arithmetic on finite
/// values goes through the unchecked path and is not re-validated.
class Quaternion {
 public:
  constexpr Quaternion() noexcept = default;
  Quaternion(double a0, double a1 = 0.0, double a2 = 0.0, double a3 = 0.0);

  static constexpr Quaternion unchecked(double a0, double a1, double a2, double a3) noexcept {
    Quaternion q;
    q.c_ = {a0, a1, a2, a3};
    return q;
  }

  static constexpr Quaternion one() noexcept { return unchecked(1, 0, 0, 0); }
  static constexpr Quaternion i() noexcept { return unchecked(0, 1, 0, 0); }
  static constexpr Quaternion j() noexcept { return unchecked(0, 0, 1, 0); }
  static constexpr Quaternion k() noexcept { return unchecked(0, 0, 0, 1); }

  constexpr double a0() const noexcept { return c_[0]; }
  constexpr double a1() const noexcept { return c_[1]; }
  constexpr double a2() const noexcept { return c_[2]; }
  constexpr double a3() const noexcept { return c_[3]; }
  constexpr double operator[](std::size_t idx) const noexcept { return c_[idx]; }
  constexpr const std::array<double, 4>& components() const noexcept { return c_; }

  constexpr bool is_real() const noexcept { return c_[1] == 0.0 && c_[2] == 0.0 && c_[3] == 0.0; }

  constexpr Quaternion& operator+=(const Quaternion& o) noexcept {
    for (int t = 0; t < 4; ++t) c_[t] += o.c_[t];
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) noexcept {
    for (int t = 0; t < 4; ++t) c_[t] -= o.c_[t];
    return *this;
  }
  constexpr Quaternion& operator*=(double s) noexcept {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) noexcept = default;

 private:
  std::array<double, 4> c_{0.0, 0.0, 0.0, 0.0};
};

static_assert(sizeof(Quaternion) == 4 * sizeof(double), "kernels read quaternions as packed double[4]");

constexpr Quaternion operator+(Quaternion p, const Quaternion& q) noexcept { return p += q; }
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) noexcept { return p -= q; }
constexpr Quaternion operator-(const Quaternion& q) noexcept {
  return Quaternion::unchecked(-q.a0(), -q.a1(), -q.a2(), -q.a3());
}
constexpr Quaternion operator*(Quaternion q, double s) noexcept { return q *= s; }
constexpr Quaternion operator*(double s, Quaternion q) noexcept { return q *= s; }

/// Hamilton product; i j = k, j k = i, k i = j, i^2 = j^2 = k^2 = -1.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) noexcept {
  return Quaternion::unchecked(
      p.a0() * q.a0() - p.a1() * q.a1() - p.a2() * q.a2() - p.a3() * q.a3(),
      p.a0() * q.a1() + p.a1() * q.a0() + p.a2() * q.a3() - p.a3() * q.a2(),
      p.a0() * q.a2() - p.a1() * q.a3() + p.a2() * q.a0() + p.a3() * q.a1(),
      p.a0() * q.a3() + p.a1() * q.a2() - p.a2() * q.a1() + p.a3() * q.a0());
}

inline Quaternion multiply(const Quaternion& p, const Quaternion& q) noexcept { return p * q; }

constexpr Quaternion conjugate(const Quaternion& q) noexcept {
  return Quaternion::unchecked(q.a0(), -q.a1(), -q.a2(), -q.a3());
}

constexpr double norm_squared(const Quaternion& q) noexcept {
  return q.a0() * q.a0() + q.a1() * q.a1() + q.a2() * q.a2() + q.a3() * q.a3();
}

inline double modulus(const Quaternion& q) noexcept {
  // hypot-style scaling keeps |q| finite for components near DBL_MAX.
  const double m = std::max({std::abs(q.a0()), std::abs(q.a1()), std::abs(q.a2()), std::abs(q.a3())});
  if (m == 0.0) return 0.0;
  const double b0 = q.a0() / m, b1 = q.a1() / m, b2 = q.a2() / m, b3 = q.a3() / m;
  return m * std::sqrt(b0 * b0 + b1 * b1 + b2 * b2 + b3 * b3);
}

/// Moduli below this are treated as zero by inverse().
inline constexpr double kZeroDivisorThreshold = 1e-300;

/// conj(q) / |q|^2; throws ErrorCode::ZeroDivisor when |q| < 1e-300.
Quaternion inverse(const Quaternion& q);

/// q = alpha + beta j with alpha = a0 + a1 i, beta = a2 + a3 i.
constexpr std::pair<std::complex<double>, std::complex<double>> to_complex_pair(const Quaternion& q) noexcept {
  return {{q.a0(), q.a1()}, {q.a2(), q.a3()}};
}

Quaternion from_complex_pair(std::complex<double> alpha, std::complex<double> beta);

/// Componentwise absolute comparison.
bool approx_equal(const Quaternion& p, const Quaternion& q, double tol) noexcept;

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qframe
