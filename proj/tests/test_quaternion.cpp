#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>

#include "qframe/error.hpp"
#include "qframe/random.hpp"

using namespace qframe;
using cplx = std::complex<double>;

namespace {

// 2x2 complex matrix of q = alpha + beta j, built independently of the library.
struct C2 {
  cplx m[2][2];
};

C2 rep(const Quaternion& q) {
  const cplx alpha(q.a0(), q.a1());
  const cplx beta(q.a2(), q.a3());
  return {{{alpha, beta}, {-std::conj(beta), std::conj(alpha)}}};
}

C2 mul(const C2& x, const C2& y) {
  C2 out{};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.m[r][c] = x.m[r][0] * y.m[0][c] + x.m[r][1] * y.m[1][c];
  return out;
}

bool close(const C2& x, const C2& y, double tol) {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      if (std::abs(x.m[r][c] - y.m[r][c]) > tol) return false;
  return true;
}

}  // namespace

TEST_SUITE("quaternion") {

TEST_CASE("unit multiplication table") {
  const auto one = Quaternion::one(), i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == -k);
  CHECK(k * j == -i);
  CHECK(i * k == -j);
  CHECK(i * i == -one);
  CHECK(j * j == -one);
  CHECK(k * k == -one);
  CHECK(i * j * k == -one);
}

TEST_CASE("product of (1 + i) and (1 + j)") {
  const Quaternion p(1, 1, 0, 0), q(1, 0, 1, 0);
  CHECK(p * q == Quaternion(1, 1, 1, 1));
  CHECK(q * p == Quaternion(1, 1, 1, -1));
  CHECK(close(rep(p * q), mul(rep(p), rep(q)), 1e-15));
}

TEST_CASE("complex pair split") {
  const Quaternion q(1, 2, 3, 4);
  const auto [alpha, beta] = to_complex_pair(q);
  CHECK(alpha == cplx(1, 2));
  CHECK(beta == cplx(3, 4));
  CHECK(from_complex_pair(alpha, beta) == q);
  // q = alpha + beta j with beta j = (3 + 4i) j = 3j + 4k.
  CHECK(Quaternion(alpha.real(), alpha.imag()) + Quaternion(beta.real(), beta.imag()) * Quaternion::j() == q);
}

TEST_CASE("conjugate, modulus and inverse") {
  const Quaternion q(1, -2, 3, -4);
  CHECK(conjugate(q) == Quaternion(1, 2, -3, 4));
  CHECK(norm_squared(q) == doctest::Approx(30.0));
  CHECK(modulus(q) == doctest::Approx(std::sqrt(30.0)));
  CHECK(approx_equal(q * inverse(q), Quaternion::one(), 1e-15));
  CHECK(approx_equal(inverse(q) * q, Quaternion::one(), 1e-15));
  CHECK(inverse(Quaternion::j()) == -Quaternion::j());
}

TEST_CASE("modulus does not overflow or underflow") {
  CHECK(modulus(Quaternion(1e200, 1e200, 0, 0)) == doctest::Approx(std::sqrt(2.0) * 1e200));
  CHECK(modulus(Quaternion(3e-200, 0, 4e-200, 0)) == doctest::Approx(5e-200));
  CHECK(modulus(Quaternion()) == 0.0);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(Quaternion(std::numeric_limits<double>::quiet_NaN()), Error);
  CHECK_THROWS_AS(Quaternion(0, std::numeric_limits<double>::infinity()), Error);
  try {
    (void)inverse(Quaternion());
    FAIL("expected zero-divisor");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDivisor);
  }
  CHECK_THROWS_AS((void)inverse(Quaternion(1e-301)), Error);
}

TEST_CASE("algebraic properties on seeded triples") {
  Rng rng(101);
  for (int t = 0; t < 1000; ++t) {
    const Quaternion p = rng.quaternion(), q = rng.quaternion(), r = rng.quaternion();
    CHECK(approx_equal((p * q) * r, p * (q * r), 1e-14));
    CHECK(modulus(p * q) == doctest::Approx(modulus(p) * modulus(q)).epsilon(1e-13));
    CHECK(approx_equal(conjugate(p * q), conjugate(q) * conjugate(p), 1e-15));
    CHECK(approx_equal(p * (q + r), p * q + p * r, 1e-14));
    CHECK(close(rep(p * q), mul(rep(p), rep(q)), 1e-14));
  }
}

}  // TEST_SUITE
