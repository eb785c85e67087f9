#include <doctest.h>

#include <Eigen/Dense>

#include "qframe/error.hpp"
#include "qframe/jacobi.hpp"
#include "qframe/random.hpp"

using namespace qframe;
using cplx = std::complex<double>;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::NumericalFailure;
}

// Embedding of M = A + B j as [[A, B], [-conj B, conj A]], written out directly.
Eigen::MatrixXcd oracle_embed(const QMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.rows());
  const auto k = static_cast<Eigen::Index>(m.cols());
  Eigen::MatrixXcd x(2 * n, 2 * k);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < k; ++c) {
      const Quaternion& q = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      const cplx a(q.a0(), q.a1()), b(q.a2(), q.a3());
      x(r, c) = a;
      x(r, c + k) = b;
      x(r + n, c) = -std::conj(b);
      x(r + n, c + k) = std::conj(a);
    }
  return x;
}

Eigen::MatrixXcd to_eigen(const ComplexMatrix& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  return m;
}

QMatrix random_hermitian(Rng& rng, std::size_t n) {
  const QMatrix a = rng.matrix(n, n);
  return 0.5 * (a + adjoint(a));
}

}  // namespace

TEST_SUITE("qlinalg") {

TEST_CASE("inner product of (1, i) and (j, k) is 2j") {
  const QMatrix u = QMatrix::column({Quaternion::one(), Quaternion::i()});
  const QMatrix v = QMatrix::column({Quaternion::j(), Quaternion::k()});
  CHECK(inner_product(u, v) == Quaternion(0, 0, 2, 0));
  CHECK(inner_product(v, u) == Quaternion(0, 0, -2, 0));
}

TEST_CASE("inner product is right-linear and conjugate-symmetric") {
  Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    const QMatrix u = rng.vector(4), v = rng.vector(4);
    const Quaternion q = rng.quaternion();
    CHECK(approx_equal(inner_product(u, v * q), inner_product(u, v) * q, 1e-13));
    CHECK(approx_equal(inner_product(u * q, v), conjugate(q) * inner_product(u, v), 1e-13));
    CHECK(approx_equal(inner_product(v, u), conjugate(inner_product(u, v)), 1e-15));
    CHECK(norm(v * q) == doctest::Approx(modulus(q) * norm(v)).epsilon(1e-13));
  }
}

TEST_CASE("Cauchy-Schwarz on random pairs") {
  Rng rng(22);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng.next_u64() % 6;
    const QMatrix u = rng.vector(n), v = rng.vector(n);
    CHECK(modulus(inner_product(u, v)) <= norm(u) * norm(v) * (1.0 + 1e-10));
  }
  // equality for parallel vectors
  const QMatrix u = rng.vector(3);
  const QMatrix v = u * Quaternion(0.3, -1, 2, 0.5);
  CHECK(modulus(inner_product(u, v)) == doctest::Approx(norm(u) * norm(v)).epsilon(1e-12));
}

TEST_CASE("embedding matches the block formula and is a *-homomorphism") {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    const QMatrix m = rng.matrix(5, 5), n = rng.matrix(5, 5);
    CHECK((to_eigen(embed(m)) - oracle_embed(m)).norm() == 0.0);
    CHECK((to_eigen(embed(m * n)) - to_eigen(embed(m)) * to_eigen(embed(n))).norm() < 1e-10);
    CHECK((to_eigen(embed(adjoint(m))) - to_eigen(embed(m)).adjoint()).norm() == 0.0);
    CHECK(unembed(embed(m)) == m);
  }
  ComplexMatrix bad(2, 2);
  bad(0, 0) = 1.0;
  CHECK(code_of([&] { (void)unembed(bad); }) == ErrorCode::SymmetryViolation);
  CHECK(code_of([] { (void)unembed(ComplexMatrix(3, 2)); }) == ErrorCode::SymmetryViolation);
}

TEST_CASE("eigenvalues of [[0, j], [-j, 0]] are -1 and 1") {
  const QMatrix m(2, 2, {Quaternion(), Quaternion::j(), -Quaternion::j(), Quaternion()});
  const auto eig = hermitian_eigenvalues(m);
  REQUIRE(eig.size() == 2);
  CHECK(eig[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(eig[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("quaternion eigenvalues against an independent solver") {
  Rng rng(24);
  for (std::size_t n : {1u, 3u, 6u, 12u}) {
    const QMatrix h = random_hermitian(rng, n);
    const auto eig = hermitian_eigenvalues(h);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> oracle(oracle_embed(h));
    for (std::size_t k = 0; k < n; ++k) {
      const auto idx = static_cast<Eigen::Index>(2 * k);
      CHECK(std::abs(eig[k] - oracle.eigenvalues()(idx)) < 1e-12);
      CHECK(std::abs(eig[k] - oracle.eigenvalues()(idx + 1)) < 1e-12);
    }
  }
  CHECK(code_of([&] { (void)hermitian_eigenvalues(rng.matrix(3, 3)); }) == ErrorCode::NotHermitian);
}

TEST_CASE("extreme eigenpairs satisfy m v = v lambda") {
  Rng rng(25);
  for (int t = 0; t < 10; ++t) {
    const QMatrix h = random_hermitian(rng, 5);
    const auto eig = hermitian_eigenvalues(h);
    for (auto which : {Extreme::Lowest, Extreme::Highest}) {
      const Eigenpair p = hermitian_extreme_eigenpair(h, which);
      CHECK(p.value == doctest::Approx(which == Extreme::Lowest ? eig.front() : eig.back()).epsilon(1e-12));
      CHECK(norm(p.vector) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(norm(h * p.vector - p.vector * Quaternion(p.value)) < 1e-12);
    }
  }
}

TEST_CASE("spectral functions") {
  Rng rng(26);
  for (int t = 0; t < 10; ++t) {
    const QMatrix a = rng.matrix(4, 4);
    const QMatrix spd = adjoint(a) * a + QMatrix::identity(4) * Quaternion(0.5);
    const QMatrix id = QMatrix::identity(4);
    const QMatrix inv = hermitian_function(spd, SpectralFunction::Inverse);
    const QMatrix inv_half = hermitian_function(spd, SpectralFunction::InverseSqrt);
    const QMatrix root = hermitian_function(spd, SpectralFunction::Sqrt);
    CHECK(frobenius_norm(inv * spd - id) < 1e-12);
    CHECK(frobenius_norm(inv_half * spd * inv_half - id) < 1e-12);
    CHECK(frobenius_norm(root * root - spd) < 1e-11);
    CHECK(is_hermitian(inv));
  }
  const QMatrix singular(2, 2, {Quaternion(1), Quaternion(), Quaternion(), Quaternion()});
  CHECK(code_of([&] { (void)hermitian_function(singular, SpectralFunction::Inverse); }) == ErrorCode::SingularOperator);
  CHECK(frobenius_norm(hermitian_function(singular, SpectralFunction::Sqrt) - singular) < 1e-14);
}

TEST_CASE("operator norm and smallest singular value") {
  const QMatrix d(2, 2, {Quaternion(3), Quaternion(), Quaternion(), Quaternion(0, 0, -0.5, 0)});
  CHECK(operator_norm(d) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(min_singular_value(d) == doctest::Approx(0.5).epsilon(1e-14));
  const QMatrix row(1, 2, {Quaternion(3), Quaternion(0, 4)});
  CHECK(operator_norm(row) == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("Gram-Schmidt and subspaces") {
  Rng rng(27);
  const QMatrix a = rng.matrix(5, 3);
  // third column is a right combination of the first two
  QMatrix dependent = hstack({a.col(0), a.col(1), a.col(0) * Quaternion(0, 1, 2, 0) + a.col(1) * Quaternion(-1, 0, 0, 3)});
  const QMatrix q = gram_schmidt(dependent);
  CHECK(q.cols() == 2);
  CHECK(frobenius_norm(adjoint(q) * q - QMatrix::identity(2)) < 1e-14);
  CHECK(code_of([] { (void)gram_schmidt(QMatrix(3, 2)); }) == ErrorCode::EmptyInput);

  const Subspace w = Subspace::span_of(a);
  CHECK(w.dim() == 3);
  const QMatrix p = projection(w);
  CHECK(frobenius_norm(p * p - p) < 1e-14);
  CHECK(frobenius_norm(p - adjoint(p)) < 1e-15);
  CHECK(frobenius_norm(p * a - a) < 1e-13);
  CHECK(code_of([&] { (void)Subspace::from_orthonormal(a); }) == ErrorCode::NotOrthonormal);

  const QMatrix t = rng.matrix(5, 5);
  const Subspace tw = subspace_image(t, w);
  CHECK(frobenius_norm(projection(tw) * (t * a) - t * a) < 1e-12);
  CHECK(code_of([&] { (void)subspace_image(QMatrix(5, 5), w); }) == ErrorCode::ZeroImage);
}

}  // TEST_SUITE
