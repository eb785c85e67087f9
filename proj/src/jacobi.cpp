#include "qframe/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qframe/error.hpp"
#include "qframe/kernels/kernels.hpp"

namespace qframe {
namespace {

using cplx = std::complex<double>;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

}  // namespace

ComplexEigen jacobi_eigen(const ComplexMatrix& input, const JacobiOptions& options) {
  if (input.rows() != input.cols()) throw Error(ErrorCode::DimensionMismatch, "eigensolver needs a square matrix");
  const std::size_t n = input.rows();
  const auto& kern = kernels::active();

  ComplexMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = input(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const cplx v = 0.5 * (input(r, c) + std::conj(input(c, r)));
      a(r, c) = v;
      a(c, r) = std::conj(v);
    }
  }
  // Row k of w is the k-th eigenvector so rotations touch contiguous memory.
  ComplexMatrix w = ComplexMatrix::identity(n);

  const double total = frobenius_norm(a);
  const double negligible = 1e-18 * total;
  bool converged = total == 0.0;
  for (int sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
    if (off_diagonal_norm(a) <= options.relative_tolerance * total) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= negligible) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Phase-rotate the pair so the pivot is real, then a real symmetric rotation.
        const cplx phase = apq / r;
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx e = std::conj(phase);

        kern.crot2(n, a.row_data(p), a.row_data(q), c, -s * phase, s, c * phase);
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          a(k, p) = std::conj(a(p, k));
          a(k, q) = std::conj(a(q, k));
        }
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        kern.crot2(n, w.row_data(p), w.row_data(q), c, -s * e, s, c * e);
      }
    }
  }
  if (!converged && off_diagonal_norm(a) > options.relative_tolerance * total) {
    throw Error(ErrorCode::NumericalFailure, "Jacobi iteration did not converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  ComplexEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = w(order[k], r);
  }
  return out;
}

}  // namespace qframe
