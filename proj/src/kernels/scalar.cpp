#include "kernels_impl.hpp"

namespace qframe::kernels {
namespace {

void qgemm_scalar(std::size_t rows, std::size_t inner, std::size_t cols, const Quaternion* a, const Quaternion* b,
                  Quaternion* c) {
  for (std::size_t r = 0; r < rows; ++r) {
    Quaternion* crow = c + r * cols;
    for (std::size_t t = 0; t < inner; ++t) {
      const Quaternion av = a[r * inner + t];
      const Quaternion* brow = b + t * cols;
      for (std::size_t col = 0; col < cols; ++col) crow[col] += av * brow[col];
    }
  }
}

void cgemm_scalar(std::size_t rows, std::size_t inner, std::size_t cols, const cplx* a, const cplx* b, cplx* c) {
  for (std::size_t r = 0; r < rows; ++r) {
    cplx* crow = c + r * cols;
    for (std::size_t t = 0; t < inner; ++t) {
      const cplx av = a[r * inner + t];
      const cplx* brow = b + t * cols;
      for (std::size_t col = 0; col < cols; ++col) crow[col] += av * brow[col];
    }
  }
}

void crot2_scalar(std::size_t n, cplx* x, cplx* y, cplx m00, cplx m01, cplx m10, cplx m11) {
  for (std::size_t t = 0; t < n; ++t) {
    const cplx xv = x[t];
    const cplx yv = y[t];
    x[t] = m00 * xv + m01 * yv;
    y[t] = m10 * xv + m11 * yv;
  }
}

}  // namespace

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{"scalar", &qgemm_scalar, &cgemm_scalar, &crot2_scalar};
  return table;
}

}  // namespace qframe::kernels
