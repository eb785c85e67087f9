#pragma once

// Data-parallel inner loops used by the dense quaternion and complex
// routines. Every kernel has a scalar reference implementation; SIMD
// variants are selected at runtime and must agree with the reference to
// rounding (they may fuse multiply-adds).

#include <complex>
#include <cstddef>
#include <string_view>

#include "qframe/quaternion.hpp"

namespace qframe::kernels {

using cplx = std::complex<double>;

/// C[rows x cols] += A[rows x inner] * B[inner x cols], row-major, Hamilton product order a*b.
using QGemmFn = void (*)(std::size_t rows, std::size_t inner, std::size_t cols, const Quaternion* a,
                         const Quaternion* b, Quaternion* c);

/// C[rows x cols] += A[rows x inner] * B[inner x cols], row-major complex.
using CGemmFn = void (*)(std::size_t rows, std::size_t inner, std::size_t cols, const cplx* a, const cplx* b,
                         cplx* c);

/// In place: x <- m00 x + m01 y, y <- m10 x + m11 y over n contiguous entries.
using CRot2Fn = void (*)(std::size_t n, cplx* x, cplx* y, cplx m00, cplx m01, cplx m10, cplx m11);

struct KernelTable {
  std::string_view name;
  QGemmFn qgemm;
  CGemmFn cgemm;
  CRot2Fn crot2;
};

const KernelTable& scalar_table() noexcept;

/// The AVX2/FMA table, or nullptr when it was not built or the CPU lacks AVX2+FMA.
const KernelTable* avx2_table() noexcept;

/// Table used by the library. Chosen once: QFRAME_KERNELS=scalar|avx2 overrides,
/// otherwise the widest variant the CPU supports.
const KernelTable& active() noexcept;

}  // namespace qframe::kernels
