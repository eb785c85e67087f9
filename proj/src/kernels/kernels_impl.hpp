#pragma once

#include "qframe/kernels/kernels.hpp"

namespace qframe::kernels {

#if defined(QFRAME_BUILD_AVX2)
const KernelTable& avx2_table_unchecked() noexcept;
#endif

}  // namespace qframe::kernels
