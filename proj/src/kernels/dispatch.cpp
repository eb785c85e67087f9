#include <cstdlib>
#include <cstring>
#include <iostream>

#include "kernels_impl.hpp"

namespace qframe::kernels {
namespace {

bool cpu_has_avx2_fma() noexcept {
#if defined(QFRAME_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& select() noexcept {
  const KernelTable* avx2 = avx2_table();
  if (const char* env = std::getenv("QFRAME_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return scalar_table();
    if (std::strcmp(env, "avx2") == 0) {
      if (avx2 != nullptr) return *avx2;
      std::cerr << "qframe: QFRAME_KERNELS=avx2 requested but unavailable; using scalar kernels\n";
      return scalar_table();
    }
    std::cerr << "qframe: unknown QFRAME_KERNELS value '" << env << "'; ignoring\n";
  }
  return avx2 != nullptr ? *avx2 : scalar_table();
}

}  // namespace

const KernelTable* avx2_table() noexcept {
#if defined(QFRAME_BUILD_AVX2)
  static const bool supported = cpu_has_avx2_fma();
  return supported ? &avx2_table_unchecked() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

}  // namespace qframe::kernels
