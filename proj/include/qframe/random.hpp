#pragma once

#include <array>
#include <cstdint>

#include "qframe/frames.hpp"

namespace qframe {

/// xoshiro256** seeded through splitmix64. The stream is fixed so other
/// implementations can reproduce generated fixtures bit for bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept;

  std::uint64_t next_u64() noexcept;
  /// (next_u64() >> 11) * 2^-53, in [0, 1).
  double unit() noexcept;
  /// 2 unit() - 1, in [-1, 1).
  double uniform() noexcept;

  /// Components a0, a1, a2, a3 drawn in that order from uniform().
  Quaternion quaternion() noexcept;
  /// Row-major draw.
  QMatrix matrix(std::size_t rows, std::size_t cols);
  QMatrix vector(std::size_t n) { return matrix(n, 1); }

 private:
  std::array<std::uint64_t, 4> s_;
};

struct RandomSpec {
  std::size_t dim = 4;
  std::size_t component_count = 4;
  std::size_t subspace_dim = 2;
  std::size_t operator_rows = 2;
  std::uint64_t seed = 0;
};

/// Throws ErrorCode::InvalidArgument unless every size is positive and
/// subspace_dim <= dim.
void validate(const RandomSpec& spec);

/// Per component, in order: weight = 1 + 0.5 uniform(), then a dim x
/// subspace_dim candidate basis (row-major, orthonormalized), then the
/// operator_rows x dim operator (row-major).
GFusionFrame random_frame(const RandomSpec& spec);

/// Random subspace of the given dimension in H^n from the stream.
Subspace random_subspace(Rng& rng, std::size_t n, std::size_t d);

}  // namespace qframe
