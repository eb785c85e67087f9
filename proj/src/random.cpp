#include "qframe/random.hpp"

#include <string>

#include "qframe/error.hpp"

namespace qframe {
namespace {

std::uint64_t splitmix64(std::uint64_t& x) noexcept {
  std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) noexcept {
  for (auto& word : s_) word = splitmix64(seed);
}

std::uint64_t Rng::next_u64() noexcept {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::unit() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform() noexcept { return 2.0 * unit() - 1.0; }

Quaternion Rng::quaternion() noexcept {
  const double a0 = uniform();
  const double a1 = uniform();
  const double a2 = uniform();
  const double a3 = uniform();
  return Quaternion::unchecked(a0, a1, a2, a3);
}

QMatrix Rng::matrix(std::size_t rows, std::size_t cols) {
  QMatrix m(rows, cols);
  for (auto& q : m.entries()) q = quaternion();
  return m;
}

void validate(const RandomSpec& spec) {
  if (spec.dim == 0 || spec.component_count == 0 || spec.subspace_dim == 0 || spec.operator_rows == 0) {
    throw Error(ErrorCode::InvalidArgument, "random spec sizes must be positive");
  }
  if (spec.subspace_dim > spec.dim) {
    throw Error(ErrorCode::InvalidArgument, "subspace_dim " + std::to_string(spec.subspace_dim) +
                                                " exceeds dim " + std::to_string(spec.dim));
  }
}

Subspace random_subspace(Rng& rng, std::size_t n, std::size_t d) {
  return Subspace::span_of(rng.matrix(n, d));
}

GFusionFrame random_frame(const RandomSpec& spec) {
  validate(spec);
  Rng rng(spec.seed);
  std::vector<FrameComponent> comps;
  comps.reserve(spec.component_count);
  for (std::size_t j = 0; j < spec.component_count; ++j) {
    const double weight = 1.0 + 0.5 * rng.uniform();
    Subspace w = random_subspace(rng, spec.dim, spec.subspace_dim);
    QMatrix op = rng.matrix(spec.operator_rows, spec.dim);
    comps.push_back({std::move(w), std::move(op), weight});
  }
  return GFusionFrame(spec.dim, std::move(comps));
}

}  // namespace qframe
