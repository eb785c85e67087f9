#pragma once

#include <string>

#include "qframe/constructions.hpp"
#include "qframe/random.hpp"

namespace qframe::test {

inline std::string fixture(const std::string& name) { return std::string(QFRAME_FIXTURE_DIR) + "/" + name; }

/// Random frame with sizes drawn from the stream: dim in [1, max_dim],
/// enough components that the result is almost surely a frame.
inline GFusionFrame random_test_frame(Rng& rng, std::size_t max_dim = 8) {
  RandomSpec spec;
  spec.dim = 1 + rng.next_u64() % max_dim;
  spec.subspace_dim = 1 + rng.next_u64() % spec.dim;
  spec.operator_rows = 1 + rng.next_u64() % 3;
  spec.component_count = spec.dim + 2 + rng.next_u64() % 4;
  spec.seed = rng.next_u64();
  return random_frame(spec);
}

/// Frame whose subspaces all avoid a random unit vector x, so S x = 0.
/// Needs n >= 2.
inline GFusionFrame singular_test_frame(Rng& rng, std::size_t n, std::size_t components) {
  QMatrix x = rng.vector(n);
  x = x * Quaternion(1.0 / norm(x));
  const QMatrix off_x = QMatrix::identity(n) - x * adjoint(x);
  std::vector<FrameComponent> comps;
  for (std::size_t j = 0; j < components; ++j) {
    const std::size_t d = 1 + rng.next_u64() % (n - 1);
    comps.push_back({Subspace::span_of(off_x * rng.matrix(n, d)), rng.matrix(2, n), 1.0 + 0.5 * rng.uniform()});
  }
  return GFusionFrame(n, std::move(comps));
}

/// n x n matrix with singular values comfortably away from zero.
inline QMatrix random_invertible(Rng& rng, std::size_t n) {
  return QMatrix::identity(n) * Quaternion(2.0) + 0.5 * rng.matrix(n, n);
}

}  // namespace qframe::test
