#pragma once

// Self-check suite run by `qframe verify`.

#include <cstdint>
#include <string>
#include <vector>

#include "qframe/frames.hpp"

namespace qframe {

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  /// True when no check failed. Skipped checks do not count as failures.
  bool passed() const noexcept;
};

struct VerifyOptions {
  double tol = kFrameTolerance;
  std::uint64_t seed = 0x5eed;
};

/// Runs, in order: hermitian_positive, synthesis_factorization,
/// energy_identity (20 random f), bound_optimality, reconstruction,
/// dual_frame_operator and projection_identity (10 random (T, V)).
VerifyReport verify_frame(const GFusionFrame& frame, const VerifyOptions& options = {});

/// max ||P_V T* - P_V T* P_{TV}||_F over `trials` random square T and
/// random subspaces V of H^n.
double projection_identity_defect(std::size_t n, std::size_t trials, std::uint64_t seed);

}  // namespace qframe
