#pragma once

// New g-fusion frames built from a given one: the canonical dual, the
// Parseval frame obtained through S^{-1/2}, and images under an invertible
// operator U.

#include "qframe/frames.hpp"

namespace qframe {

/// {(S^-1 W_j, L_j P_{W_j} S^-1, v_j)}; its frame operator is S^-1 and its
/// optimal bounds are (1/B, 1/A). Throws ErrorCode::NotAFrame.
GFusionFrame canonical_dual(const GFusionFrame& frame, double tol = kFrameTolerance);

/// {(S^-1/2 W_j, L_j P_{W_j} S^-1/2, v_j)}, whose frame operator is I.
/// Throws ErrorCode::NotAFrame.
GFusionFrame parsevalize(const GFusionFrame& frame, double tol = kFrameTolerance);

/// {(U W_j, L_j P_{W_j} U*, v_j)}. U must be square with lambda_min(U* U) > tol,
/// otherwise ErrorCode::SingularOperator.
GFusionFrame transform(const GFusionFrame& frame, const QMatrix& u, double tol = kFrameTolerance);

/// The three sides of
///   (A / ||U||^2) ||U U* f||^2 <= sum_j v_j^2 ||L_j P_{W_j} U* P_{U W_j} f||^2 <= B ||U||^2 ||f||^2
/// where (A, B) are the optimal bounds of `frame`.
struct SandwichSample {
  double lower;
  double middle;
  double upper;

  /// Both inequalities hold up to `slack` relative to the larger side.
  bool holds(double slack) const noexcept;
};

SandwichSample transform_sandwich(const GFusionFrame& frame, const QMatrix& u, const QMatrix& f,
                                  double tol = kFrameTolerance);

/// With Gamma = transform(frame, u) having optimal bounds (A, B), returns the
/// guaranteed bounds (A / ||U||^2, B ||U^-1||^2) for `frame` after checking
/// they contain its optimal bounds within 1e-8 relative slack.
/// Throws ErrorCode::HypothesisViolation when Gamma is not a frame and
/// ErrorCode::NumericalFailure if containment fails.
FrameBounds pullback_bounds_check(const GFusionFrame& frame, const QMatrix& u, double tol = kFrameTolerance);

}  // namespace qframe
