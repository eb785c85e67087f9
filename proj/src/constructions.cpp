#include "qframe/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qframe/error.hpp"

namespace qframe {
namespace {

constexpr double kContainmentSlack = 1e-8;

QMatrix require_frame_operator(const GFusionFrame& frame, double tol) {
  FrameReport report = classify(frame, tol);
  if (!report.is_frame) {
    throw Error(ErrorCode::NotAFrame, "lower bound " + std::to_string(report.bounds.lower) +
                                          " is not above tolerance; frame operator is singular");
  }
  return std::move(report.frame_operator);
}

// {(G W_j, L_j P_{W_j} H, v_j)} for the subspace map G and operator factor H.
GFusionFrame map_components(const GFusionFrame& frame, const QMatrix& subspace_map, const QMatrix& factor) {
  std::vector<FrameComponent> comps;
  comps.reserve(frame.size());
  for (const auto& c : frame.components()) {
    comps.push_back({subspace_image(subspace_map, c.subspace), c.op * projection(c.subspace) * factor, c.weight});
  }
  return GFusionFrame(frame.dim(), std::move(comps));
}

void require_invertible(const GFusionFrame& frame, const QMatrix& u, double tol) {
  if (u.rows() != frame.dim() || u.cols() != frame.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "operator must be " + std::to_string(frame.dim()) + "x" +
                                                  std::to_string(frame.dim()));
  }
  const QMatrix gram = adjoint(u) * u;
  const double smallest = hermitian_eigenvalues(0.5 * (gram + adjoint(gram))).front();
  if (!(smallest > tol)) {
    throw Error(ErrorCode::SingularOperator, "lambda_min(U* U) = " + std::to_string(smallest) + " is not above " +
                                                 std::to_string(tol));
  }
}

}  // namespace

GFusionFrame canonical_dual(const GFusionFrame& frame, double tol) {
  const QMatrix s_inv = hermitian_function(require_frame_operator(frame, tol), SpectralFunction::Inverse);
  return map_components(frame, s_inv, s_inv);
}

GFusionFrame parsevalize(const GFusionFrame& frame, double tol) {
  const QMatrix s_inv_half = hermitian_function(require_frame_operator(frame, tol), SpectralFunction::InverseSqrt);
  return map_components(frame, s_inv_half, s_inv_half);
}

GFusionFrame transform(const GFusionFrame& frame, const QMatrix& u, double tol) {
  require_invertible(frame, u, tol);
  return map_components(frame, u, adjoint(u));
}

bool SandwichSample::holds(double slack) const noexcept {
  const double scale = std::max({std::abs(lower), std::abs(middle), std::abs(upper)});
  return lower <= middle + slack * scale && middle <= upper + slack * scale;
}

SandwichSample transform_sandwich(const GFusionFrame& frame, const QMatrix& u, const QMatrix& f, double tol) {
  const GFusionFrame image = transform(frame, u, tol);
  const FrameBounds b = frame_bounds(frame);
  const double un = operator_norm(u);
  const double uuf = norm(u * (adjoint(u) * f));
  const double fn = norm(f);
  return {b.lower / (un * un) * uuf * uuf, frame_energy(image, f), b.upper * un * un * fn * fn};
}

FrameBounds pullback_bounds_check(const GFusionFrame& frame, const QMatrix& u, double tol) {
  const GFusionFrame image = transform(frame, u, tol);
  const FrameReport image_report = classify(image, tol);
  if (!image_report.is_frame) {
    throw Error(ErrorCode::HypothesisViolation, "the transformed family is not a frame");
  }
  const double un = operator_norm(u);
  const double inv_norm = 1.0 / min_singular_value(u);
  const FrameBounds guaranteed{image_report.bounds.lower / (un * un),
                               image_report.bounds.upper * inv_norm * inv_norm};

  const FrameBounds own = frame_bounds(frame);
  const bool lower_ok = guaranteed.lower <= own.lower + kContainmentSlack * std::max(own.lower, guaranteed.lower);
  const bool upper_ok = own.upper <= guaranteed.upper + kContainmentSlack * std::max(own.upper, guaranteed.upper);
  if (!lower_ok || !upper_ok) {
    throw Error(ErrorCode::NumericalFailure, "guaranteed interval does not contain the optimal bounds");
  }
  return guaranteed;
}

}  // namespace qframe
