#include "qframe/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qframe/constructions.hpp"
#include "qframe/random.hpp"

namespace qframe {
namespace {

constexpr double kFactorizationTol = 1e-10;
constexpr double kEnergyTol = 1e-10;
constexpr double kImaginaryTol = 1e-12;
constexpr double kOptimalityGap = 1e-6;
constexpr double kReconstructionTol = 1e-8;
constexpr double kDualTol = 1e-8;
constexpr double kProjectionTol = 1e-10;
constexpr std::size_t kEnergySamples = 20;
constexpr std::size_t kReconstructionSamples = 5;
constexpr std::size_t kProjectionTrials = 10;

std::string fmt(const char* format, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

CheckResult pass_if(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

// sum_j v_j^2 P_j L_j* L_j P_j without the final Hermitian symmetrization.
QMatrix raw_frame_operator(const GFusionFrame& frame) {
  QMatrix s(frame.dim(), frame.dim());
  for (const auto& c : frame.components()) {
    const QMatrix k = c.op * projection(c.subspace);
    s += (c.weight * c.weight) * (adjoint(k) * k);
  }
  return s;
}

CheckResult check_hermitian_positive(const QMatrix& s) {
  if (!is_hermitian(s)) {
    return {"hermitian_positive", CheckStatus::Fail, fmt("||S - S*||_F = %.3e", frobenius_norm(s - adjoint(s)))};
  }
  const auto eig = hermitian_eigenvalues(0.5 * (s + adjoint(s)));
  const double floor = -1e-10 * std::max(1.0, eig.back());
  return pass_if("hermitian_positive", eig.front() >= floor, fmt("lambda_min = %.6e, lambda_max = %.6e", eig.front(), eig.back()));
}

CheckResult check_factorization(const GFusionFrame& frame, const QMatrix& s) {
  const QMatrix t = synthesis_matrix(frame);
  const double err = frobenius_norm(s - t * adjoint(t));
  const double limit = kFactorizationTol * std::max(1.0, frobenius_norm(s));
  return pass_if("synthesis_factorization", err <= limit, fmt("||S - T T*||_F = %.3e (limit %.3e)", err, limit));
}

CheckResult check_energy(const GFusionFrame& frame, const QMatrix& s, Rng& rng) {
  double worst = 0.0;
  double worst_imag = 0.0;
  for (std::size_t t = 0; t < kEnergySamples; ++t) {
    const QMatrix f = rng.vector(frame.dim());
    const Quaternion quad = inner_product(s * f, f);
    const double direct = frame_energy(frame, f);
    const double scale = std::max(1.0, std::abs(direct));
    worst = std::max(worst, std::abs(quad.a0() - direct) / scale);
    worst_imag = std::max(worst_imag, std::hypot(quad.a1(), quad.a2(), quad.a3()) / scale);
  }
  const bool ok = worst <= kEnergyTol && worst_imag <= kImaginaryTol;
  return pass_if("energy_identity", ok, fmt("relative error %.3e, imaginary part %.3e", worst, worst_imag));
}

CheckResult check_bounds(const GFusionFrame& frame, const FrameReport& report, Rng& rng) {
  const double a = report.bounds.lower;
  const double b = report.bounds.upper;
  if (!report.is_frame) return {"bound_optimality", CheckStatus::Fail, fmt("not a frame: A = %.6e, B = %.6e", a, b)};

  const Eigenpair low = hermitian_extreme_eigenpair(report.frame_operator, Extreme::Lowest);
  const Eigenpair high = hermitian_extreme_eigenpair(report.frame_operator, Extreme::Highest);
  const double e_low = frame_energy(frame, low.vector);
  const double e_high = frame_energy(frame, high.vector);
  // Raising A or lowering B by the gap must break the inequality at the extreme vectors.
  bool ok = e_low < a * (1.0 + kOptimalityGap) && e_high > b * (1.0 - kOptimalityGap);
  for (std::size_t t = 0; t < kEnergySamples && ok; ++t) {
    const QMatrix f = rng.vector(frame.dim());
    const double nf = norm(f);
    const double e = frame_energy(frame, f);
    const double slack = 1e-10 * b * nf * nf;
    ok = a * nf * nf <= e + slack && e <= b * nf * nf + slack;
  }
  return pass_if("bound_optimality", ok, fmt("A = %.12g, B = %.12g", a, b));
}

CheckResult check_reconstruction(const GFusionFrame& frame, const FrameReport& report, double tol, Rng& rng) {
  if (!report.is_frame) return {"reconstruction", CheckStatus::Skipped, "not a frame"};
  double worst = 0.0;
  for (std::size_t t = 0; t < kReconstructionSamples; ++t) {
    const Reconstruction r = reconstruct_checked(frame, rng.vector(frame.dim()), tol);
    worst = std::max({worst, r.residual, r.alternate_residual});
  }
  return pass_if("reconstruction", worst < kReconstructionTol, fmt("max relative residual %.3e", worst));
}

CheckResult check_dual(const GFusionFrame& frame, const FrameReport& report, double tol) {
  if (!report.is_frame) return {"dual_frame_operator", CheckStatus::Skipped, "not a frame"};
  const QMatrix s_dual = frame_operator(canonical_dual(frame, tol));
  const double err = operator_norm(s_dual * report.frame_operator - QMatrix::identity(frame.dim()));
  return pass_if("dual_frame_operator", err <= kDualTol, fmt("||S_dual S - I|| = %.3e", err));
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

bool VerifyReport::passed() const noexcept {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

double projection_identity_defect(std::size_t n, std::size_t trials, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const QMatrix op = rng.matrix(n, n);
    const Subspace v = random_subspace(rng, n, 1 + static_cast<std::size_t>(rng.next_u64() % n));
    const QMatrix pv_tstar = projection(v) * adjoint(op);
    const QMatrix rhs = pv_tstar * projection(subspace_image(op, v));
    worst = std::max(worst, frobenius_norm(pv_tstar - rhs) / std::max(1.0, frobenius_norm(op)));
  }
  return worst;
}

VerifyReport verify_frame(const GFusionFrame& frame, const VerifyOptions& options) {
  Rng rng(options.seed);
  VerifyReport out;
  const QMatrix raw = raw_frame_operator(frame);
  out.checks.push_back(check_hermitian_positive(raw));
  out.checks.push_back(check_factorization(frame, raw));
  out.checks.push_back(check_energy(frame, raw, rng));

  const FrameReport report = classify(frame, options.tol);
  out.checks.push_back(check_bounds(frame, report, rng));
  out.checks.push_back(check_reconstruction(frame, report, options.tol, rng));
  out.checks.push_back(check_dual(frame, report, options.tol));

  const double defect = projection_identity_defect(frame.dim(), kProjectionTrials, rng.next_u64());
  out.checks.push_back(pass_if("projection_identity", defect <= kProjectionTol, fmt("max relative defect %.3e", defect)));
  return out;
}

}  // namespace qframe
