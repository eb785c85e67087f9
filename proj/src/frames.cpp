#include "qframe/frames.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qframe/error.hpp"
#include "qframe/jacobi.hpp"

namespace qframe {
namespace {

void require_signal(const GFusionFrame& frame, const QMatrix& f) {
  if (!f.is_vector() || f.rows() != frame.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "signal must be a vector of length " + std::to_string(frame.dim()));
  }
}

// L_j P_{W_j}, the operator each component applies to a signal.
QMatrix restricted_operator(const FrameComponent& c) { return c.op * projection(c.subspace); }

double relative_residual(const QMatrix& approx, const QMatrix& f) {
  const double scale = norm(f);
  const double err = norm(approx - f);
  return scale > 0.0 ? err / scale : err;
}

}  // namespace

GFusionFrame::GFusionFrame(std::size_t dim, std::vector<FrameComponent> components)
    : dim_(dim), components_(std::move(components)) {
  if (dim_ == 0) throw Error(ErrorCode::DimensionMismatch, "frame dimension must be positive");
  if (components_.empty()) throw Error(ErrorCode::EmptyInput, "a frame needs at least one component");
  for (std::size_t j = 0; j < components_.size(); ++j) {
    const auto& c = components_[j];
    if (!std::isfinite(c.weight) || !(c.weight > 0.0)) {
      throw Error(ErrorCode::InvalidWeight, "component " + std::to_string(j) + " has weight " +
                                                std::to_string(c.weight) + "; weights must be positive");
    }
    if (c.subspace.ambient_dim() != dim_) {
      throw Error(ErrorCode::DimensionMismatch, "component " + std::to_string(j) + " subspace lives in H^" +
                                                    std::to_string(c.subspace.ambient_dim()));
    }
    if (c.op.cols() != dim_) {
      throw Error(ErrorCode::DimensionMismatch, "component " + std::to_string(j) + " operator has " +
                                                    std::to_string(c.op.cols()) + " columns");
    }
  }
}

std::size_t GFusionFrame::coefficient_dim() const noexcept {
  std::size_t total = 0;
  for (const auto& c : components_) total += c.op.rows();
  return total;
}

void validate_blocks(const GFusionFrame& frame, const CoefficientBlocks& c) {
  if (c.blocks.size() != frame.size()) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(frame.size()) + " coefficient blocks");
  }
  for (std::size_t j = 0; j < frame.size(); ++j) {
    if (!c.blocks[j].is_vector() || c.blocks[j].rows() != frame[j].op.rows()) {
      throw Error(ErrorCode::DimensionMismatch, "coefficient block " + std::to_string(j) + " has the wrong length");
    }
  }
}

double coefficient_norm(const CoefficientBlocks& c) {
  double s = 0.0;
  for (const auto& b : c.blocks) {
    const double nb = norm(b);
    s += nb * nb;
  }
  return std::sqrt(s);
}

QMatrix flatten(const CoefficientBlocks& c) { return vstack(c.blocks); }

CoefficientBlocks unflatten(const GFusionFrame& frame, const QMatrix& stacked) {
  if (!stacked.is_vector() || stacked.rows() != frame.coefficient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "stacked coefficients have the wrong length");
  }
  CoefficientBlocks out;
  std::size_t offset = 0;
  for (const auto& comp : frame.components()) {
    QMatrix b(comp.op.rows(), 1);
    for (std::size_t r = 0; r < b.rows(); ++r) b[r] = stacked[offset + r];
    offset += b.rows();
    out.blocks.push_back(std::move(b));
  }
  return out;
}

GFusionFrame from_vector_frame(const std::vector<QMatrix>& vectors) {
  if (vectors.empty()) throw Error(ErrorCode::EmptyInput, "vector frame has no vectors");
  const std::size_t n = vectors.front().rows();
  std::vector<FrameComponent> comps;
  comps.reserve(vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    const auto& f = vectors[j];
    if (!f.is_vector() || f.rows() != n) {
      throw Error(ErrorCode::DimensionMismatch, "frame vectors must all lie in H^" + std::to_string(n));
    }
    if (norm(f) == 0.0) throw Error(ErrorCode::ZeroVector, "frame vector " + std::to_string(j) + " is zero");
    Subspace line = [&] {
      try {
        return Subspace::span_of(f);
      } catch (const Error&) {
        throw Error(ErrorCode::ZeroVector, "frame vector " + std::to_string(j) + " is numerically zero");
      }
    }();
    comps.push_back({std::move(line), adjoint(f), 1.0});
  }
  return GFusionFrame(n, std::move(comps));
}

GFusionFrame from_fusion_frame(const std::vector<Subspace>& subspaces, const std::vector<double>& weights) {
  if (subspaces.empty()) throw Error(ErrorCode::EmptyInput, "fusion frame has no subspaces");
  if (subspaces.size() != weights.size()) {
    throw Error(ErrorCode::DimensionMismatch, "fusion frame needs one weight per subspace");
  }
  const std::size_t n = subspaces.front().ambient_dim();
  std::vector<FrameComponent> comps;
  comps.reserve(subspaces.size());
  for (std::size_t j = 0; j < subspaces.size(); ++j) comps.push_back({subspaces[j], QMatrix::identity(n), weights[j]});
  return GFusionFrame(n, std::move(comps));
}

GFusionFrame from_g_frame(const std::vector<QMatrix>& operators) {
  if (operators.empty()) throw Error(ErrorCode::EmptyInput, "g-frame has no operators");
  const std::size_t n = operators.front().cols();
  std::vector<FrameComponent> comps;
  comps.reserve(operators.size());
  for (const auto& op : operators) {
    if (op.cols() != n) throw Error(ErrorCode::DimensionMismatch, "g-frame operators must share a domain");
    comps.push_back({Subspace::full(n), op, 1.0});
  }
  return GFusionFrame(n, std::move(comps));
}

QMatrix synthesis_matrix(const GFusionFrame& frame) {
  std::vector<QMatrix> blocks;
  blocks.reserve(frame.size());
  for (const auto& c : frame.components()) blocks.push_back(c.weight * (projection(c.subspace) * adjoint(c.op)));
  return hstack(blocks);
}

QMatrix analysis_matrix(const GFusionFrame& frame) { return adjoint(synthesis_matrix(frame)); }

QMatrix synthesize(const GFusionFrame& frame, const CoefficientBlocks& c) {
  validate_blocks(frame, c);
  QMatrix out(frame.dim(), 1);
  for (std::size_t j = 0; j < frame.size(); ++j) {
    const auto& comp = frame[j];
    out += comp.weight * (projection(comp.subspace) * (adjoint(comp.op) * c.blocks[j]));
  }
  return out;
}

CoefficientBlocks analyze(const GFusionFrame& frame, const QMatrix& f) {
  require_signal(frame, f);
  CoefficientBlocks out;
  out.blocks.reserve(frame.size());
  for (const auto& comp : frame.components()) out.blocks.push_back(comp.weight * (comp.op * (projection(comp.subspace) * f)));
  return out;
}

double frame_energy(const GFusionFrame& frame, const QMatrix& f) {
  require_signal(frame, f);
  double total = 0.0;
  for (const auto& comp : frame.components()) {
    const double part = norm(comp.op * (projection(comp.subspace) * f));
    total += comp.weight * comp.weight * part * part;
  }
  return total;
}

QMatrix frame_operator(const GFusionFrame& frame) {
  QMatrix s(frame.dim(), frame.dim());
  for (const auto& comp : frame.components()) {
    const QMatrix k = restricted_operator(comp);
    s += (comp.weight * comp.weight) * (adjoint(k) * k);
  }
  return 0.5 * (s + adjoint(s));
}

FrameBounds frame_bounds(const GFusionFrame& frame) {
  const auto eig = hermitian_eigenvalues(frame_operator(frame));
  const double lower = std::max(0.0, eig.front());
  return {lower, std::max(lower, eig.back())};
}

FrameReport classify(const GFusionFrame& frame, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "classification tolerance must be positive");
  QMatrix s = frame_operator(frame);
  const auto eig = hermitian_eigenvalues(s);
  const double lower = std::max(0.0, eig.front());
  const FrameBounds bounds{lower, std::max(lower, eig.back())};

  const bool parseval = operator_norm(s - QMatrix::identity(frame.dim())) <= tol;
  const bool frame_raw = bounds.lower > tol * std::max(1.0, bounds.upper);
  const bool tight = parseval || (frame_raw && bounds.upper - bounds.lower <= tol * bounds.upper);
  return FrameReport{bounds, tight || frame_raw, tight, parseval, true, std::move(s)};
}

Reconstruction reconstruct_checked(const GFusionFrame& frame, const QMatrix& f, double tol) {
  require_signal(frame, f);
  const FrameReport report = classify(frame, tol);
  if (!report.is_frame) throw Error(ErrorCode::NotAFrame, "frame operator is numerically singular");
  const QMatrix s_inv = hermitian_function(report.frame_operator, SpectralFunction::Inverse);
  const QMatrix s_inv_f = s_inv * f;

  QMatrix first(frame.dim(), 1);
  QMatrix second(frame.dim(), 1);
  for (const auto& comp : frame.components()) {
    const QMatrix k = restricted_operator(comp);
    const double w2 = comp.weight * comp.weight;
    first += w2 * (s_inv * (adjoint(k) * (k * f)));
    second += w2 * (adjoint(k) * (k * s_inv_f));
  }
  const double r1 = relative_residual(first, f);
  const double r2 = relative_residual(second, f);
  return {std::move(first), std::move(second), r1, r2};
}

QMatrix reconstruct(const GFusionFrame& frame, const QMatrix& f, double tol) {
  Reconstruction r = reconstruct_checked(frame, f, tol);
  if (r.residual > 1e-8 || r.alternate_residual > 1e-8) {
    throw Error(ErrorCode::NumericalFailure, "reconstruction residual " +
                                                 std::to_string(std::max(r.residual, r.alternate_residual)) +
                                                 " exceeds 1e-8");
  }
  return std::move(r.signal);
}

bool synthesis_is_onto(const GFusionFrame& frame, double tol) {
  const ComplexMatrix t = embed(synthesis_matrix(frame));
  const ComplexEigen eig = jacobi_eigen(t * adjoint(t));
  const double cutoff = tol * std::max(1.0, eig.values.back());
  const auto rank = std::count_if(eig.values.begin(), eig.values.end(), [&](double v) { return v > cutoff; });
  return static_cast<std::size_t>(rank) == 2 * frame.dim();
}

}  // namespace qframe
