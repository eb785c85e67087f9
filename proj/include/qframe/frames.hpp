#pragma once

// g-fusion frames on H^n. Vector frames, fusion frames and g-frames are all
// normalized into GFusionFrame, whose components are triples (W_j, L_j, v_j):
// a subspace, an operator H^n -> H^{m_j}, and a positive weight. The frame
// inequality is
//
//   A ||f||^2 <= sum_j v_j^2 ||L_j P_{W_j} f||^2 <= B ||f||^2.

#include <vector>

#include "qframe/qlinalg.hpp"

namespace qframe {

/// Default relative tolerance for frame classification.
inline constexpr double kFrameTolerance = 1e-8;

struct FrameComponent {
  Subspace subspace;
  QMatrix op;  ///< m_j x n
  double weight;
};

class GFusionFrame {
 public:
  /// Throws ErrorCode::EmptyInput, ErrorCode::InvalidWeight (weight not
  /// finite and positive) or ErrorCode::DimensionMismatch.
  GFusionFrame(std::size_t dim, std::vector<FrameComponent> components);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return components_.size(); }
  const std::vector<FrameComponent>& components() const noexcept { return components_; }
  const FrameComponent& operator[](std::size_t j) const noexcept { return components_[j]; }

  /// Sum of the codomain dimensions m_j.
  std::size_t coefficient_dim() const noexcept;

 private:
  std::size_t dim_;
  std::vector<FrameComponent> components_;
};

struct FrameBounds {
  double lower;
  double upper;
};

struct FrameReport {
  FrameBounds bounds;
  bool is_frame;
  bool is_tight;
  bool is_parseval;
  bool is_bessel;
  QMatrix frame_operator;
};

/// Element of the coefficient space: one vector per component, block j in H^{m_j}.
struct CoefficientBlocks {
  std::vector<QMatrix> blocks;
};

/// Throws ErrorCode::DimensionMismatch unless block count and lengths match the frame.
void validate_blocks(const GFusionFrame& frame, const CoefficientBlocks& c);
/// sqrt(sum_j ||f_j||^2).
double coefficient_norm(const CoefficientBlocks& c);
/// Stacks blocks in component order.
QMatrix flatten(const CoefficientBlocks& c);
CoefficientBlocks unflatten(const GFusionFrame& frame, const QMatrix& stacked);

// Conversions ---------------------------------------------------------------

/// W_j = span{f_j}, L_j = f_j* (1 x n), v_j = 1. Throws ErrorCode::ZeroVector.
GFusionFrame from_vector_frame(const std::vector<QMatrix>& vectors);
/// L_j = I_n. Throws ErrorCode::InvalidWeight for non-positive weights.
GFusionFrame from_fusion_frame(const std::vector<Subspace>& subspaces, const std::vector<double>& weights);
/// W_j = H^n, v_j = 1.
GFusionFrame from_g_frame(const std::vector<QMatrix>& operators);

// Operators -----------------------------------------------------------------

/// [v_1 P_1 L_1* | ... | v_k P_k L_k*], n x sum m_j.
QMatrix synthesis_matrix(const GFusionFrame& frame);
/// Adjoint of the synthesis matrix.
QMatrix analysis_matrix(const GFusionFrame& frame);

/// sum_j v_j P_j L_j* c_j.
QMatrix synthesize(const GFusionFrame& frame, const CoefficientBlocks& c);
/// {v_j L_j P_j f}.
CoefficientBlocks analyze(const GFusionFrame& frame, const QMatrix& f);

/// sum_j v_j^2 ||L_j P_j f||^2, evaluated term by term.
double frame_energy(const GFusionFrame& frame, const QMatrix& f);

/// S = sum_j v_j^2 P_j L_j* L_j P_j (Hermitian, positive semidefinite).
QMatrix frame_operator(const GFusionFrame& frame);

/// Optimal bounds (lambda_min(S), lambda_max(S)), clamped to 0 <= A <= B.
FrameBounds frame_bounds(const GFusionFrame& frame);

/// is_parseval <=> ||S - I|| <= tol; is_frame <=> A > tol max(1, B);
/// is_tight <=> is_frame and B - A <= tol B. The flags are closed upward
/// (Parseval implies tight implies frame).
FrameReport classify(const GFusionFrame& frame, double tol = kFrameTolerance);

struct Reconstruction {
  QMatrix signal;     ///< sum_j v_j^2 S^-1 P_j L_j* L_j P_j f
  QMatrix alternate;  ///< sum_j v_j^2 P_j L_j* L_j P_j S^-1 f
  double residual;    ///< ||signal - f|| / ||f|| (absolute when f = 0)
  double alternate_residual;
};

/// Both reconstruction sums. Throws ErrorCode::NotAFrame.
Reconstruction reconstruct_checked(const GFusionFrame& frame, const QMatrix& f, double tol = kFrameTolerance);

/// Reconstructed signal; throws ErrorCode::NumericalFailure if either
/// reconstruction misses f by more than 1e-8 relative.
QMatrix reconstruct(const GFusionFrame& frame, const QMatrix& f, double tol = kFrameTolerance);

/// Whether the synthesis operator maps onto H^n: the embedded T T* has full
/// rank 2n, counting eigenvalues above tol max(1, lambda_max).
bool synthesis_is_onto(const GFusionFrame& frame, double tol = kFrameTolerance);

}  // namespace qframe
