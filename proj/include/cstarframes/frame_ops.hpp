#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cstarframes/measure.hpp"

namespace csf {

/// A sampled frame map F: Omega -> A^k over a discretized measure space.
class Frame {
 public:
  explicit Frame(VectorField samples);

  const MeasureSpace& space() const { return samples_.space(); }
  const VectorField& field() const { return samples_; }
  std::size_t node_count() const { return samples_.size(); }
  const ModuleVector& sample(std::size_t j) const { return samples_.value(j); }
  const AlgebraShape& shape() const { return samples_.value(0).shape(); }
  std::size_t rank() const { return samples_.value(0).rank(); }

 private:
  VectorField samples_;
};

/// Optimal frame constants: spectral extremes of the frame operator.
struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Riesz constants in the squared convention
/// A ||int |phi*|^2|| <= ||int phi F||^2 <= B ||int |phi*|^2||.
struct RieszBounds {
  double lower = 0.0;
  double upper = 0.0;
};

struct FrameFlags {
  bool bessel = false;
  bool frame = false;
  bool tight = false;
  bool mu_complete = false;
  bool l2_independent = false;
  bool riesz = false;
  bool riesz_type = false;
  bool exact = false;
};

struct FrameDiagnostics {
  FrameBounds bounds;
  FrameFlags flags;
  std::optional<RieszBounds> riesz_bounds;
  std::optional<double> reconstruction_residual;
  std::vector<std::string> notes;
};

/// Synthesis (pre-frame) operator: T_F phi = sum_j w_j phi_j . F_j.
ModuleVector synthesis(const Frame& frame, const AlgebraField& phi);

/// Analysis operator: (T*_F f)(omega_j) = inner(f, F_j).
AlgebraField analysis(const Frame& frame, const ModuleVector& f);

/// Frame operator S = T T*, as a module operator.
ModuleOperator frame_operator(const Frame& frame);

/// T_F T_G^*: f -> sum_j w_j inner(f, G_j) . F_j. With G = F this is the
/// frame operator.
ModuleOperator cross_frame_operator(const Frame& f_frame, const Frame& g_frame);

/// Gram operator V = T* T on the discretized L2(Omega, A): an m x m matrix
/// over A with entry(j, l) = inner(F_j, F_l), acting by
/// (V phi)_l = sum_j w_j phi_j entry(j, l).
class GramOperator {
 public:
  GramOperator(MeasureSpace space, AlgebraShape shape, std::vector<AlgebraElement> entries);

  const MeasureSpace& space() const { return space_; }
  std::size_t size() const { return space_.size(); }
  const AlgebraElement& entry(std::size_t j, std::size_t l) const {
    return entries_[j * size() + l];
  }

  AlgebraField apply(const AlgebraField& phi) const;

 private:
  MeasureSpace space_;
  AlgebraShape shape_;
  std::vector<AlgebraElement> entries_;
};

GramOperator gram_operator(const Frame& frame);

/// Spectrum of the frame operator, with eigenvector access for bound
/// attainment checks.
struct FrameSpectrum {
  OperatorSpectrum spectrum;
  AlgebraShape shape;
  std::size_t rank = 0;
  double min_eigenvalue() const { return spectrum.min_eigenvalue(); }
  double max_eigenvalue() const { return spectrum.max_eigenvalue(); }
  ModuleVector min_eigenvector() const;
  ModuleVector max_eigenvector() const;
};

FrameSpectrum frame_operator_spectrum(const Frame& frame);

/// Spectrum of the weighted Gram realization, one Hermitian matrix of size
/// m * n_i per algebra block, with a lift of eigenvectors back to fields.
struct GramSpectrum {
  std::vector<HermitianEigen> blocks;
  MeasureSpace space;
  AlgebraShape shape;
  double min_eigenvalue() const;
  double max_eigenvalue() const;
  /// Field attaining the smallest eigenvalue (kernel witness when ~ 0).
  AlgebraField min_eigenfield() const;
};

GramSpectrum gram_spectrum(const Frame& frame);

FrameBounds frame_bounds(const Frame& frame);

bool is_bessel(const Frame& frame, double tol = kDefaultTol);
bool is_frame(const Frame& frame, double tol = kDefaultTol);
bool is_tight(const Frame& frame, double tol = kDefaultTol);

/// Canonical dual S^{-1} F. Throws ErrorKind::NotAFrame.
Frame canonical_dual(const Frame& frame);

/// T_F T_G^* = identity within tol in the operator norm (symmetric in F, G).
bool is_dual(const Frame& f_frame, const Frame& g_frame, double tol = kDefaultTol);

/// synthesis(F, analysis(G, f)); equals f when (F, G) is a dual pair.
ModuleVector reconstruct(const Frame& f_frame, const Frame& g_frame, const ModuleVector& f);

/// Analysis operator injective: lambda_min of the frame operator above the
/// relative spectral threshold.
bool mu_complete(const Frame& frame, double tol = kDefaultTol);

/// Synthesis operator injective: lambda_min of the weighted Gram realization
/// above the relative spectral threshold.
bool l2_independent(const Frame& frame, double tol = kDefaultTol);

struct RieszResult {
  bool riesz = false;
  std::optional<RieszBounds> bounds;
};

/// Riesz basis decision: mu-complete and L2-independent; bounds are the
/// Gram spectral extremes in the squared convention.
RieszResult is_riesz(const Frame& frame, double tol = kDefaultTol);

/// Uniqueness of the dual, decided through surjectivity of the analysis
/// operator: the weighted analysis matrix is assembled directly from the
/// samples and lambda_min(Ta Ta*) is tested. Independent of is_riesz's
/// Gram-entry route. Throws ErrorKind::NotAFrame.
bool is_riesz_type(const Frame& frame, double tol = kDefaultTol);

/// Norm of the synthesis operator, sqrt(lambda_max(Ta Ta*)), from the same
/// directly assembled analysis matrix (independent of the frame-operator
/// route to ||T||^2 = ||S||).
double synthesis_norm(const Frame& frame);

/// A dual different from the canonical one, when the dual is not unique:
/// G_j = (S^{-1}F)_j + star(psi_j) . u with psi a synthesis-kernel witness
/// and u = e_1 scaled so the correction has sampled norm 1. Returns nullopt
/// for Riesz-type frames. Throws ErrorKind::NotAFrame.
std::optional<Frame> non_canonical_dual(const Frame& frame, double tol = kDefaultTol);

/// Exactness by single-node removal; atomic spaces only. Throws
/// ErrorKind::NotAFrame / ErrorKind::InvalidArgument (interval space).
bool is_exact(const Frame& frame, double tol = kDefaultTol);

/// The invertible K with G = S_G K* F for two Riesz bases on one space:
/// K = (T_G T_F^*)^{-1}. Throws ErrorKind::NotRiesz.
ModuleOperator riesz_link_operator(const Frame& f_frame, const Frame& g_frame,
                                   double tol = kDefaultTol);

/// Norm sqrt(|| sum_j w_j inner(v_j, v_j) ||) of a vector field, used to
/// compare duals.
double sampled_norm(const VectorField& field);

/// Runs the full diagnostic stack with graceful degradation; cross-check
/// discrepancies and skipped checks are recorded in notes.
FrameDiagnostics diagnose(const Frame& frame, double tol = kDefaultTol);

}  // namespace csf
