#include "cstarframes/frame_ops.hpp"

#include <algorithm>
#include <cmath>

namespace csf {

namespace {

double clamp0(double x) { return x < 0.0 ? 0.0 : x; }

void require_same_space(const Frame& f, const Frame& g) {
  if (f.space() != g.space()) {
    throw Error(ErrorKind::ShapeMismatch, "frames live on different measure spaces");
  }
  if (f.shape() != g.shape() || f.rank() != g.rank()) {
    throw Error(ErrorKind::ShapeMismatch, "frames have different module shape or rank");
  }
}

void require_field_matches(const Frame& frame, const AlgebraField& phi) {
  if (phi.space() != frame.space()) {
    throw Error(ErrorKind::ShapeMismatch, "field lives on a different measure space");
  }
  if (phi.value(0).shape() != frame.shape()) {
    throw Error(ErrorKind::ShapeMismatch, "field algebra shape does not match the frame");
  }
}

}  // namespace

Frame::Frame(VectorField samples) : samples_(std::move(samples)) {
  const AlgebraShape& shape = samples_.value(0).shape();
  const std::size_t rank = samples_.value(0).rank();
  for (std::size_t j = 1; j < samples_.size(); ++j) {
    if (samples_.value(j).shape() != shape || samples_.value(j).rank() != rank) {
      throw Error(ErrorKind::ShapeMismatch,
                  strfmt("frame sample %zu differs in shape or rank", j));
    }
  }
}

ModuleVector synthesis(const Frame& frame, const AlgebraField& phi) {
  require_field_matches(frame, phi);
  const std::vector<double>& w = frame.space().weights();
  return pairwise_sum(frame.node_count(), ModuleVector::zero(frame.shape(), frame.rank()),
                      [&](std::size_t j) {
                        return scale(w[j], module_action(phi.value(j), frame.sample(j)));
                      });
}

AlgebraField analysis(const Frame& frame, const ModuleVector& f) {
  if (f.shape() != frame.shape() || f.rank() != frame.rank()) {
    throw Error(ErrorKind::ShapeMismatch, "vector does not conform to the frame");
  }
  std::vector<AlgebraElement> values;
  values.reserve(frame.node_count());
  for (std::size_t j = 0; j < frame.node_count(); ++j) {
    values.push_back(inner(f, frame.sample(j)));
  }
  return AlgebraField(frame.space(), std::move(values));
}

ModuleOperator cross_frame_operator(const Frame& f_frame, const Frame& g_frame) {
  require_same_space(f_frame, g_frame);
  const std::size_t k = f_frame.rank();
  const std::vector<double>& w = f_frame.space().weights();
  std::vector<AlgebraElement> coeffs;
  coeffs.reserve(k * k);
  for (std::size_t q = 0; q < k; ++q) {
    for (std::size_t p = 0; p < k; ++p) {
      coeffs.push_back(pairwise_sum(
          f_frame.node_count(), AlgebraElement::zero(f_frame.shape()), [&](std::size_t j) {
            return scale(w[j], mul(star(g_frame.sample(j).entry(q)),
                                   f_frame.sample(j).entry(p)));
          }));
    }
  }
  return ModuleOperator(f_frame.shape(), k, std::move(coeffs));
}

ModuleOperator frame_operator(const Frame& frame) { return cross_frame_operator(frame, frame); }

GramOperator::GramOperator(MeasureSpace space, AlgebraShape shape,
                           std::vector<AlgebraElement> entries)
    : space_(std::move(space)), shape_(std::move(shape)), entries_(std::move(entries)) {
  if (entries_.size() != space_.size() * space_.size()) {
    throw Error(ErrorKind::ShapeMismatch, "gram operator entry count mismatch");
  }
}

AlgebraField GramOperator::apply(const AlgebraField& phi) const {
  if (phi.space() != space_) {
    throw Error(ErrorKind::ShapeMismatch, "gram apply: field lives on a different space");
  }
  const std::vector<double>& w = space_.weights();
  std::vector<AlgebraElement> out;
  out.reserve(size());
  for (std::size_t l = 0; l < size(); ++l) {
    out.push_back(pairwise_sum(size(), AlgebraElement::zero(shape_), [&](std::size_t j) {
      return scale(w[j], mul(phi.value(j), entry(j, l)));
    }));
  }
  return AlgebraField(space_, std::move(out));
}

GramOperator gram_operator(const Frame& frame) {
  const std::size_t m = frame.node_count();
  std::vector<AlgebraElement> entries;
  entries.reserve(m * m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t l = 0; l < m; ++l) {
      entries.push_back(inner(frame.sample(j), frame.sample(l)));
    }
  }
  return GramOperator(frame.space(), frame.shape(), std::move(entries));
}

FrameSpectrum frame_operator_spectrum(const Frame& frame) {
  FrameSpectrum out{hermitian_operator_spectrum(frame_operator(frame)), frame.shape(),
                    frame.rank()};
  return out;
}

ModuleVector FrameSpectrum::min_eigenvector() const {
  std::size_t b = spectrum.argmin_block();
  return lift_eigenvector(shape, rank, b, spectrum.blocks[b].vectors, 0);
}

ModuleVector FrameSpectrum::max_eigenvector() const {
  std::size_t b = spectrum.argmax_block();
  return lift_eigenvector(shape, rank, b, spectrum.blocks[b].vectors,
                          spectrum.blocks[b].values.size() - 1);
}

GramSpectrum gram_spectrum(const Frame& frame) {
  const std::size_t m = frame.node_count();
  const AlgebraShape& shape = frame.shape();
  const std::vector<double>& w = frame.space().weights();
  GramOperator gram = gram_operator(frame);

  GramSpectrum out{{}, frame.space(), shape};
  out.blocks.reserve(shape.block_count());
  std::vector<double> sqw(m);
  for (std::size_t j = 0; j < m; ++j) sqw[j] = std::sqrt(w[j]);

  for (std::size_t i = 0; i < shape.block_count(); ++i) {
    const std::size_t n = shape.block_dim(i);
    // Weighted realization in action orientation: block (l, j) is
    // sqrt(w_l w_j) transpose(inner(F_j, F_l) restricted to algebra block i).
    ComplexMatrix big(m * n, m * n);
    for (std::size_t l = 0; l < m; ++l) {
      for (std::size_t j = 0; j < m; ++j) {
        const ComplexMatrix& g = gram.entry(j, l).block(i);
        const double s = sqw[l] * sqw[j];
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) big(l * n + r, j * n + c) = s * g(c, r);
      }
    }
    ComplexMatrix h = cplx(0.5) * (big + big.adjoint());
    out.blocks.push_back(hermitian_eigen_jacobi(h));
  }
  return out;
}

double GramSpectrum::min_eigenvalue() const {
  double best = 0.0;
  bool first = true;
  for (const HermitianEigen& e : blocks) {
    if (e.values.empty()) continue;
    if (first || e.values.front() < best) best = e.values.front();
    first = false;
  }
  return best;
}

double GramSpectrum::max_eigenvalue() const {
  double best = 0.0;
  bool first = true;
  for (const HermitianEigen& e : blocks) {
    if (e.values.empty()) continue;
    if (first || e.values.back() > best) best = e.values.back();
    first = false;
  }
  return best;
}

AlgebraField GramSpectrum::min_eigenfield() const {
  std::size_t arg = 0;
  double best = blocks.front().values.front();
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    if (blocks[i].values.front() < best) {
      best = blocks[i].values.front();
      arg = i;
    }
  }
  const std::size_t m = space.size();
  const std::size_t n = shape.block_dim(arg);
  const ComplexMatrix& vecs = blocks[arg].vectors;
  std::vector<AlgebraElement> values;
  values.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double sw = std::sqrt(space.weights()[j]);
    std::vector<ComplexMatrix> elem_blocks;
    elem_blocks.reserve(shape.block_count());
    for (std::size_t i = 0; i < shape.block_count(); ++i) {
      ComplexMatrix mtx(shape.block_dim(i), shape.block_dim(i));
      if (i == arg) {
        for (std::size_t c = 0; c < n; ++c) mtx(0, c) = vecs(j * n + c, 0) / sw;
      }
      elem_blocks.push_back(std::move(mtx));
    }
    values.emplace_back(shape, std::move(elem_blocks));
  }
  return AlgebraField(space, std::move(values));
}

FrameBounds frame_bounds(const Frame& frame) {
  FrameSpectrum s = frame_operator_spectrum(frame);
  return FrameBounds{clamp0(s.min_eigenvalue()), clamp0(s.max_eigenvalue())};
}

bool is_bessel(const Frame& frame, double tol) {
  (void)tol;
  // Finite weighted sums of bounded samples are always Bessel.
  return std::isfinite(frame_bounds(frame).upper);
}

bool is_frame(const Frame& frame, double tol) {
  FrameBounds b = frame_bounds(frame);
  return b.lower > tol * (1.0 + b.upper);
}

bool is_tight(const Frame& frame, double tol) {
  FrameBounds b = frame_bounds(frame);
  return std::abs(b.upper - b.lower) <= tol * (1.0 + b.upper);
}

Frame canonical_dual(const Frame& frame) {
  if (!is_frame(frame)) {
    throw Error(ErrorKind::NotAFrame, "canonical dual requires a frame (frame operator singular)");
  }
  ModuleOperator s_inv = op_invert(frame_operator(frame));
  std::vector<ModuleVector> duals;
  duals.reserve(frame.node_count());
  for (std::size_t j = 0; j < frame.node_count(); ++j) {
    duals.push_back(op_apply(s_inv, frame.sample(j)));
  }
  return Frame(VectorField(frame.space(), std::move(duals)));
}

bool is_dual(const Frame& f_frame, const Frame& g_frame, double tol) {
  ModuleOperator composite = cross_frame_operator(f_frame, g_frame);
  ModuleOperator identity = ModuleOperator::identity(f_frame.shape(), f_frame.rank());
  return op_norm(op_sub(composite, identity)) <= tol;
}

ModuleVector reconstruct(const Frame& f_frame, const Frame& g_frame, const ModuleVector& f) {
  require_same_space(f_frame, g_frame);
  return synthesis(f_frame, analysis(g_frame, f));
}

bool mu_complete(const Frame& frame, double tol) {
  FrameSpectrum s = frame_operator_spectrum(frame);
  return s.min_eigenvalue() > tol * (1.0 + s.max_eigenvalue());
}

bool l2_independent(const Frame& frame, double tol) {
  GramSpectrum s = gram_spectrum(frame);
  return s.min_eigenvalue() > tol * (1.0 + s.max_eigenvalue());
}

RieszResult is_riesz(const Frame& frame, double tol) {
  bool complete = mu_complete(frame, tol);
  GramSpectrum s = gram_spectrum(frame);
  bool independent = s.min_eigenvalue() > tol * (1.0 + s.max_eigenvalue());
  RieszResult out;
  out.riesz = complete && independent;
  if (out.riesz) {
    out.bounds = RieszBounds{clamp0(s.min_eigenvalue()), clamp0(s.max_eigenvalue())};
  }
  return out;
}

namespace {

/// Spectral extremes of Ta Ta* across algebra blocks, where Ta is the
/// weighted analysis matrix with block (j, q) = sqrt(w_j) conj(F_j,q).
void analysis_matrix_spectrum(const Frame& frame, double& lo, double& hi) {
  const std::size_t m = frame.node_count();
  const std::size_t k = frame.rank();
  const AlgebraShape& shape = frame.shape();
  const std::vector<double>& w = frame.space().weights();
  lo = 0.0;
  hi = 0.0;
  bool first = true;
  for (std::size_t i = 0; i < shape.block_count(); ++i) {
    const std::size_t n = shape.block_dim(i);
    ComplexMatrix ta(m * n, k * n);
    for (std::size_t j = 0; j < m; ++j) {
      const double sw = std::sqrt(w[j]);
      for (std::size_t q = 0; q < k; ++q) {
        const ComplexMatrix& s = frame.sample(j).entry(q).block(i);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            ta(j * n + r, q * n + c) = sw * std::conj(s(r, c));
      }
    }
    HermitianEigen e = hermitian_eigen_jacobi(ta * ta.adjoint());
    if (first || e.values.front() < lo) lo = e.values.front();
    if (first || e.values.back() > hi) hi = e.values.back();
    first = false;
  }
}

}  // namespace

bool is_riesz_type(const Frame& frame, double tol) {
  if (!is_frame(frame, tol)) {
    throw Error(ErrorKind::NotAFrame, "riesz-type test requires a frame");
  }
  double lo = 0.0;
  double hi = 0.0;
  analysis_matrix_spectrum(frame, lo, hi);
  return lo > tol * (1.0 + hi);
}

double synthesis_norm(const Frame& frame) {
  double lo = 0.0;
  double hi = 0.0;
  analysis_matrix_spectrum(frame, lo, hi);
  return std::sqrt(clamp0(hi));
}

double sampled_norm(const VectorField& field) {
  const AlgebraShape& shape = field.value(0).shape();
  AlgebraElement acc =
      pairwise_sum(field.size(), AlgebraElement::zero(shape), [&](std::size_t j) {
        return scale(field.space().weights()[j],
                     inner(field.value(j), field.value(j)));
      });
  return std::sqrt(norm(acc));
}

std::optional<Frame> non_canonical_dual(const Frame& frame, double tol) {
  if (!is_frame(frame, tol)) {
    throw Error(ErrorKind::NotAFrame, "non-canonical dual requires a frame");
  }
  if (is_riesz_type(frame, tol)) return std::nullopt;

  GramSpectrum gs = gram_spectrum(frame);
  AlgebraField psi_raw = gs.min_eigenfield();

  // Project the witness onto ker(synthesis): psi -= T* S^{-1} T psi. This
  // removes the range component down to rounding, so the correction below
  // perturbs duality by O(eps) rather than O(sqrt(lambda_min)).
  ModuleOperator s_inv = op_invert(frame_operator(frame));
  AlgebraField psi = psi_raw;
  for (int pass = 0; pass < 2; ++pass) {
    AlgebraField range_part = analysis(frame, op_apply(s_inv, synthesis(frame, psi)));
    std::vector<AlgebraElement> values;
    values.reserve(psi.size());
    for (std::size_t j = 0; j < psi.size(); ++j) {
      values.push_back(sub(psi.value(j), range_part.value(j)));
    }
    psi = AlgebraField(frame.space(), std::move(values));
  }

  Frame dual = canonical_dual(frame);
  const ModuleVector e1 = ModuleVector::basis(frame.shape(), frame.rank(), 0);
  std::vector<ModuleVector> correction;
  correction.reserve(frame.node_count());
  for (std::size_t j = 0; j < frame.node_count(); ++j) {
    correction.push_back(module_action(star(psi.value(j)), e1));
  }
  VectorField correction_field(frame.space(), correction);
  double c = sampled_norm(correction_field);
  if (!(c > 0.0)) {
    throw Error(ErrorKind::Singular,
                "non-canonical dual: kernel witness vanished after projection");
  }
  std::vector<ModuleVector> samples;
  samples.reserve(frame.node_count());
  for (std::size_t j = 0; j < frame.node_count(); ++j) {
    samples.push_back(add(dual.sample(j), scale(1.0 / c, correction_field.value(j))));
  }
  return Frame(VectorField(frame.space(), std::move(samples)));
}

bool is_exact(const Frame& frame, double tol) {
  if (frame.space().kind() != MeasureSpace::Kind::Atomic) {
    throw Error(ErrorKind::InvalidArgument,
                "exactness is only decidable on atomic spaces");
  }
  if (!is_frame(frame, tol)) {
    throw Error(ErrorKind::NotAFrame, "exactness test requires a frame");
  }
  for (std::size_t j = 0; j < frame.node_count(); ++j) {
    if (frame.node_count() == 1) {
      // Removing the only atom leaves the empty map, which is not a frame.
      continue;
    }
    Frame restricted(restrict_field(frame.field(), {j}));
    if (is_frame(restricted, tol)) return false;
  }
  return true;
}

ModuleOperator riesz_link_operator(const Frame& f_frame, const Frame& g_frame, double tol) {
  require_same_space(f_frame, g_frame);
  if (!is_riesz(f_frame, tol).riesz || !is_riesz(g_frame, tol).riesz) {
    throw Error(ErrorKind::NotRiesz, "link operator requires two Riesz bases");
  }
  return op_invert(cross_frame_operator(g_frame, f_frame));
}

FrameDiagnostics diagnose(const Frame& frame, double tol) {
  FrameDiagnostics d;
  FrameSpectrum s = frame_operator_spectrum(frame);
  const double lam_min = s.min_eigenvalue();
  const double lam_max = s.max_eigenvalue();
  d.bounds = FrameBounds{clamp0(lam_min), clamp0(lam_max)};
  d.flags.bessel = std::isfinite(lam_max);
  const double frame_threshold = tol * (1.0 + lam_max);
  d.flags.frame = lam_min > frame_threshold;
  d.flags.tight =
      d.flags.frame && std::abs(d.bounds.upper - d.bounds.lower) <= tol * (1.0 + d.bounds.upper);
  d.flags.mu_complete = lam_min > frame_threshold;

  GramSpectrum gs = gram_spectrum(frame);
  const double gram_min = gs.min_eigenvalue();
  const double gram_max = gs.max_eigenvalue();
  d.flags.l2_independent = gram_min > tol * (1.0 + gram_max);
  d.flags.riesz = d.flags.mu_complete && d.flags.l2_independent;
  if (d.flags.riesz) {
    d.riesz_bounds = RieszBounds{clamp0(gram_min), clamp0(gram_max)};
  }

  if (!d.flags.frame) {
    d.notes.push_back("not a frame: dual, Riesz-type, and exactness diagnostics skipped");
    return d;
  }

  try {
    d.flags.riesz_type = is_riesz_type(frame, tol);
  } catch (const Error&) {
    d.flags.riesz_type = false;
  }
  if (d.flags.riesz_type != d.flags.riesz) {
    d.notes.push_back("cross-check: riesz and riesz-type disagree (spectral decision boundary)");
  }
  if (!d.flags.riesz_type) {
    d.notes.push_back("dual is not unique: a non-canonical dual witness is available");
  }

  try {
    Frame dual = canonical_dual(frame);
    ModuleOperator residual_op =
        op_sub(cross_frame_operator(frame, dual),
               ModuleOperator::identity(frame.shape(), frame.rank()));
    d.reconstruction_residual = op_norm(residual_op);
  } catch (const Error& e) {
    d.notes.push_back(strfmt("canonical dual unavailable: %s", e.what()));
  }

  if (frame.space().kind() == MeasureSpace::Kind::Atomic) {
    d.flags.exact = is_exact(frame, tol);
    if (d.flags.riesz && !d.flags.exact) {
      d.notes.push_back("cross-check: riesz frame failed exactness");
    }
  } else {
    d.flags.exact = false;
    d.notes.push_back("exactness: not decidable under quadrature");
  }
  return d;
}

}  // namespace csf
