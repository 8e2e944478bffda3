#include "cstarframes/verify.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace csf {

namespace {

struct CaseConfig {
  std::vector<std::size_t> blocks;
  std::size_t rank;
};

const std::vector<CaseConfig>& case_configs() {
  static const std::vector<CaseConfig> configs = {
      {{1}, 1}, {{1}, 2}, {{1}, 3}, {{2}, 1}, {{2}, 2},  {{1, 1}, 1},
      {{1, 1}, 2}, {{1, 1}, 3}, {{2, 1}, 1}, {{1, 1, 1}, 2},
  };
  return configs;
}

}  // namespace

Frame draw_verification_instance(SeededRng& rng, double tol, bool& riesz_candidate) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    const CaseConfig& cfg = case_configs()[rng.index(case_configs().size())];
    AlgebraShape shape(cfg.blocks);
    bool want_riesz = rng.unit() < 0.5;
    std::size_t atoms = want_riesz ? cfg.rank : cfg.rank + 1 + rng.index(2);
    MeasureSpace space = random_atomic_space(rng, atoms);
    Frame frame = random_frame_on(rng, space, shape, cfg.rank);

    FrameSpectrum fs = frame_operator_spectrum(frame);
    const double frame_threshold = tol * (1.0 + fs.max_eigenvalue());
    if (!(fs.min_eigenvalue() > 10.0 * frame_threshold)) continue;

    GramSpectrum gs = gram_spectrum(frame);
    const double gram_threshold = tol * (1.0 + gs.max_eigenvalue());
    const double gmin = gs.min_eigenvalue();
    if (gmin >= gram_threshold / 10.0 && gmin <= 10.0 * gram_threshold) continue;

    riesz_candidate = gmin > gram_threshold;
    return frame;
  }
  throw Error(ErrorKind::InvalidArgument,
              "verify: could not draw a non-boundary instance in 500 attempts");
}

namespace {

AlgebraField random_field(SeededRng& rng, const MeasureSpace& space, const AlgebraShape& shape) {
  std::vector<AlgebraElement> values;
  values.reserve(space.size());
  for (std::size_t j = 0; j < space.size(); ++j) values.push_back(random_element(rng, shape));
  return AlgebraField(space, std::move(values));
}

double field_norm(const AlgebraField& f) { return l2_norm(f); }

AlgebraField field_sub(const AlgebraField& a, const AlgebraField& b) {
  std::vector<AlgebraElement> values;
  values.reserve(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) values.push_back(sub(a.value(j), b.value(j)));
  return AlgebraField(a.space(), std::move(values));
}

using CheckFn = std::optional<std::string> (*)(const Frame&, SeededRng&, double);

std::optional<std::string> check_factorization_s(const Frame& f, SeededRng& rng, double) {
  ModuleVector v = random_vector(rng, f.shape(), f.rank());
  ModuleVector lhs = op_apply(frame_operator(f), v);
  ModuleVector rhs = synthesis(f, analysis(f, v));
  double err = vec_norm(sub(lhs, rhs));
  if (err > 1e-10 * (1.0 + vec_norm(lhs))) {
    return strfmt("S f vs T T* f differ by %.3e", err);
  }
  return std::nullopt;
}

std::optional<std::string> check_factorization_v(const Frame& f, SeededRng& rng, double) {
  AlgebraField phi = random_field(rng, f.space(), f.shape());
  AlgebraField lhs = gram_operator(f).apply(phi);
  AlgebraField rhs = analysis(f, synthesis(f, phi));
  double err = field_norm(field_sub(lhs, rhs));
  if (err > 1e-10 * (1.0 + field_norm(lhs))) {
    return strfmt("V phi vs T* T phi differ by %.3e", err);
  }
  return std::nullopt;
}

std::optional<std::string> check_frame_inequality(const Frame& f, SeededRng& rng, double tol) {
  FrameBounds b = frame_bounds(f);
  ModuleVector v = random_vector(rng, f.shape(), f.rank());
  const std::vector<double>& w = f.space().weights();
  AlgebraElement mid =
      pairwise_sum(f.node_count(), AlgebraElement::zero(f.shape()), [&](std::size_t j) {
        AlgebraElement c = inner(v, f.sample(j));
        return scale(w[j], mul(c, star(c)));
      });
  AlgebraElement gram_v = inner(v, v);
  if (!leq(scale(b.lower, gram_v), mid, tol)) {
    return "lower frame inequality violated";
  }
  if (!leq(mid, scale(b.upper, gram_v), tol)) {
    return "upper frame inequality violated";
  }
  return std::nullopt;
}

std::optional<std::string> check_operator_sandwich(const Frame& f, SeededRng&, double tol) {
  ModuleOperator s = frame_operator(f);
  AlgebraElement s_alg = operator_as_algebra_element(s);
  const AlgebraShape op_shape = s_alg.shape();
  double s_inv_norm = op_norm(op_invert(s));
  double t_norm = synthesis_norm(f);
  if (!leq(AlgebraElement::scalar(op_shape, 1.0 / s_inv_norm), s_alg, tol)) {
    return "||(TT*)^{-1}||^{-1} <= TT* violated";
  }
  if (!leq(s_alg, AlgebraElement::scalar(op_shape, t_norm * t_norm), tol)) {
    return "TT* <= ||T||^2 violated";
  }
  return std::nullopt;
}

std::optional<std::string> check_kernel_range_split(const Frame& f, SeededRng& rng, double) {
  AlgebraField phi = random_field(rng, f.space(), f.shape());
  ModuleOperator s_inv = op_invert(frame_operator(f));
  AlgebraField range_part = analysis(f, op_apply(s_inv, synthesis(f, phi)));
  AlgebraField kernel_part = field_sub(phi, range_part);
  double scale_ref = 1.0 + field_norm(phi);
  double synth_err = vec_norm(synthesis(f, kernel_part));
  if (synth_err > 1e-9 * scale_ref) {
    return strfmt("kernel component not in ker(T): %.3e", synth_err);
  }
  double cross = norm(l2_inner(kernel_part, range_part));
  if (cross > 1e-9 * scale_ref * scale_ref) {
    return strfmt("kernel and range parts not orthogonal: %.3e", cross);
  }
  return std::nullopt;
}

std::optional<std::string> check_equivalence_chain(const Frame& f, SeededRng&, double tol) {
  bool b1 = is_riesz(f, tol).riesz;
  bool b2 = mu_complete(f, tol) && l2_independent(f, tol);
  bool b3 = is_riesz_type(f, tol);
  bool b4 = !non_canonical_dual(f, tol).has_value();
  if (b1 != b2 || b1 != b3 || b1 != b4) {
    return strfmt("riesz=%d complete-and-independent=%d riesz_type=%d no-second-dual=%d",
                  int(b1), int(b2), int(b3), int(b4));
  }
  return std::nullopt;
}

std::optional<std::string> check_riesz_exact(const Frame& f, SeededRng&, double tol) {
  if (!is_riesz(f, tol).riesz) return std::nullopt;
  if (!is_exact(f, tol)) return "riesz frame is not exact";
  return std::nullopt;
}

std::optional<std::string> check_non_canonical_dual(const Frame& f, SeededRng&, double tol) {
  std::optional<Frame> g = non_canonical_dual(f, tol);
  if (!g) return std::nullopt;
  if (!is_dual(f, *g, 1e-9)) return "constructed non-canonical dual fails is_dual";
  Frame canonical = canonical_dual(f);
  std::vector<ModuleVector> diff;
  diff.reserve(f.node_count());
  for (std::size_t j = 0; j < f.node_count(); ++j) {
    diff.push_back(sub(g->sample(j), canonical.sample(j)));
  }
  double dist = sampled_norm(VectorField(f.space(), std::move(diff)));
  if (dist < 1e-3) return strfmt("witness too close to canonical dual: %.3e", dist);
  return std::nullopt;
}

std::optional<std::string> check_dual_symmetry(const Frame& f, SeededRng&, double tol) {
  Frame canonical = canonical_dual(f);
  if (is_dual(f, canonical, tol) != is_dual(canonical, f, tol)) {
    return "is_dual not symmetric on the canonical pair";
  }
  if (!is_dual(f, canonical, tol)) {
    return "canonical dual fails is_dual";
  }
  std::vector<ModuleVector> doubled;
  doubled.reserve(f.node_count());
  for (std::size_t j = 0; j < f.node_count(); ++j) {
    doubled.push_back(scale(2.0, canonical.sample(j)));
  }
  Frame wrong(VectorField(f.space(), std::move(doubled)));
  if (is_dual(f, wrong, tol) != is_dual(wrong, f, tol)) {
    return "is_dual not symmetric on a non-dual pair";
  }
  return std::nullopt;
}

std::optional<std::string> check_reconstruction(const Frame& f, SeededRng& rng, double) {
  Frame canonical = canonical_dual(f);
  ModuleVector v = random_vector(rng, f.shape(), f.rank());
  double err = vec_norm(sub(v, reconstruct(f, canonical, v)));
  if (err > 1e-8 * (1.0 + vec_norm(v))) {
    return strfmt("reconstruction residual %.3e", err);
  }
  return std::nullopt;
}

std::optional<std::string> check_canonical_dual_bounds(const Frame& f, SeededRng&, double) {
  FrameBounds b = frame_bounds(f);
  FrameBounds dual_b = frame_bounds(canonical_dual(f));
  if (std::abs(dual_b.lower - 1.0 / b.upper) > 1e-8 * (1.0 / b.upper)) {
    return strfmt("dual lower bound %.12g vs 1/B %.12g", dual_b.lower, 1.0 / b.upper);
  }
  if (std::abs(dual_b.upper - 1.0 / b.lower) > 1e-8 * (1.0 / b.lower)) {
    return strfmt("dual upper bound %.12g vs 1/A %.12g", dual_b.upper, 1.0 / b.lower);
  }
  return std::nullopt;
}

struct NamedCheck {
  const char* name;
  CheckFn fn;
};

const NamedCheck kChecks[] = {
    {"factorization S = T T*", &check_factorization_s},
    {"factorization V = T* T", &check_factorization_v},
    {"frame inequality", &check_frame_inequality},
    {"operator sandwich", &check_operator_sandwich},
    {"kernel/range decomposition", &check_kernel_range_split},
    {"equivalence chain", &check_equivalence_chain},
    {"riesz implies exact", &check_riesz_exact},
    {"non-canonical dual validity", &check_non_canonical_dual},
    {"dual symmetry", &check_dual_symmetry},
    {"reconstruction", &check_reconstruction},
    {"canonical dual bounds", &check_canonical_dual_bounds},
};

}  // namespace

VerifySummary verify_theorems(const VerifyOptions& options) {
  VerifySummary summary;
  summary.cases = options.cases;
  SeededRng rng(options.seed);
  for (std::size_t idx = 0; idx < options.cases; ++idx) {
    bool riesz_candidate = false;
    Frame frame = draw_verification_instance(rng, options.tol, riesz_candidate);
    for (const NamedCheck& check : kChecks) {
      ++summary.checks_run;
      std::optional<std::string> failure;
      try {
        failure = check.fn(frame, rng, options.tol);
      } catch (const Error& e) {
        failure = strfmt("unexpected error: %s", e.what());
      }
      if (failure) {
        summary.violations.push_back(
            VerifyViolation{idx, check.name, *failure, spec_from_frame(frame)});
      }
    }
  }
  return summary;
}

std::string VerifySummary::to_string() const {
  std::ostringstream os;
  os << "verify-theorems: cases=" << cases << " checks=" << checks_run
     << " violations=" << violations.size() << "\n";
  for (const VerifyViolation& v : violations) {
    os << "violation case " << v.case_index << " [" << v.check << "]: " << v.detail << "\n";
  }
  return os.str();
}

std::vector<std::string> dump_violations(const VerifySummary& summary, const std::string& dir) {
  std::vector<std::string> paths;
  if (summary.violations.empty()) return paths;
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < summary.violations.size(); ++i) {
    std::string path = strfmt("%s/violation-case-%03zu.spec", dir.c_str(),
                              summary.violations[i].case_index);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw Error(ErrorKind::Io, strfmt("cannot write violation dump '%s'", path.c_str()));
    }
    out << serialize_frame_spec(summary.violations[i].spec);
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace csf
