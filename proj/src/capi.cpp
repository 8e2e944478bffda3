#include "cstarframes/capi.h"

#include <chrono>
#include <cstring>
#include <new>
#include <string>

#include "cstarframes/report.hpp"
#include "cstarframes/spec_io.hpp"
#include "cstarframes/generate.hpp"
#include "cstarframes/verify.hpp"
#include "cstarframes/version.hpp"

struct csf_spec {
  csf::FrameSpec spec;
};

struct csf_report {
  csf::ReportEnvelope envelope;
};

namespace {

thread_local std::string g_last_error;

csf_status status_of(csf::ErrorKind kind) {
  switch (kind) {
    case csf::ErrorKind::InvalidArgument: return CSF_ERROR_INVALID_ARGUMENT;
    case csf::ErrorKind::ShapeMismatch: return CSF_ERROR_SHAPE_MISMATCH;
    case csf::ErrorKind::Singular: return CSF_ERROR_SINGULAR;
    case csf::ErrorKind::NotAFrame: return CSF_ERROR_NOT_A_FRAME;
    case csf::ErrorKind::NotRiesz: return CSF_ERROR_NOT_RIESZ;
    case csf::ErrorKind::Parse: return CSF_ERROR_PARSE;
    case csf::ErrorKind::Io: return CSF_ERROR_IO;
    case csf::ErrorKind::Infeasible: return CSF_ERROR_INFEASIBLE;
  }
  return CSF_ERROR_INTERNAL;
}

template <typename Fn>
csf_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return CSF_OK;
  } catch (const csf::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CSF_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return CSF_ERROR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* csf_version(void) { return csf::kToolVersion; }

const char* csf_last_error(void) { return g_last_error.c_str(); }

void csf_string_free(char* s) { delete[] s; }

csf_status csf_spec_parse_text(const char* text, csf_spec** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return CSF_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out = new csf_spec{csf::parse_frame_spec(text)}; });
}

csf_status csf_spec_parse_file(const char* path, csf_spec** out) {
  if (!path || !out) {
    g_last_error = "null argument";
    return CSF_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out = new csf_spec{csf::load_frame_spec_file(path)}; });
}

csf_status csf_spec_serialize(const csf_spec* spec, char** out) {
  if (!spec || !out) {
    g_last_error = "null argument";
    return CSF_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] { *out = copy_string(csf::serialize_frame_spec(spec->spec)); });
}

void csf_spec_free(csf_spec* spec) { delete spec; }

void csf_analyze_options_init(csf_analyze_options* options) {
  if (!options) return;
  options->tol = 0.0;
  options->quadrature_nodes = 0;
}

csf_status csf_analyze(const csf_spec* spec, const csf_analyze_options* options,
                       csf_report** out) {
  if (!spec || !out) {
    g_last_error = "null argument";
    return CSF_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    csf_analyze_options local;
    csf_analyze_options_init(&local);
    if (options) local = *options;

    std::optional<std::size_t> quad_override;
    if (local.quadrature_nodes > 0) {
      quad_override = static_cast<std::size_t>(local.quadrature_nodes);
    }
    double tol = local.tol > 0.0 ? local.tol : spec->spec.default_tol();

    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    csf::Frame frame = csf::instantiate(spec->spec, quad_override);
    auto t1 = clock::now();
    csf::FrameDiagnostics diagnostics = csf::diagnose(frame, tol);
    auto t2 = clock::now();

    csf::ReportEnvelope env;
    env.spec_digest = csf::spec_digest(spec->spec, quad_override);
    env.tool_version = csf::kToolVersion;
    env.tolerances = spec->spec.tolerances;
    env.tolerances["default"] = tol;
    if (quad_override && spec->spec.measure.kind == csf::MeasureSpace::Kind::Interval) {
      diagnostics.notes.push_back(
          csf::strfmt("quadrature override: m=%zu", *quad_override));
    }
    env.diagnostics = std::move(diagnostics);
    env.timings_ms["instantiate"] =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    env.timings_ms["diagnose"] =
        std::chrono::duration<double, std::milli>(t2 - t1).count();
    *out = new csf_report{std::move(env)};
  });
}

int csf_report_is_frame(const csf_report* report) {
  return report && report->envelope.diagnostics.flags.frame ? 1 : 0;
}

csf_status csf_report_render(const csf_report* report, csf_render_format format, char** out) {
  if (!report || !out) {
    g_last_error = "null argument";
    return CSF_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    std::string text = format == CSF_RENDER_STRUCTURED
                           ? csf::render_structured(report->envelope)
                           : csf::render_text(report->envelope);
    *out = copy_string(text);
  });
}

void csf_report_free(csf_report* report) { delete report; }

csf_status csf_generate_spec(const csf_generate_options* options, char** out_text) {
  if (!options || !out_text) {
    g_last_error = "null argument";
    return CSF_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    csf::GenerateOptions opts;
    opts.seed = options->seed;
    opts.atoms = options->atoms;
    opts.rank = options->rank;
    opts.blocks.clear();
    for (size_t i = 0; i < options->block_count; ++i) {
      opts.blocks.push_back(options->blocks[i]);
    }
    if (opts.blocks.empty()) {
      throw csf::Error(csf::ErrorKind::InvalidArgument, "at least one block dimension required");
    }
    opts.riesz = options->riesz != 0;
    *out_text = copy_string(csf::serialize_frame_spec(csf::generate_frame_spec(opts)));
  });
}

csf_status csf_verify_theorems(const csf_verify_options* options, char** out_summary,
                               uint32_t* out_violations) {
  if (!options || !out_summary || !out_violations) {
    g_last_error = "null argument";
    return CSF_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    csf::VerifyOptions opts;
    opts.seed = options->seed;
    opts.cases = options->cases;
    if (options->tol > 0.0) opts.tol = options->tol;
    csf::VerifySummary summary = csf::verify_theorems(opts);
    if (options->dump_dir && !summary.violations.empty()) {
      csf::dump_violations(summary, options->dump_dir);
    }
    *out_summary = copy_string(summary.to_string());
    *out_violations = static_cast<uint32_t>(summary.violations.size());
  });
}

}  // extern "C"
