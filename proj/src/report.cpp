#include "cstarframes/report.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace csf {

namespace {

using nlohmann::json;

std::string fixed12(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  return strfmt("%.12f", v);
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

json body_to_json(const ReportEnvelope& env) {
  const FrameDiagnostics& d = env.diagnostics;
  json body;
  body["spec_digest"] = env.spec_digest;
  body["tool_version"] = env.tool_version;
  body["tolerances"] = env.tolerances;
  json diag;
  diag["bounds"] = {{"lower", d.bounds.lower}, {"upper", d.bounds.upper}};
  diag["flags"] = {{"bessel", d.flags.bessel},
                   {"frame", d.flags.frame},
                   {"tight", d.flags.tight},
                   {"mu_complete", d.flags.mu_complete},
                   {"l2_independent", d.flags.l2_independent},
                   {"riesz", d.flags.riesz},
                   {"riesz_type", d.flags.riesz_type},
                   {"exact", d.flags.exact}};
  if (d.riesz_bounds) {
    diag["riesz_bounds"] = {{"lower", d.riesz_bounds->lower},
                            {"upper", d.riesz_bounds->upper}};
  } else {
    diag["riesz_bounds"] = nullptr;
  }
  if (d.reconstruction_residual) {
    diag["reconstruction_residual"] = *d.reconstruction_residual;
  } else {
    diag["reconstruction_residual"] = nullptr;
  }
  diag["notes"] = d.notes;
  body["diagnostics"] = std::move(diag);
  return body;
}

}  // namespace

std::string body_digest(const ReportEnvelope& env) {
  return fnv1a64_hex(body_to_json(env).dump());
}

std::string render_text(const ReportEnvelope& env) {
  const FrameDiagnostics& d = env.diagnostics;
  std::ostringstream os;
  os << "cstarframes frame report\n";
  os << "tool_version: " << env.tool_version << "\n";
  os << "spec_digest: " << env.spec_digest << "\n";
  for (const auto& [name, value] : env.tolerances) {
    os << "tolerance " << name << ": " << fixed12(value) << "\n";
  }
  os << "bounds: A=" << fixed12(d.bounds.lower) << " B=" << fixed12(d.bounds.upper) << "\n";
  os << "bessel: " << bool_str(d.flags.bessel) << "\n";
  os << "frame: " << bool_str(d.flags.frame) << "\n";
  os << "tight: " << bool_str(d.flags.tight) << "\n";
  os << "mu_complete: " << bool_str(d.flags.mu_complete) << "\n";
  os << "l2_independent: " << bool_str(d.flags.l2_independent) << "\n";
  if (d.flags.frame) {
    os << "riesz: " << bool_str(d.flags.riesz) << "\n";
    os << "riesz_type: " << bool_str(d.flags.riesz_type) << "\n";
    os << "exact: " << bool_str(d.flags.exact) << "\n";
    if (d.riesz_bounds) {
      os << "riesz_bounds: A_r=" << fixed12(d.riesz_bounds->lower)
         << " B_r=" << fixed12(d.riesz_bounds->upper)
         << " sqrt_convention: A=" << fixed12(std::sqrt(d.riesz_bounds->lower))
         << " B=" << fixed12(std::sqrt(d.riesz_bounds->upper)) << "\n";
    }
    if (d.reconstruction_residual) {
      os << "reconstruction_residual: " << fixed12(*d.reconstruction_residual) << "\n";
    }
  }
  os << "notes:\n";
  for (const std::string& note : d.notes) {
    os << "- " << note << "\n";
  }
  if (!env.timings_ms.empty()) {
    os << "timings_ms:";
    for (const auto& [stage, ms] : env.timings_ms) {
      os << " " << stage << "=" << strfmt("%.3f", ms);
    }
    os << "\n";
  }
  return os.str();
}

std::string render_structured(const ReportEnvelope& env) {
  json root;
  root["body"] = body_to_json(env);
  root["body_digest"] = body_digest(env);
  root["timings_ms"] = env.timings_ms;
  return root.dump() + "\n";
}

ReportEnvelope parse_structured(const std::string& bytes) {
  json root;
  try {
    root = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, strfmt("structured report: %s", e.what()));
  }
  try {
    const json& body = root.at("body");
    ReportEnvelope env;
    env.spec_digest = body.at("spec_digest").get<std::string>();
    env.tool_version = body.at("tool_version").get<std::string>();
    env.tolerances = body.at("tolerances").get<std::map<std::string, double>>();
    const json& diag = body.at("diagnostics");
    env.diagnostics.bounds.lower = diag.at("bounds").at("lower").get<double>();
    env.diagnostics.bounds.upper = diag.at("bounds").at("upper").get<double>();
    const json& flags = diag.at("flags");
    env.diagnostics.flags.bessel = flags.at("bessel").get<bool>();
    env.diagnostics.flags.frame = flags.at("frame").get<bool>();
    env.diagnostics.flags.tight = flags.at("tight").get<bool>();
    env.diagnostics.flags.mu_complete = flags.at("mu_complete").get<bool>();
    env.diagnostics.flags.l2_independent = flags.at("l2_independent").get<bool>();
    env.diagnostics.flags.riesz = flags.at("riesz").get<bool>();
    env.diagnostics.flags.riesz_type = flags.at("riesz_type").get<bool>();
    env.diagnostics.flags.exact = flags.at("exact").get<bool>();
    if (!diag.at("riesz_bounds").is_null()) {
      env.diagnostics.riesz_bounds =
          RieszBounds{diag.at("riesz_bounds").at("lower").get<double>(),
                      diag.at("riesz_bounds").at("upper").get<double>()};
    }
    if (!diag.at("reconstruction_residual").is_null()) {
      env.diagnostics.reconstruction_residual =
          diag.at("reconstruction_residual").get<double>();
    }
    env.diagnostics.notes = diag.at("notes").get<std::vector<std::string>>();
    env.timings_ms = root.at("timings_ms").get<std::map<std::string, double>>();
    const std::string digest = root.at("body_digest").get<std::string>();
    if (digest != body_digest(env)) {
      throw Error(ErrorKind::Parse, "structured report: body digest mismatch");
    }
    return env;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, strfmt("structured report: %s", e.what()));
  }
}

bool envelope_equal(const ReportEnvelope& a, const ReportEnvelope& b) {
  json ja;
  ja["body"] = body_to_json(a);
  ja["timings_ms"] = a.timings_ms;
  json jb;
  jb["body"] = body_to_json(b);
  jb["timings_ms"] = b.timings_ms;
  return ja == jb;
}

}  // namespace csf
