#pragma once

#include <map>
#include <string>

#include "cstarframes/frame_ops.hpp"

namespace csf {

/// Full analysis report with provenance. The digest-stable body covers
/// everything except timings, so identical inputs and tool version produce
/// byte-identical bodies.
struct ReportEnvelope {
  std::string spec_digest;
  std::string tool_version;
  std::map<std::string, double> tolerances;
  FrameDiagnostics diagnostics;
  std::map<std::string, double> timings_ms;
};

/// Fixed-order, fixed-precision (12 fractional digits) human-readable table.
/// Riesz-related rows are suppressed when the map is not a frame.
std::string render_text(const ReportEnvelope& env);

/// Canonical JSON: sorted keys, no insignificant whitespace, lossless
/// round-trip through parse_structured. Timings sit outside the body;
/// body_digest is included.
std::string render_structured(const ReportEnvelope& env);

ReportEnvelope parse_structured(const std::string& bytes);

/// Digest of the canonical body section (timings excluded).
std::string body_digest(const ReportEnvelope& env);

bool envelope_equal(const ReportEnvelope& a, const ReportEnvelope& b);

}  // namespace csf
