#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "cstarframes/report.hpp"
#include "cstarframes/spec_io.hpp"
#include "cstarframes/version.hpp"
#include "support.hpp"

using namespace csf;
using namespace csf::test;

namespace {

ReportEnvelope envelope_for(const Frame& frame) {
  ReportEnvelope env;
  env.spec_digest = "fnv1a:0000000000000000";
  env.tool_version = kToolVersion;
  env.tolerances = {{"default", kDefaultTol}};
  env.diagnostics = diagnose(frame);
  env.timings_ms = {{"diagnose", 1.25}};
  return env;
}

Frame tight_interval_frame() {
  FrameSpec spec = parse_frame_spec(R"({
    "algebra": {"blocks": [1, 1]},
    "rank": 1,
    "measure": {"kind": "interval", "a": 0.0, "b": 1.0, "rule": "gauss-legendre", "m": 16},
    "frame": {"kind": "polynomial", "coefficients": [
      [[[[0.0, 0.0]], [[0.0, 0.0]]]],
      [[[[1.7320508075688772, 0.0]], [[1.7320508075688772, 0.0]]]]
    ]}
  })");
  return instantiate(spec);
}

}  // namespace

TEST_CASE("text rendering of the worked example") {
  std::string text = render_text(envelope_for(tight_interval_frame()));
  CHECK(text.find("tight: true") != std::string::npos);
  CHECK(text.find("A=1.000000000000") != std::string::npos);
  CHECK(text.find("B=1.000000000000") != std::string::npos);
}

TEST_CASE("text rendering suppresses riesz rows for non-frames") {
  MeasureSpace one_atom = MeasureSpace::atomic({0.0}, {1.0});
  Frame zero(VectorField(one_atom, {ModuleVector::zero(scalar_shape(), 1)}));
  std::string text = render_text(envelope_for(zero));
  CHECK(text.find("frame: false") != std::string::npos);
  CHECK(text.find("riesz:") == std::string::npos);
  CHECK(text.find("exact:") == std::string::npos);
}

TEST_CASE("text rendering of the overcomplete fixture carries the witness note") {
  std::string text = render_text(envelope_for(scalar_frame({1.0, 1.0}, {1.0, 1.0})));
  CHECK(text.find("riesz: false") != std::string::npos);
  CHECK(text.find("non-canonical dual") != std::string::npos);
}

TEST_CASE("every diagnostics field appears in both renderings") {
  ReportEnvelope env = envelope_for(scalar_frame({1.0}, {1.0}));
  std::string text = render_text(env);
  std::string json = render_structured(env);
  for (const char* field :
       {"bounds", "bessel", "frame", "tight", "mu_complete", "l2_independent",
        "riesz", "riesz_type", "exact", "reconstruction_residual", "notes"}) {
    CAPTURE(field);
    CHECK(text.find(field) != std::string::npos);
    CHECK(json.find(field) != std::string::npos);
  }
  CHECK(json.find("riesz_bounds") != std::string::npos);
}

TEST_CASE("structured rendering round-trips") {
  ReportEnvelope env = envelope_for(tight_interval_frame());
  std::string bytes = render_structured(env);
  ReportEnvelope back = parse_structured(bytes);
  CHECK(envelope_equal(env, back));
  CHECK(render_structured(back) == bytes);
}

TEST_CASE("structured rendering round-trips absent optionals and empty notes") {
  ReportEnvelope env = envelope_for(scalar_frame({1.0}, {1.0}));
  env.diagnostics.notes.clear();
  std::string bytes = render_structured(env);
  CHECK(bytes.find("\"notes\":[]") != std::string::npos);
  ReportEnvelope back = parse_structured(bytes);
  CHECK(envelope_equal(env, back));

  MeasureSpace one_atom = MeasureSpace::atomic({0.0}, {1.0});
  Frame zero(VectorField(one_atom, {ModuleVector::zero(scalar_shape(), 1)}));
  ReportEnvelope nf = envelope_for(zero);
  ReportEnvelope nf_back = parse_structured(render_structured(nf));
  CHECK_FALSE(nf_back.diagnostics.reconstruction_residual.has_value());
  CHECK_FALSE(nf_back.diagnostics.riesz_bounds.has_value());
  CHECK(envelope_equal(nf, nf_back));
}

TEST_CASE("digest-stable body across repeated rendering, timings excluded") {
  ReportEnvelope env = envelope_for(tight_interval_frame());
  std::string d1 = body_digest(env);
  env.timings_ms["diagnose"] = 99.0;
  std::string d2 = body_digest(env);
  CHECK(d1 == d2);

  ReportEnvelope again = envelope_for(tight_interval_frame());
  CHECK(body_digest(again) == d1);
  CHECK(render_structured(env) != render_structured(again));  // timings differ
}

TEST_CASE("golden text report for a fully deterministic fixture") {
  MeasureSpace space = MeasureSpace::atomic({0.0, 1.0}, {1.0, 1.0});
  Frame ortho(VectorField(space, {ModuleVector::basis(scalar_shape(), 2, 0),
                                  ModuleVector::basis(scalar_shape(), 2, 1)}));
  ReportEnvelope env;
  env.spec_digest = "fnv1a:02b22487240c0b12";
  env.tool_version = "0.1.0";
  env.tolerances = {{"default", 1e-9}};
  env.diagnostics = diagnose(ortho);
  const char* expected =
      "cstarframes frame report\n"
      "tool_version: 0.1.0\n"
      "spec_digest: fnv1a:02b22487240c0b12\n"
      "tolerance default: 0.000000001000\n"
      "bounds: A=1.000000000000 B=1.000000000000\n"
      "bessel: true\n"
      "frame: true\n"
      "tight: true\n"
      "mu_complete: true\n"
      "l2_independent: true\n"
      "riesz: true\n"
      "riesz_type: true\n"
      "exact: true\n"
      "riesz_bounds: A_r=1.000000000000 B_r=1.000000000000 "
      "sqrt_convention: A=1.000000000000 B=1.000000000000\n"
      "reconstruction_residual: 0.000000000000\n"
      "notes:\n";
  CHECK(render_text(env) == expected);
  CHECK(body_digest(env) == "fnv1a:56379e11aa29191b");
}

TEST_CASE("tampered structured reports are rejected") {
  ReportEnvelope env = envelope_for(scalar_frame({1.0}, {1.0}));
  std::string bytes = render_structured(env);
  std::string tampered = bytes;
  const std::string needle = "\"frame\":true";
  std::size_t pos = tampered.find(needle);
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, needle.size(), "\"frame\":false");
  CHECK_THROWS_AS(parse_structured(tampered), Error);
}
