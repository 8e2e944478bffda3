#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "cstarframes/verify.hpp"

using namespace csf;

TEST_CASE("the invariant suite passes on seeded instances") {
  VerifyOptions opts;
  opts.seed = 7;
  opts.cases = 25;
  VerifySummary summary = verify_theorems(opts);
  CHECK(summary.cases == 25);
  CHECK(summary.checks_run == 25 * 11);
  for (const VerifyViolation& v : summary.violations) {
    CAPTURE(v.check);
    CAPTURE(v.detail);
  }
  CHECK(summary.violations.empty());
}

TEST_CASE("zero cases is vacuously clean") {
  VerifyOptions opts;
  opts.cases = 0;
  VerifySummary summary = verify_theorems(opts);
  CHECK(summary.checks_run == 0);
  CHECK(summary.violations.empty());
  CHECK(summary.to_string().find("violations=0") != std::string::npos);
}

TEST_CASE("summaries are deterministic for a fixed seed") {
  VerifyOptions opts;
  opts.seed = 99;
  opts.cases = 10;
  CHECK(verify_theorems(opts).to_string() == verify_theorems(opts).to_string());
}

TEST_CASE("violation dumps are replayable specs") {
  // Manufacture a summary with one synthetic violation and dump it.
  VerifySummary summary;
  summary.cases = 1;
  summary.checks_run = 1;
  SeededRng rng(3);
  bool rc = false;
  Frame frame = draw_verification_instance(rng, kDefaultTol, rc);
  summary.violations.push_back(VerifyViolation{0, "synthetic", "detail", spec_from_frame(frame)});

  std::string dir = (std::filesystem::temp_directory_path() / "csf_dump_test").string();
  std::filesystem::remove_all(dir);
  std::vector<std::string> paths = dump_violations(summary, dir);
  REQUIRE(paths.size() == 1);
  Frame replay = instantiate(load_frame_spec_file(paths[0]));
  CHECK(replay.node_count() == frame.node_count());
  CHECK(replay.rank() == frame.rank());
  for (std::size_t j = 0; j < frame.node_count(); ++j) {
    CHECK(approx_equal(replay.sample(j), frame.sample(j), 0.0));
  }
  std::filesystem::remove_all(dir);
}
