// End-to-end checks of the csframe binary: exit codes, report output,
// generation determinism. The binary path is injected by the build.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CSF_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf;
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.output.append(buf.data(), n);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string sample(const char* name) {
  return std::string(CSF_SAMPLES_DIR) + "/" + name;
}

std::string write_temp_spec(const char* name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << body;
  return path.string();
}

}  // namespace

TEST_CASE("analyze: tight interval example exits 0 and reports a tight frame") {
  RunResult r = run("analyze " + sample("tight_interval_frame.spec"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("tight: true") != std::string::npos);
  CHECK(r.output.find("A=1.000000000000") != std::string::npos);
}

TEST_CASE("analyze: structured format emits canonical json") {
  RunResult r = run("analyze --format structured " + sample("tight_interval_frame.spec"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"body_digest\":\"fnv1a:") != std::string::npos);
}

TEST_CASE("analyze: non-frame input exits 2") {
  std::string path = write_temp_spec("csf_zero.spec", R"({
    "algebra": {"blocks": [1]},
    "rank": 1,
    "measure": {"kind": "atomic", "nodes": [0.0], "weights": [1.0]},
    "frame": {"kind": "explicit", "samples": [[[[[0.0, 0.0]]]]]}
  })");
  RunResult r = run("analyze " + path);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("frame: false") != std::string::npos);
}

TEST_CASE("analyze: malformed input exits 1 with diagnostics") {
  std::string path = write_temp_spec("csf_bad.spec", R"({
    "algebra": {"blocks": [1]},
    "rank": 1,
    "measure": {"kind": "atomic", "nodes": [0.0, 1.0], "weights": [1.0, 1.0]},
    "frame": {"kind": "explicit", "samples": [[[[[0.0, 0.0]]]]]}
  })");
  RunResult r = run("analyze " + path);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("samples") != std::string::npos);

  RunResult missing = run("analyze /no/such/file.spec");
  CHECK(missing.exit_code == 1);

  std::string bad_json = write_temp_spec("csf_syntax.spec", "{ not json");
  RunResult syntax = run("analyze " + bad_json);
  CHECK(syntax.exit_code == 1);
  CHECK(syntax.output.find("line") != std::string::npos);
}

TEST_CASE("analyze: quadrature override is honored") {
  RunResult r = run("analyze --quadrature-nodes 32 " + sample("tight_interval_frame.spec"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("quadrature override: m=32") != std::string::npos);
  CHECK(r.output.find("A=1.000000000000") != std::string::npos);
}

TEST_CASE("environment variable overrides the default tolerance") {
  std::string cmd = "CSTARFRAMES_TOL=1e-6 " + std::string(CSF_CLI_PATH) + " analyze " +
                    sample("tight_interval_frame.spec") + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf;
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
  pclose(pipe);
  CHECK(output.find("tolerance default: 0.000001000000") != std::string::npos);
}

TEST_CASE("generate: byte-identical for a fixed seed, exit 1 on bad counts") {
  RunResult a = run("generate --seed 42 --atoms 3 --rank 2 --blocks 1,1");
  RunResult b = run("generate --seed 42 --atoms 3 --rank 2 --blocks 1,1");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  RunResult c = run("generate --seed 43 --atoms 3 --rank 2 --blocks 1,1");
  CHECK(c.output != a.output);

  RunResult bad = run("generate --seed 1 --atoms 0 --rank 1 --blocks 1");
  CHECK(bad.exit_code == 1);

  RunResult infeasible = run("generate --seed 1 --atoms 3 --rank 2 --blocks 1 --riesz");
  CHECK(infeasible.exit_code == 1);
  CHECK(infeasible.output.find("infeasible") != std::string::npos);
}

TEST_CASE("generate --riesz output analyzes as riesz") {
  RunResult gen = run("generate --seed 5 --atoms 2 --rank 2 --blocks 1 --riesz");
  REQUIRE(gen.exit_code == 0);
  std::string path = write_temp_spec("csf_riesz.spec", gen.output);
  RunResult ana = run("analyze " + path);
  CHECK(ana.exit_code == 0);
  CHECK(ana.output.find("riesz: true") != std::string::npos);
  CHECK(ana.output.find("exact: true") != std::string::npos);
}

TEST_CASE("verify-theorems: clean run exits 0, zero cases vacuous") {
  RunResult r = run("verify-theorems --cases 100 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("violations=0") != std::string::npos);

  RunResult vacuous = run("verify-theorems --cases 0 --seed 7");
  CHECK(vacuous.exit_code == 0);
}
