// csframe: analyze frame-spec files, generate seeded random instances, and
// run the theorem verification suite. Exit codes: 0 success (analyze: the
// map is a frame; verify-theorems: no violations), 1 input/usage error,
// 2 negative verdict on well-formed input (analyze: not a frame;
// verify-theorems: violations found).

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cstarframes/capi.h"

namespace {

int fail(csf_status status) {
  std::fprintf(stderr, "csframe: error (%d): %s\n", static_cast<int>(status),
               csf_last_error());
  return 1;
}

int run_analyze(const std::string& path, const std::string& format, double tol,
                long quadrature_nodes) {
  csf_spec* spec = nullptr;
  csf_status status = csf_spec_parse_file(path.c_str(), &spec);
  if (status != CSF_OK) return fail(status);

  csf_analyze_options options;
  csf_analyze_options_init(&options);
  options.tol = tol;
  options.quadrature_nodes = quadrature_nodes;

  csf_report* report = nullptr;
  status = csf_analyze(spec, &options, &report);
  csf_spec_free(spec);
  if (status != CSF_OK) return fail(status);

  char* rendered = nullptr;
  status = csf_report_render(
      report, format == "structured" ? CSF_RENDER_STRUCTURED : CSF_RENDER_TEXT, &rendered);
  if (status != CSF_OK) {
    csf_report_free(report);
    return fail(status);
  }
  std::fputs(rendered, stdout);
  csf_string_free(rendered);
  int is_frame = csf_report_is_frame(report);
  csf_report_free(report);
  return is_frame ? 0 : 2;
}

int run_generate(uint64_t seed, uint32_t atoms, uint32_t rank,
                 const std::vector<uint32_t>& blocks, bool riesz) {
  csf_generate_options options;
  options.seed = seed;
  options.atoms = atoms;
  options.rank = rank;
  options.blocks = blocks.data();
  options.block_count = blocks.size();
  options.riesz = riesz ? 1 : 0;
  char* text = nullptr;
  csf_status status = csf_generate_spec(&options, &text);
  if (status != CSF_OK) return fail(status);
  std::fputs(text, stdout);
  csf_string_free(text);
  return 0;
}

int run_verify(uint64_t seed, uint32_t cases, double tol, const std::string& dump_dir) {
  csf_verify_options options;
  options.seed = seed;
  options.cases = cases;
  options.tol = tol;
  options.dump_dir = dump_dir.empty() ? nullptr : dump_dir.c_str();
  char* summary = nullptr;
  uint32_t violations = 0;
  csf_status status = csf_verify_theorems(&options, &summary, &violations);
  if (status != CSF_OK) return fail(status);
  std::fputs(summary, stdout);
  csf_string_free(summary);
  return violations == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"continuous frames and Riesz bases in finite-dimensional Hilbert "
               "C*-modules"};
  app.set_version_flag("--version", std::string(csf_version()));
  app.require_subcommand(1);

  // Default tolerance can also come from the environment.
  double env_tol = 0.0;
  if (const char* env = std::getenv("CSTARFRAMES_TOL")) {
    env_tol = std::atof(env);
  }

  auto* analyze = app.add_subcommand("analyze", "analyze a frame-spec file");
  std::string spec_path;
  std::string format = "text";
  double tol = 0.0;
  long quadrature_nodes = 0;
  analyze->add_option("path", spec_path, "frame-spec file")->required();
  analyze->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "structured"}));
  analyze->add_option("--tol", tol, "decision tolerance (default 1e-9)");
  analyze->add_option("--quadrature-nodes", quadrature_nodes,
                      "override interval quadrature resolution");

  auto* generate = app.add_subcommand("generate", "emit a seeded random atomic frame spec");
  uint64_t seed = 0;
  uint32_t atoms = 0;
  uint32_t rank = 0;
  std::vector<uint32_t> blocks;
  bool riesz = false;
  generate->add_option("--seed", seed, "generator seed")->required();
  generate->add_option("--atoms", atoms, "number of atoms")->required();
  generate->add_option("--rank", rank, "module rank k")->required();
  generate->add_option("--blocks", blocks, "algebra block dimensions")
      ->required()
      ->delimiter(',');
  generate->add_flag("--riesz", riesz, "constrain to Riesz instances (needs atoms == rank)");

  auto* verify = app.add_subcommand("verify-theorems",
                                    "run the operator invariant suite on random instances");
  uint64_t vseed = 7;
  uint32_t cases = 100;
  double vtol = 0.0;
  std::string dump_dir = ".";
  verify->add_option("--cases", cases, "number of generated instances")->required();
  verify->add_option("--seed", vseed, "generator seed")->required();
  verify->add_option("--tol", vtol, "decision tolerance (default 1e-9)");
  verify->add_option("--dump-dir", dump_dir, "directory for violation spec dumps");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    return run_analyze(spec_path, format, tol > 0.0 ? tol : env_tol, quadrature_nodes);
  }
  if (generate->parsed()) {
    return run_generate(seed, atoms, rank, blocks, riesz);
  }
  if (verify->parsed()) {
    return run_verify(vseed, cases, vtol > 0.0 ? vtol : env_tol, dump_dir);
  }
  return 1;
}
