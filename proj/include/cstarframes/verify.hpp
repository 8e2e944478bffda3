#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cstarframes/generate.hpp"

namespace csf {

struct VerifyOptions {
  std::uint64_t seed = 7;
  std::size_t cases = 100;
  double tol = kDefaultTol;
};

struct VerifyViolation {
  std::size_t case_index = 0;
  std::string check;
  std::string detail;
  FrameSpec spec;  // replayable instance
};

struct VerifySummary {
  std::size_t cases = 0;
  std::size_t checks_run = 0;
  std::vector<VerifyViolation> violations;

  std::string to_string() const;
};

/// Draw a random atomic frame instance (desk scale, total complex dimension
/// <= 16) that is decisively a frame and whose Gram spectrum is away from
/// the riesz decision boundary; near-boundary draws are regenerated.
/// riesz_candidate reports which side of the boundary the instance is on.
Frame draw_verification_instance(SeededRng& rng, double tol, bool& riesz_candidate);

/// Runs the frame-operator invariant suite (factorizations, frame
/// inequality, operator sandwich, kernel/range decomposition, equivalence
/// chain, riesz=>exact, dual symmetry, reconstruction, canonical-dual
/// bounds) over seeded random atomic instances. Cases are evaluated and
/// merged in index order, so summaries are deterministic.
VerifySummary verify_theorems(const VerifyOptions& options);

/// Write each violating instance as a replayable spec file
/// (<dir>/violation-case-NNN.spec). Returns the written paths.
std::vector<std::string> dump_violations(const VerifySummary& summary, const std::string& dir);

}  // namespace csf
