#pragma once

#include <cstdint>
#include <random>

#include "cstarframes/spec_io.hpp"

namespace csf {

/// Deterministic random source. Raw draws come from the standard-specified
/// mt19937_64 engine; mapping to doubles is done by hand so the byte stream
/// of generated specs is identical across platforms and library versions.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  /// Uniform in [0, 1), 53 mantissa bits.
  double unit() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * unit() - 1.0; }

  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform index in [0, n).
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(unit() * n); }

  cplx complex_symmetric() {
    double re = symmetric();
    double im = symmetric();
    return cplx(re, im);
  }

 private:
  std::mt19937_64 eng_;
};

AlgebraElement random_element(SeededRng& rng, const AlgebraShape& shape);
ModuleVector random_vector(SeededRng& rng, const AlgebraShape& shape, std::size_t rank);

/// Atomic space with nodes 0..m-1 and weights in [0.5, 1.5).
MeasureSpace random_atomic_space(SeededRng& rng, std::size_t atoms);

Frame random_frame_on(SeededRng& rng, const MeasureSpace& space, const AlgebraShape& shape,
                      std::size_t rank);

struct GenerateOptions {
  std::uint64_t seed = 0;
  std::size_t atoms = 1;
  std::size_t rank = 1;
  std::vector<std::size_t> blocks = {1};
  bool riesz = false;
};

/// Deterministic pseudo-random atomic frame spec. With riesz set, rejection
/// sampling (cap 10000 attempts) keeps only instances whose Gram spectrum
/// stays >= 1e-3; infeasible requests (atoms != rank) fail up front.
FrameSpec generate_frame_spec(const GenerateOptions& options);

}  // namespace csf
