#include "cstarframes/generate.hpp"

namespace csf {

AlgebraElement random_element(SeededRng& rng, const AlgebraShape& shape) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(shape.block_count());
  for (std::size_t i = 0; i < shape.block_count(); ++i) {
    const std::size_t n = shape.block_dim(i);
    ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.complex_symmetric();
    blocks.push_back(std::move(m));
  }
  return AlgebraElement(shape, std::move(blocks));
}

ModuleVector random_vector(SeededRng& rng, const AlgebraShape& shape, std::size_t rank) {
  std::vector<AlgebraElement> entries;
  entries.reserve(rank);
  for (std::size_t q = 0; q < rank; ++q) entries.push_back(random_element(rng, shape));
  return ModuleVector(shape, std::move(entries));
}

MeasureSpace random_atomic_space(SeededRng& rng, std::size_t atoms) {
  if (atoms == 0) {
    throw Error(ErrorKind::InvalidArgument, "atom count must be >= 1");
  }
  std::vector<double> nodes(atoms);
  std::vector<double> weights(atoms);
  for (std::size_t j = 0; j < atoms; ++j) {
    nodes[j] = static_cast<double>(j);
    weights[j] = rng.range(0.5, 1.5);
  }
  return MeasureSpace::atomic(std::move(nodes), std::move(weights));
}

Frame random_frame_on(SeededRng& rng, const MeasureSpace& space, const AlgebraShape& shape,
                      std::size_t rank) {
  std::vector<ModuleVector> samples;
  samples.reserve(space.size());
  for (std::size_t j = 0; j < space.size(); ++j) {
    samples.push_back(random_vector(rng, shape, rank));
  }
  return Frame(VectorField(space, std::move(samples)));
}

FrameSpec generate_frame_spec(const GenerateOptions& options) {
  if (options.atoms == 0) {
    throw Error(ErrorKind::InvalidArgument, "atom count must be >= 1");
  }
  if (options.rank == 0) {
    throw Error(ErrorKind::InvalidArgument, "rank must be >= 1");
  }
  AlgebraShape shape(options.blocks);
  if (options.riesz && options.atoms != options.rank) {
    throw Error(ErrorKind::Infeasible,
                strfmt("riesz generation infeasible: %zu atoms cannot carry a Riesz "
                       "basis of rank %zu (dimension count forces atoms == rank)",
                       options.atoms, options.rank));
  }
  SeededRng rng(options.seed);
  const int max_attempts = options.riesz ? 10000 : 1;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    MeasureSpace space = random_atomic_space(rng, options.atoms);
    Frame frame = random_frame_on(rng, space, shape, options.rank);
    if (options.riesz) {
      GramSpectrum gs = gram_spectrum(frame);
      if (gs.min_eigenvalue() < 1e-3) continue;
    }
    return spec_from_frame(frame);
  }
  throw Error(ErrorKind::Infeasible,
              "riesz generation failed: rejection sampling exhausted 10000 attempts");
}

}  // namespace csf
