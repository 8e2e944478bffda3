#pragma once

#include <vector>

#include "cstarframes/generate.hpp"

namespace csf::test {

inline AlgebraShape scalar_shape() { return AlgebraShape({1}); }
inline AlgebraShape diag_shape() { return AlgebraShape({1, 1}); }
inline AlgebraShape mat2_shape() { return AlgebraShape({2}); }

/// Shape [1] element holding a single complex scalar.
inline AlgebraElement el1(cplx z) {
  ComplexMatrix m(1, 1);
  m(0, 0) = z;
  return AlgebraElement(scalar_shape(), {m});
}

/// Shape [1,1] element (the diagonal 2x2 algebra).
inline AlgebraElement el11(cplx x, cplx y) {
  ComplexMatrix a(1, 1), b(1, 1);
  a(0, 0) = x;
  b(0, 0) = y;
  return AlgebraElement(diag_shape(), {a, b});
}

/// Shape [2] element from row-major entries.
inline AlgebraElement el2(cplx a, cplx b, cplx c, cplx d) {
  ComplexMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return AlgebraElement(mat2_shape(), {m});
}

/// Rank-1 module vector over shape [1].
inline ModuleVector vec1(cplx z) { return ModuleVector(scalar_shape(), {el1(z)}); }

/// Rank-2 module vector over shape [1].
inline ModuleVector vec2(cplx z0, cplx z1) {
  return ModuleVector(scalar_shape(), {el1(z0), el1(z1)});
}

/// Scalar-algebra atomic frame from per-node rank-1 values.
inline Frame scalar_frame(const std::vector<double>& weights, const std::vector<cplx>& values) {
  std::vector<double> nodes(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) nodes[j] = static_cast<double>(j);
  MeasureSpace space = MeasureSpace::atomic(nodes, weights);
  std::vector<ModuleVector> samples;
  samples.reserve(values.size());
  for (cplx z : values) samples.push_back(vec1(z));
  return Frame(VectorField(space, std::move(samples)));
}

inline AlgebraField constant_field(const MeasureSpace& space, const AlgebraElement& value) {
  return AlgebraField(space, std::vector<AlgebraElement>(space.size(), value));
}

}  // namespace csf::test
