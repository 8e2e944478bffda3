#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cstarframes/frame_ops.hpp"

namespace csf {

/// Measure-space description as written in a frame-spec file. Interval
/// descriptors are kept symbolic so the quadrature resolution can be
/// overridden at analysis time.
struct MeasureDescriptor {
  MeasureSpace::Kind kind = MeasureSpace::Kind::Atomic;
  std::vector<double> nodes;    // atomic
  std::vector<double> weights;  // atomic
  double a = 0.0;               // interval
  double b = 1.0;
  QuadratureRule rule = QuadratureRule::GaussLegendre;
  std::size_t m = 32;

  MeasureSpace build(std::optional<std::size_t> m_override = {}) const;
};

/// Parsed frame-spec file. The frame map is given either as explicit
/// per-node samples or as a polynomial family F(w) = sum_d w^d c_d that is
/// sampled at the measure nodes before any computation.
struct FrameSpec {
  enum class FrameKind { Explicit, Polynomial };

  AlgebraShape algebra{std::vector<std::size_t>{1}};
  std::size_t rank = 1;
  MeasureDescriptor measure;
  FrameKind frame_kind = FrameKind::Explicit;
  std::vector<ModuleVector> frame_data;  // samples or family coefficients
  std::map<std::string, double> tolerances;

  double default_tol() const;
};

/// Parse spec text. Throws ErrorKind::Parse with line/field diagnostics.
FrameSpec parse_frame_spec(const std::string& text);

/// Read and parse a spec file. Throws ErrorKind::Io / ErrorKind::Parse.
FrameSpec load_frame_spec_file(const std::string& path);

/// Canonical serialization: sorted keys, no insignificant whitespace,
/// round-trip-exact numbers.
std::string serialize_frame_spec(const FrameSpec& spec);

/// Build the computational frame: instantiate the measure space (with an
/// optional interval-resolution override) and sample parametric families.
Frame instantiate(const FrameSpec& spec, std::optional<std::size_t> quadrature_override = {});

/// Content digest of the effective spec (override applied), over the
/// canonical serialization.
std::string spec_digest(const FrameSpec& spec, std::optional<std::size_t> quadrature_override = {});

/// Describe an atomic frame as a spec (used for generated instances and
/// violation dumps).
FrameSpec spec_from_frame(const Frame& frame);

// Stand-alone (de)serialization of module values in the frame-spec format:
// a vector is a list of rank-many algebra elements, an operator a row-major
// k x k nested list of coefficients, elements are lists of row-major
// [re, im] blocks.
std::string serialize_module_vector(const ModuleVector& v);
ModuleVector parse_module_vector(const std::string& text, const AlgebraShape& shape,
                                 std::size_t rank);
std::string serialize_module_operator(const ModuleOperator& t);
ModuleOperator parse_module_operator(const std::string& text, const AlgebraShape& shape,
                                     std::size_t rank);

}  // namespace csf
