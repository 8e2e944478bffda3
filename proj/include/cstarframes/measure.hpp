#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cstarframes/module.hpp"

namespace csf {

enum class QuadratureRule { GaussLegendre, Trapezoid };

std::string rule_name(QuadratureRule rule);
QuadratureRule rule_from_name(const std::string& name);

/// Discretized measure space: nodes with positive masses. Atomic spaces are
/// exact finite measures; interval spaces carry the quadrature points of the
/// chosen rule on [a, b].
class MeasureSpace {
 public:
  enum class Kind { Atomic, Interval };

  static MeasureSpace atomic(std::vector<double> nodes, std::vector<double> weights);
  static MeasureSpace interval(double a, double b, QuadratureRule rule, std::size_t m);

  Kind kind() const { return kind_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  double total_mass() const;

  // Interval metadata (meaningful only for Kind::Interval).
  double lower() const { return a_; }
  double upper() const { return b_; }
  QuadratureRule rule() const { return rule_; }
  std::size_t requested_nodes() const { return m_; }

  bool operator==(const MeasureSpace& other) const;
  bool operator!=(const MeasureSpace& other) const { return !(*this == other); }

 private:
  MeasureSpace() = default;
  Kind kind_ = Kind::Atomic;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  double a_ = 0.0;
  double b_ = 0.0;
  QuadratureRule rule_ = QuadratureRule::GaussLegendre;
  std::size_t m_ = 0;
};

/// Remove the index subset (a discretized measurable set) from the space,
/// keeping the complement. Errors when the complement would be empty.
MeasureSpace restrict_space(const MeasureSpace& space, const std::vector<std::size_t>& removed);

/// Per-node samples of a map from the space into algebra elements or module
/// vectors. One value per node, uniform shape.
template <typename Value>
class SampledField {
 public:
  SampledField(MeasureSpace space, std::vector<Value> values)
      : space_(std::move(space)), values_(std::move(values)) {
    if (values_.size() != space_.size()) {
      throw Error(ErrorKind::ShapeMismatch,
                  strfmt("field has %zu values for %zu nodes", values_.size(),
                         space_.size()));
    }
  }

  const MeasureSpace& space() const { return space_; }
  std::size_t size() const { return values_.size(); }
  const Value& value(std::size_t j) const { return values_[j]; }
  const std::vector<Value>& values() const { return values_; }

 private:
  MeasureSpace space_;
  std::vector<Value> values_;
};

using AlgebraField = SampledField<AlgebraElement>;
using VectorField = SampledField<ModuleVector>;

/// Weighted sum over nodes, the discretized Bochner integral.
AlgebraElement integrate_algebra(const AlgebraField& field);

/// L2(Omega, A) inner product: sum_j w_j phi_j star(psi_j).
AlgebraElement l2_inner(const AlgebraField& phi, const AlgebraField& psi);
double l2_norm(const AlgebraField& phi);

/// Characteristic function of an index subset, as an algebra-valued field.
AlgebraField indicator(const MeasureSpace& space, const std::vector<std::size_t>& subset,
                       const AlgebraShape& shape);

template <typename Value>
SampledField<Value> restrict_field(const SampledField<Value>& field,
                                   const std::vector<std::size_t>& removed) {
  MeasureSpace restricted = restrict_space(field.space(), removed);
  std::vector<bool> drop(field.size(), false);
  for (std::size_t idx : removed) drop[idx] = true;
  std::vector<Value> values;
  values.reserve(restricted.size());
  for (std::size_t j = 0; j < field.size(); ++j) {
    if (!drop[j]) values.push_back(field.value(j));
  }
  return SampledField<Value>(std::move(restricted), std::move(values));
}

}  // namespace csf
