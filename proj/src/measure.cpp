#include "cstarframes/measure.hpp"

#include <algorithm>
#include <cmath>

namespace csf {

std::string rule_name(QuadratureRule rule) {
  switch (rule) {
    case QuadratureRule::GaussLegendre: return "gauss-legendre";
    case QuadratureRule::Trapezoid: return "trapezoid";
  }
  return "unknown";
}

QuadratureRule rule_from_name(const std::string& name) {
  if (name == "gauss-legendre") return QuadratureRule::GaussLegendre;
  if (name == "trapezoid") return QuadratureRule::Trapezoid;
  throw Error(ErrorKind::Parse, strfmt("unknown quadrature rule '%s'", name.c_str()));
}

MeasureSpace MeasureSpace::atomic(std::vector<double> nodes, std::vector<double> weights) {
  if (nodes.size() != weights.size()) {
    throw Error(ErrorKind::InvalidArgument,
                strfmt("atomic space: %zu nodes but %zu weights", nodes.size(),
                       weights.size()));
  }
  if (nodes.empty()) {
    throw Error(ErrorKind::InvalidArgument, "atomic space needs at least one node");
  }
  for (double w : weights) {
    if (!(w > 0.0)) {
      throw Error(ErrorKind::InvalidArgument,
                  strfmt("atomic space: non-positive weight %g", w));
    }
  }
  MeasureSpace s;
  s.kind_ = Kind::Atomic;
  s.nodes_ = std::move(nodes);
  s.weights_ = std::move(weights);
  return s;
}

namespace {

/// Legendre nodes/weights on [-1, 1] by Newton iteration on P_m. Symmetric
/// pairs are mirrored so the set is exactly symmetric.
void gauss_legendre_reference(std::size_t m, std::vector<double>& x, std::vector<double>& w) {
  x.assign(m, 0.0);
  w.assign(m, 0.0);
  const std::size_t half = (m + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    double t = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(m) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = t;
      for (std::size_t n = 2; n <= m; ++n) {
        double p2 = ((2.0 * n - 1.0) * t * p1 - (n - 1.0) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      // p1 = P_m(t), p0 = P_{m-1}(t)
      dp = m * (t * p1 - p0) / (t * t - 1.0);
      double step = p1 / dp;
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    // Final refresh of the derivative at the converged node.
    {
      double p0 = 1.0;
      double p1 = t;
      for (std::size_t n = 2; n <= m; ++n) {
        double p2 = ((2.0 * n - 1.0) * t * p1 - (n - 1.0) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (t * p1 - p0) / (t * t - 1.0);
    }
    const double weight = 2.0 / ((1.0 - t * t) * dp * dp);
    x[i] = -t;  // iteration walks roots from +1 side; store ascending
    w[i] = weight;
    x[m - 1 - i] = t;
    w[m - 1 - i] = weight;
  }
  if (m % 2 == 1) {
    x[m / 2] = 0.0;
    // weight already written by the i = half-1 pass; recompute exactly at 0
    double p0 = 1.0;
    double p1 = 0.0;
    double t = 0.0;
    for (std::size_t n = 2; n <= m; ++n) {
      double p2 = ((2.0 * n - 1.0) * t * p1 - (n - 1.0) * p0) / n;
      p0 = p1;
      p1 = p2;
    }
    double dp = m * (t * p1 - p0) / (t * t - 1.0);
    w[m / 2] = 2.0 / (dp * dp);
  }
}

}  // namespace

MeasureSpace MeasureSpace::interval(double a, double b, QuadratureRule rule, std::size_t m) {
  if (!(a < b)) {
    throw Error(ErrorKind::InvalidArgument,
                strfmt("interval space requires a < b, got [%g, %g]", a, b));
  }
  if (m < 1) {
    throw Error(ErrorKind::InvalidArgument, "interval space needs at least one node");
  }
  MeasureSpace s;
  s.kind_ = Kind::Interval;
  s.a_ = a;
  s.b_ = b;
  s.rule_ = rule;
  s.m_ = m;
  const double span = b - a;
  if (rule == QuadratureRule::GaussLegendre) {
    std::vector<double> x, w;
    gauss_legendre_reference(m, x, w);
    s.nodes_.resize(m);
    s.weights_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      s.nodes_[i] = a + 0.5 * span * (x[i] + 1.0);
      s.weights_[i] = 0.5 * span * w[i];
    }
  } else {
    if (m == 1) {
      s.nodes_ = {0.5 * (a + b)};
      s.weights_ = {span};
    } else {
      const double h = span / static_cast<double>(m - 1);
      s.nodes_.resize(m);
      s.weights_.resize(m);
      for (std::size_t i = 0; i < m; ++i) {
        s.nodes_[i] = a + h * static_cast<double>(i);
        s.weights_[i] = (i == 0 || i == m - 1) ? 0.5 * h : h;
      }
    }
  }
  return s;
}

double MeasureSpace::total_mass() const {
  return pairwise_sum(weights_.size(), 0.0, [&](std::size_t j) { return weights_[j]; });
}

bool MeasureSpace::operator==(const MeasureSpace& other) const {
  if (kind_ != other.kind_) return false;
  if (nodes_ != other.nodes_ || weights_ != other.weights_) return false;
  if (kind_ == Kind::Interval) {
    return a_ == other.a_ && b_ == other.b_ && rule_ == other.rule_ && m_ == other.m_;
  }
  return true;
}

MeasureSpace restrict_space(const MeasureSpace& space, const std::vector<std::size_t>& removed) {
  std::vector<bool> drop(space.size(), false);
  for (std::size_t idx : removed) {
    if (idx >= space.size()) {
      throw Error(ErrorKind::InvalidArgument,
                  strfmt("restrict: index %zu out of range (size %zu)", idx, space.size()));
    }
    drop[idx] = true;
  }
  std::vector<double> nodes, weights;
  for (std::size_t j = 0; j < space.size(); ++j) {
    if (!drop[j]) {
      nodes.push_back(space.nodes()[j]);
      weights.push_back(space.weights()[j]);
    }
  }
  if (nodes.empty()) {
    throw Error(ErrorKind::InvalidArgument, "restrict: removing every node leaves an empty space");
  }
  return MeasureSpace::atomic(std::move(nodes), std::move(weights));
}

AlgebraElement integrate_algebra(const AlgebraField& field) {
  const AlgebraShape& shape = field.value(0).shape();
  return pairwise_sum(field.size(), AlgebraElement::zero(shape), [&](std::size_t j) {
    return scale(field.space().weights()[j], field.value(j));
  });
}

AlgebraElement l2_inner(const AlgebraField& phi, const AlgebraField& psi) {
  if (phi.space() != psi.space()) {
    throw Error(ErrorKind::ShapeMismatch, "l2_inner: fields live on different spaces");
  }
  const AlgebraShape& shape = phi.value(0).shape();
  if (psi.value(0).shape() != shape) {
    throw Error(ErrorKind::ShapeMismatch, "l2_inner: fields have different algebra shapes");
  }
  return pairwise_sum(phi.size(), AlgebraElement::zero(shape), [&](std::size_t j) {
    return scale(phi.space().weights()[j], mul(phi.value(j), star(psi.value(j))));
  });
}

double l2_norm(const AlgebraField& phi) { return std::sqrt(norm(l2_inner(phi, phi))); }

AlgebraField indicator(const MeasureSpace& space, const std::vector<std::size_t>& subset,
                       const AlgebraShape& shape) {
  std::vector<bool> in(space.size(), false);
  for (std::size_t idx : subset) {
    if (idx >= space.size()) {
      throw Error(ErrorKind::InvalidArgument,
                  strfmt("indicator: index %zu out of range (size %zu)", idx, space.size()));
    }
    in[idx] = true;
  }
  std::vector<AlgebraElement> values;
  values.reserve(space.size());
  for (std::size_t j = 0; j < space.size(); ++j) {
    values.push_back(in[j] ? AlgebraElement::unit(shape) : AlgebraElement::zero(shape));
  }
  return AlgebraField(space, std::move(values));
}

}  // namespace csf
