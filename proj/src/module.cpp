#include "cstarframes/module.hpp"

#include <algorithm>
#include <cmath>

namespace csf {

namespace {

void require_same_frame(const ModuleVector& f, const ModuleVector& g) {
  if (f.shape() != g.shape() || f.rank() != g.rank()) {
    throw Error(ErrorKind::ShapeMismatch,
                strfmt("module vector mismatch: shape %s rank %zu vs shape %s rank %zu",
                       f.shape().to_string().c_str(), f.rank(),
                       g.shape().to_string().c_str(), g.rank()));
  }
}

void require_conforming(const ModuleOperator& t, const ModuleVector& f) {
  if (t.shape() != f.shape() || t.rank() != f.rank()) {
    throw Error(ErrorKind::ShapeMismatch,
                strfmt("operator (shape %s rank %zu) does not conform to vector "
                       "(shape %s rank %zu)",
                       t.shape().to_string().c_str(), t.rank(),
                       f.shape().to_string().c_str(), f.rank()));
  }
}

void require_same_operator_frame(const ModuleOperator& a, const ModuleOperator& b) {
  if (a.shape() != b.shape() || a.rank() != b.rank()) {
    throw Error(ErrorKind::ShapeMismatch, "operator shape/rank mismatch");
  }
}

}  // namespace

ModuleVector::ModuleVector(AlgebraShape shape, std::vector<AlgebraElement> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "module vector must have rank >= 1");
  }
  for (const AlgebraElement& e : entries_) {
    if (e.shape() != shape_) {
      throw Error(ErrorKind::ShapeMismatch,
                  "module vector entry does not match the module shape");
    }
  }
}

ModuleVector ModuleVector::zero(const AlgebraShape& shape, std::size_t rank) {
  std::vector<AlgebraElement> entries(rank, AlgebraElement::zero(shape));
  return ModuleVector(shape, std::move(entries));
}

ModuleVector ModuleVector::basis(const AlgebraShape& shape, std::size_t rank, std::size_t p) {
  if (p >= rank) {
    throw Error(ErrorKind::InvalidArgument,
                strfmt("basis index %zu out of range for rank %zu", p, rank));
  }
  std::vector<AlgebraElement> entries(rank, AlgebraElement::zero(shape));
  entries[p] = AlgebraElement::unit(shape);
  return ModuleVector(shape, std::move(entries));
}

AlgebraElement inner(const ModuleVector& f, const ModuleVector& g) {
  require_same_frame(f, g);
  return pairwise_sum(f.rank(), AlgebraElement::zero(f.shape()),
                      [&](std::size_t q) { return mul(f.entry(q), star(g.entry(q))); });
}

ModuleVector module_action(const AlgebraElement& a, const ModuleVector& f) {
  if (a.shape() != f.shape()) {
    throw Error(ErrorKind::ShapeMismatch, "module action: algebra shape mismatch");
  }
  std::vector<AlgebraElement> entries;
  entries.reserve(f.rank());
  for (std::size_t q = 0; q < f.rank(); ++q) entries.push_back(mul(a, f.entry(q)));
  return ModuleVector(f.shape(), std::move(entries));
}

double vec_norm(const ModuleVector& f) { return std::sqrt(norm(inner(f, f))); }

ModuleVector add(const ModuleVector& f, const ModuleVector& g) {
  require_same_frame(f, g);
  std::vector<AlgebraElement> entries;
  entries.reserve(f.rank());
  for (std::size_t q = 0; q < f.rank(); ++q) entries.push_back(add(f.entry(q), g.entry(q)));
  return ModuleVector(f.shape(), std::move(entries));
}

ModuleVector sub(const ModuleVector& f, const ModuleVector& g) {
  require_same_frame(f, g);
  std::vector<AlgebraElement> entries;
  entries.reserve(f.rank());
  for (std::size_t q = 0; q < f.rank(); ++q) entries.push_back(sub(f.entry(q), g.entry(q)));
  return ModuleVector(f.shape(), std::move(entries));
}

ModuleVector scale(cplx z, const ModuleVector& f) {
  std::vector<AlgebraElement> entries;
  entries.reserve(f.rank());
  for (std::size_t q = 0; q < f.rank(); ++q) entries.push_back(scale(z, f.entry(q)));
  return ModuleVector(f.shape(), std::move(entries));
}

ModuleOperator::ModuleOperator(AlgebraShape shape, std::size_t rank,
                               std::vector<AlgebraElement> coeffs)
    : shape_(std::move(shape)), rank_(rank), coeffs_(std::move(coeffs)) {
  if (rank_ == 0) {
    throw Error(ErrorKind::InvalidArgument, "module operator must have rank >= 1");
  }
  if (coeffs_.size() != rank_ * rank_) {
    throw Error(ErrorKind::ShapeMismatch,
                strfmt("operator needs %zu coefficients, got %zu", rank_ * rank_,
                       coeffs_.size()));
  }
  for (const AlgebraElement& c : coeffs_) {
    if (c.shape() != shape_) {
      throw Error(ErrorKind::ShapeMismatch,
                  "operator coefficient does not match the module shape");
    }
  }
}

ModuleOperator ModuleOperator::identity(const AlgebraShape& shape, std::size_t rank) {
  std::vector<AlgebraElement> coeffs(rank * rank, AlgebraElement::zero(shape));
  for (std::size_t q = 0; q < rank; ++q) coeffs[q * rank + q] = AlgebraElement::unit(shape);
  return ModuleOperator(shape, rank, std::move(coeffs));
}

ModuleOperator ModuleOperator::zero(const AlgebraShape& shape, std::size_t rank) {
  std::vector<AlgebraElement> coeffs(rank * rank, AlgebraElement::zero(shape));
  return ModuleOperator(shape, rank, std::move(coeffs));
}

ModuleVector op_apply(const ModuleOperator& t, const ModuleVector& f) {
  require_conforming(t, f);
  std::vector<AlgebraElement> entries;
  entries.reserve(t.rank());
  for (std::size_t p = 0; p < t.rank(); ++p) {
    entries.push_back(pairwise_sum(
        t.rank(), AlgebraElement::zero(t.shape()),
        [&](std::size_t q) { return mul(f.entry(q), t.coeff(q, p)); }));
  }
  return ModuleVector(t.shape(), std::move(entries));
}

ModuleOperator op_adjoint(const ModuleOperator& t) {
  std::vector<AlgebraElement> coeffs;
  coeffs.reserve(t.rank() * t.rank());
  for (std::size_t q = 0; q < t.rank(); ++q)
    for (std::size_t p = 0; p < t.rank(); ++p) coeffs.push_back(star(t.coeff(p, q)));
  return ModuleOperator(t.shape(), t.rank(), std::move(coeffs));
}

ModuleOperator op_compose(const ModuleOperator& t1, const ModuleOperator& t2) {
  require_same_operator_frame(t1, t2);
  const std::size_t k = t1.rank();
  std::vector<AlgebraElement> coeffs;
  coeffs.reserve(k * k);
  for (std::size_t q = 0; q < k; ++q) {
    for (std::size_t p = 0; p < k; ++p) {
      coeffs.push_back(pairwise_sum(
          k, AlgebraElement::zero(t1.shape()),
          [&](std::size_t r) { return mul(t1.coeff(q, r), t2.coeff(r, p)); }));
    }
  }
  return ModuleOperator(t1.shape(), k, std::move(coeffs));
}

ModuleOperator op_add(const ModuleOperator& t1, const ModuleOperator& t2) {
  require_same_operator_frame(t1, t2);
  const std::size_t k = t1.rank();
  std::vector<AlgebraElement> coeffs;
  coeffs.reserve(k * k);
  for (std::size_t q = 0; q < k; ++q)
    for (std::size_t p = 0; p < k; ++p) coeffs.push_back(add(t1.coeff(q, p), t2.coeff(q, p)));
  return ModuleOperator(t1.shape(), k, std::move(coeffs));
}

ModuleOperator op_sub(const ModuleOperator& t1, const ModuleOperator& t2) {
  return op_add(t1, op_scale(cplx(-1.0), t2));
}

ModuleOperator op_scale(cplx z, const ModuleOperator& t) {
  const std::size_t k = t.rank();
  std::vector<AlgebraElement> coeffs;
  coeffs.reserve(k * k);
  for (std::size_t q = 0; q < k; ++q)
    for (std::size_t p = 0; p < k; ++p) coeffs.push_back(scale(z, t.coeff(q, p)));
  return ModuleOperator(t.shape(), k, std::move(coeffs));
}

std::vector<cplx> flatten(const ModuleVector& f) {
  std::vector<cplx> out;
  const AlgebraShape& shape = f.shape();
  for (std::size_t i = 0; i < shape.block_count(); ++i) {
    const std::size_t n = shape.block_dim(i);
    for (std::size_t q = 0; q < f.rank(); ++q) {
      const ComplexMatrix& m = f.entry(q).block(i);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) out.push_back(m(r, c));
    }
  }
  return out;
}

ModuleVector unflatten(const AlgebraShape& shape, std::size_t rank,
                       const std::vector<cplx>& data) {
  std::size_t expected = rank * shape.total_dim();
  if (data.size() != expected) {
    throw Error(ErrorKind::ShapeMismatch,
                strfmt("unflatten expects %zu coordinates, got %zu", expected, data.size()));
  }
  std::vector<AlgebraElement> entries;
  entries.reserve(rank);
  std::vector<std::vector<ComplexMatrix>> blocks(rank);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < shape.block_count(); ++i) {
    const std::size_t n = shape.block_dim(i);
    for (std::size_t q = 0; q < rank; ++q) {
      ComplexMatrix m(n, n);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) m(r, c) = data[idx++];
      blocks[q].push_back(std::move(m));
    }
  }
  for (std::size_t q = 0; q < rank; ++q)
    entries.emplace_back(shape, std::move(blocks[q]));
  return ModuleVector(shape, std::move(entries));
}

ComplexMatrix complex_realization(const ModuleOperator& t) {
  const AlgebraShape& shape = t.shape();
  const std::size_t k = t.rank();
  const std::size_t dim = k * shape.total_dim();
  ComplexMatrix out(dim, dim);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < shape.block_count(); ++i) {
    const std::size_t n = shape.block_dim(i);
    // Index layout within block i: (q, c, r) -> offset + q*n*n + c*n + r.
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t q = 0; q < k; ++q) {
        const ComplexMatrix& cm = t.coeff(q, p).block(i);
        // (f_q * coeff)(r, col) = sum_{c} f_q(r, c) * coeff(c, col)
        for (std::size_t col = 0; col < n; ++col) {
          for (std::size_t c = 0; c < n; ++c) {
            const cplx w = cm(c, col);
            if (w == cplx(0.0)) continue;
            for (std::size_t r = 0; r < n; ++r) {
              out(offset + p * n * n + col * n + r, offset + q * n * n + c * n + r) += w;
            }
          }
        }
      }
    }
    offset += k * n * n;
  }
  return out;
}

AlgebraShape operator_shape(const AlgebraShape& shape, std::size_t rank) {
  std::vector<std::size_t> dims;
  dims.reserve(shape.block_count());
  for (std::size_t i = 0; i < shape.block_count(); ++i)
    dims.push_back(rank * shape.block_dim(i));
  return AlgebraShape(std::move(dims));
}

AlgebraElement operator_as_algebra_element(const ModuleOperator& t) {
  const AlgebraShape& shape = t.shape();
  const std::size_t k = t.rank();
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(shape.block_count());
  for (std::size_t i = 0; i < shape.block_count(); ++i) {
    const std::size_t n = shape.block_dim(i);
    ComplexMatrix big(k * n, k * n);
    for (std::size_t q = 0; q < k; ++q) {
      for (std::size_t p = 0; p < k; ++p) {
        const ComplexMatrix& cm = t.coeff(q, p).block(i);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) big(q * n + r, p * n + c) = cm(r, c);
      }
    }
    blocks.push_back(std::move(big));
  }
  return AlgebraElement(operator_shape(shape, k), std::move(blocks));
}

namespace {

ModuleOperator operator_from_blocks(const AlgebraShape& shape, std::size_t rank,
                                    const std::vector<ComplexMatrix>& big_blocks) {
  std::vector<std::vector<ComplexMatrix>> coeff_blocks(rank * rank);
  for (std::size_t i = 0; i < shape.block_count(); ++i) {
    const std::size_t n = shape.block_dim(i);
    const ComplexMatrix& big = big_blocks[i];
    for (std::size_t q = 0; q < rank; ++q) {
      for (std::size_t p = 0; p < rank; ++p) {
        ComplexMatrix cm(n, n);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) cm(r, c) = big(q * n + r, p * n + c);
        coeff_blocks[q * rank + p].push_back(std::move(cm));
      }
    }
  }
  std::vector<AlgebraElement> coeffs;
  coeffs.reserve(rank * rank);
  for (std::size_t j = 0; j < rank * rank; ++j)
    coeffs.emplace_back(shape, std::move(coeff_blocks[j]));
  return ModuleOperator(shape, rank, std::move(coeffs));
}

}  // namespace

ModuleOperator op_invert(const ModuleOperator& t) {
  AlgebraElement big = operator_as_algebra_element(t);
  std::vector<ComplexMatrix> inverted;
  inverted.reserve(big.block_count());
  for (std::size_t i = 0; i < big.block_count(); ++i) {
    try {
      inverted.push_back(gauss_invert(big.block(i)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Singular) throw;
      throw Error(ErrorKind::Singular,
                  strfmt("operator not invertible: min singular value %.3e",
                         smallest_singular_value(big.block(i))));
    }
  }
  ModuleOperator inv = operator_from_blocks(t.shape(), t.rank(), inverted);
  double residual =
      op_norm(op_sub(op_compose(t, inv), ModuleOperator::identity(t.shape(), t.rank())));
  if (residual > 1e-9 * (1.0 + op_norm(t) * op_norm(inv))) {
    double sigma_min = 0.0;
    for (std::size_t i = 0; i < big.block_count(); ++i) {
      double s = smallest_singular_value(big.block(i));
      sigma_min = i == 0 ? s : std::min(sigma_min, s);
    }
    throw Error(ErrorKind::Singular,
                strfmt("operator numerically singular: inverse residual %.3e, min "
                       "singular value %.3e",
                       residual, sigma_min));
  }
  return inv;
}

double op_norm(const ModuleOperator& t) { return norm(operator_as_algebra_element(t)); }

OperatorSpectrum hermitian_operator_spectrum(const ModuleOperator& t) {
  AlgebraElement big = operator_as_algebra_element(t);
  double dev = norm(sub(big, star(big)));
  if (dev > 1e-9 * (1.0 + norm(big))) {
    throw Error(ErrorKind::InvalidArgument,
                strfmt("operator spectrum: input deviates from self-adjoint by %.3e", dev));
  }
  OperatorSpectrum spectrum;
  spectrum.blocks.reserve(big.block_count());
  for (std::size_t i = 0; i < big.block_count(); ++i) {
    // Transpose switches from the M_k(A) block matrix to the action
    // orientation, whose eigenvectors lift to module vectors.
    ComplexMatrix m = big.block(i).transpose();
    ComplexMatrix h = cplx(0.5) * (m + m.adjoint());
    spectrum.blocks.push_back(hermitian_eigen_jacobi(h));
  }
  return spectrum;
}

double OperatorSpectrum::min_eigenvalue() const {
  double best = 0.0;
  bool first = true;
  for (const HermitianEigen& e : blocks) {
    if (e.values.empty()) continue;
    if (first || e.values.front() < best) best = e.values.front();
    first = false;
  }
  return best;
}

double OperatorSpectrum::max_eigenvalue() const {
  double best = 0.0;
  bool first = true;
  for (const HermitianEigen& e : blocks) {
    if (e.values.empty()) continue;
    if (first || e.values.back() > best) best = e.values.back();
    first = false;
  }
  return best;
}

std::size_t OperatorSpectrum::argmin_block() const {
  std::size_t arg = 0;
  double best = blocks.front().values.front();
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    if (blocks[i].values.front() < best) {
      best = blocks[i].values.front();
      arg = i;
    }
  }
  return arg;
}

std::size_t OperatorSpectrum::argmax_block() const {
  std::size_t arg = 0;
  double best = blocks.front().values.back();
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    if (blocks[i].values.back() > best) {
      best = blocks[i].values.back();
      arg = i;
    }
  }
  return arg;
}

ModuleVector lift_eigenvector(const AlgebraShape& shape, std::size_t rank,
                              std::size_t block_index, const ComplexMatrix& vectors,
                              std::size_t column) {
  const std::size_t n = shape.block_dim(block_index);
  std::vector<AlgebraElement> entries;
  entries.reserve(rank);
  for (std::size_t q = 0; q < rank; ++q) {
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(shape.block_count());
    for (std::size_t i = 0; i < shape.block_count(); ++i) {
      ComplexMatrix m(shape.block_dim(i), shape.block_dim(i));
      if (i == block_index) {
        for (std::size_t c = 0; c < n; ++c) m(0, c) = vectors(q * n + c, column);
      }
      blocks.push_back(std::move(m));
    }
    entries.emplace_back(shape, std::move(blocks));
  }
  return ModuleVector(shape, std::move(entries));
}

bool approx_equal(const ModuleVector& f, const ModuleVector& g, double tol) {
  if (f.shape() != g.shape() || f.rank() != g.rank()) return false;
  return vec_norm(sub(f, g)) <= tol;
}

}  // namespace csf
