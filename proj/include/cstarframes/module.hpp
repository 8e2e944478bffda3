#pragma once

#include <cstddef>
#include <vector>

#include "cstarframes/algebra.hpp"

namespace csf {

/// Element of the standard module A^k: a k-tuple of algebra elements with
/// the A-valued inner product inner(f,g) = sum_q f_q * star(g_q).
class ModuleVector {
 public:
  ModuleVector(AlgebraShape shape, std::vector<AlgebraElement> entries);

  static ModuleVector zero(const AlgebraShape& shape, std::size_t rank);
  /// Canonical basis vector: the algebra unit in slot p, zero elsewhere.
  static ModuleVector basis(const AlgebraShape& shape, std::size_t rank, std::size_t p);

  const AlgebraShape& shape() const { return shape_; }
  std::size_t rank() const { return entries_.size(); }
  const AlgebraElement& entry(std::size_t q) const { return entries_[q]; }

 private:
  AlgebraShape shape_;
  std::vector<AlgebraElement> entries_;
};

AlgebraElement inner(const ModuleVector& f, const ModuleVector& g);
ModuleVector module_action(const AlgebraElement& a, const ModuleVector& f);
double vec_norm(const ModuleVector& f);

ModuleVector add(const ModuleVector& f, const ModuleVector& g);
ModuleVector sub(const ModuleVector& f, const ModuleVector& g);
ModuleVector scale(cplx z, const ModuleVector& f);
inline ModuleVector operator+(const ModuleVector& f, const ModuleVector& g) { return add(f, g); }
inline ModuleVector operator-(const ModuleVector& f, const ModuleVector& g) { return sub(f, g); }

/// Adjointable operator on A^k, stored as a k x k matrix of algebra
/// coefficients acting on the right of the entry tuple:
/// (T f)_p = sum_q f_q * coeff(q, p). This convention keeps A-linearity
/// T(a f) = a T(f) structural.
class ModuleOperator {
 public:
  ModuleOperator(AlgebraShape shape, std::size_t rank, std::vector<AlgebraElement> coeffs);

  static ModuleOperator identity(const AlgebraShape& shape, std::size_t rank);
  static ModuleOperator zero(const AlgebraShape& shape, std::size_t rank);

  const AlgebraShape& shape() const { return shape_; }
  std::size_t rank() const { return rank_; }
  const AlgebraElement& coeff(std::size_t q, std::size_t p) const {
    return coeffs_[q * rank_ + p];
  }

 private:
  AlgebraShape shape_;
  std::size_t rank_;
  std::vector<AlgebraElement> coeffs_;  // row-major [q][p]
};

ModuleVector op_apply(const ModuleOperator& t, const ModuleVector& f);
ModuleOperator op_adjoint(const ModuleOperator& t);
/// Applies t2 after t1.
ModuleOperator op_compose(const ModuleOperator& t1, const ModuleOperator& t2);
ModuleOperator op_add(const ModuleOperator& t1, const ModuleOperator& t2);
ModuleOperator op_sub(const ModuleOperator& t1, const ModuleOperator& t2);
ModuleOperator op_scale(cplx z, const ModuleOperator& t);

/// Flattening of a module vector into C^D, D = k * sum n_i^2: for each
/// algebra block, the k entries' matrices are stacked column by column.
std::vector<cplx> flatten(const ModuleVector& f);
ModuleVector unflatten(const AlgebraShape& shape, std::size_t rank,
                       const std::vector<cplx>& data);

/// D x D complex matrix whose action on flatten(f) equals op_apply(t, f).
/// Self-adjoint operators map to Hermitian matrices.
ComplexMatrix complex_realization(const ModuleOperator& t);

/// Inverse in End*(A^k). Routed through the dense complex realization per
/// algebra block (Gauss elimination with partial pivoting); fails with the
/// operator's smallest singular value when numerically singular.
ModuleOperator op_invert(const ModuleOperator& t);

/// Operator norm = C*-norm of the operator under End*(A^k) ~ M_k(A).
double op_norm(const ModuleOperator& t);

/// Shape of the C*-algebra M_k(A): one block of dimension k*n_i per block
/// of A. Used to run positivity-order checks on operators.
AlgebraShape operator_shape(const AlgebraShape& shape, std::size_t rank);

/// The literal M_k(A) element of an operator: per algebra block i, the
/// (k n_i) x (k n_i) block matrix with sub-block (q, p) = coeff(q, p).
AlgebraElement operator_as_algebra_element(const ModuleOperator& t);

/// Eigen data of a self-adjoint operator in action orientation, one
/// decomposition per algebra block (matrices of size k * n_i).
struct OperatorSpectrum {
  std::vector<HermitianEigen> blocks;
  double min_eigenvalue() const;
  double max_eigenvalue() const;
  /// Block index holding the global minimum (ties to the lowest index).
  std::size_t argmin_block() const;
  std::size_t argmax_block() const;
};

/// Spectrum of a self-adjoint operator. The per-block matrices act on
/// transposed row-slices of module entries, so eigenvectors lift directly
/// via lift_eigenvector.
OperatorSpectrum hermitian_operator_spectrum(const ModuleOperator& t);

/// Lift a length k*n_i eigenvector of block `block_index` into a module
/// vector (placed in row 0 of that algebra block; other blocks zero).
ModuleVector lift_eigenvector(const AlgebraShape& shape, std::size_t rank,
                              std::size_t block_index, const ComplexMatrix& vectors,
                              std::size_t column);

bool approx_equal(const ModuleVector& f, const ModuleVector& g, double tol);

}  // namespace csf
