#pragma once

#include <cstddef>
#include <vector>

#include "cstarframes/linalg.hpp"

namespace csf {

/// Default relative tolerance for the positivity order and the decisions
/// built on it.
inline constexpr double kDefaultTol = 1e-9;

/// Block structure of a finite-dimensional C*-algebra: a direct sum of full
/// complex matrix algebras M_{n_1} + ... + M_{n_r}.
class AlgebraShape {
 public:
  explicit AlgebraShape(std::vector<std::size_t> block_dims);

  std::size_t block_count() const { return dims_.size(); }
  std::size_t block_dim(std::size_t i) const { return dims_[i]; }
  const std::vector<std::size_t>& block_dims() const { return dims_; }

  /// Complex dimension of the algebra, sum of n_i^2.
  std::size_t total_dim() const;

  bool operator==(const AlgebraShape& other) const { return dims_ == other.dims_; }
  bool operator!=(const AlgebraShape& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  std::vector<std::size_t> dims_;
};

/// An element of the algebra: one complex matrix per block. Values are
/// immutable after construction; all operations return new elements.
class AlgebraElement {
 public:
  AlgebraElement(AlgebraShape shape, std::vector<ComplexMatrix> blocks);

  static AlgebraElement zero(const AlgebraShape& shape);
  static AlgebraElement unit(const AlgebraShape& shape);
  /// z times the unit.
  static AlgebraElement scalar(const AlgebraShape& shape, cplx z);

  const AlgebraShape& shape() const { return shape_; }
  std::size_t block_count() const { return blocks_.size(); }
  const ComplexMatrix& block(std::size_t i) const { return blocks_[i]; }

 private:
  AlgebraShape shape_;
  std::vector<ComplexMatrix> blocks_;
};

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement neg(const AlgebraElement& a);
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(cplx z, const AlgebraElement& a);
AlgebraElement star(const AlgebraElement& a);

inline AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) { return add(a, b); }
inline AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return sub(a, b); }
inline AlgebraElement operator-(const AlgebraElement& a) { return neg(a); }
inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return mul(a, b); }

/// Per-block eigen decomposition of a Hermitian element. Throws on
/// non-Hermitian input (relative deviation above 1e-9).
std::vector<HermitianEigen> hermitian_eigen(const AlgebraElement& a);

/// C*-norm: max over blocks of the largest singular value, computed as
/// sqrt of the top eigenvalue of star(a) * a.
double norm(const AlgebraElement& a);

/// a >= 0 in the C*-order: self-adjoint within tol*(1+norm(a)) and all
/// eigenvalues >= -tol*(1+norm(a)).
bool is_positive(const AlgebraElement& a, double tol = kDefaultTol);

/// a <= b in the C*-order, i.e. is_positive(b - a, tol).
bool leq(const AlgebraElement& a, const AlgebraElement& b, double tol = kDefaultTol);

/// Blockwise inverse. Throws ErrorKind::Singular naming the offending block
/// and its smallest singular value.
AlgebraElement inverse(const AlgebraElement& a);

/// Positive square root of a positive element via eigen decomposition
/// (eigenvalues clipped at zero). Throws on non-positive input.
AlgebraElement sqrt_positive(const AlgebraElement& a, double tol = kDefaultTol);

/// |a*|^2 = a * star(a).
AlgebraElement abs_sq_star(const AlgebraElement& a);

bool approx_equal(const AlgebraElement& a, const AlgebraElement& b, double tol);

}  // namespace csf
