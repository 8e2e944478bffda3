#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "cstarframes/common.hpp"

namespace csf {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Sized for desk-scale problems; all
/// algorithms in this header are direct (no blocking, no parallelism).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  ComplexMatrix adjoint() const;    // conjugate transpose
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  double frobenius_norm() const;
  double max_abs() const;

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const cplx& z, const ComplexMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// Eigen decomposition of a Hermitian matrix: h = V diag(values) V*,
/// values ascending, V unitary with eigenvectors as columns. Each column's
/// largest-magnitude entry is rotated to be real and non-negative, so the
/// decomposition is deterministic.
struct HermitianEigen {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Cyclic Jacobi for Hermitian complex matrices. Sweep limit 100,
/// off-diagonal stopping threshold 1e-14 * frobenius_norm(h).
/// The caller is responsible for h being Hermitian (not re-validated here).
HermitianEigen hermitian_eigen_jacobi(const ComplexMatrix& h);

/// Gauss-Jordan inverse with partial pivoting; pivot tolerance 1e-12
/// relative to the largest input magnitude. Throws ErrorKind::Singular.
ComplexMatrix gauss_invert(const ComplexMatrix& a);

double spectral_norm(const ComplexMatrix& a);             // largest singular value
double smallest_singular_value(const ComplexMatrix& a);

std::vector<cplx> matvec(const ComplexMatrix& a, const std::vector<cplx>& x);

}  // namespace csf
