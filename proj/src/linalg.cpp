#include "cstarframes/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace csf {

namespace {

void require_same_size(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::ShapeMismatch,
                strfmt("matrix size mismatch: %zux%zu vs %zux%zu", a.rows(),
                       a.cols(), b.rows(), b.cols()));
  }
}

}  // namespace

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = std::conj((*this)(r, c));
  return out;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : data_) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_size(a, b);
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    out.data_[i] = a.data_[i] + b.data_[i];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_size(a, b);
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    out.data_[i] = a.data_[i] - b.data_[i];
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::ShapeMismatch,
                strfmt("matrix product mismatch: %zux%zu times %zux%zu",
                       a.rows(), a.cols(), b.rows(), b.cols()));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      cplx arj = a(r, k);
      if (arj == cplx(0.0)) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += arj * b(k, c);
    }
  }
  return out;
}

ComplexMatrix operator*(const cplx& z, const ComplexMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = z * a.data_[i];
  return out;
}

std::vector<cplx> matvec(const ComplexMatrix& a, const std::vector<cplx>& x) {
  if (a.cols() != x.size()) {
    throw Error(ErrorKind::ShapeMismatch,
                strfmt("matvec mismatch: %zux%zu times %zu", a.rows(), a.cols(),
                       x.size()));
  }
  std::vector<cplx> y(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    cplx acc = 0.0;
    for (std::size_t c = 0; c < a.cols(); ++c) acc += a(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t p = 0; p + 1 < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.cols(); ++q) s += std::norm(a(p, q));
  return std::sqrt(2.0 * s);
}

/// Make the largest-magnitude entry of each eigenvector column real and
/// non-negative. Ties resolve to the lowest row index.
void normalize_column_phases(ComplexMatrix& v) {
  for (std::size_t c = 0; c < v.cols(); ++c) {
    std::size_t best = 0;
    double best_abs = 0.0;
    for (std::size_t r = 0; r < v.rows(); ++r) {
      double m = std::abs(v(r, c));
      if (m > best_abs + 1e-15) {
        best_abs = m;
        best = r;
      }
    }
    if (best_abs == 0.0) continue;
    cplx phase = std::conj(v(best, c)) / best_abs;
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, c) *= phase;
  }
}

}  // namespace

HermitianEigen hermitian_eigen_jacobi(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) {
    throw Error(ErrorKind::ShapeMismatch,
                strfmt("eigen solver requires a square matrix, got %zux%zu",
                       h.rows(), h.cols()));
  }
  const std::size_t n = h.rows();
  ComplexMatrix a = h;
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double fro = a.frobenius_norm();
  const double threshold = 1e-14 * fro;

  if (n > 1 && fro > 0.0) {
    for (int sweep = 0; sweep < 100; ++sweep) {
      if (off_diagonal_norm(a) <= threshold) break;
      for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          const cplx beta = a(p, q);
          const double absb = std::abs(beta);
          if (absb <= 1e-300) continue;
          const double alpha = a(p, p).real();
          const double gamma = a(q, q).real();
          // Rotation angle from the real 2x2 problem [[alpha,|b|],[|b|,gamma]]:
          // |b|(c^2-s^2) + (gamma-alpha)cs = 0, smaller-magnitude root of
          // t^2 - 2 theta t - 1 = 0.
          const double theta = (gamma - alpha) / (2.0 * absb);
          const double sgn = theta >= 0.0 ? 1.0 : -1.0;
          const double t = -sgn / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const cplx phase = beta / absb;              // e^{i arg(beta)}
          const cplx sp = s * phase;                   // s e^{i phi}
          const cplx spc = s * std::conj(phase);       // s e^{-i phi}

          for (std::size_t k = 0; k < n; ++k) {
            if (k == p || k == q) continue;
            const cplx akp = a(k, p);
            const cplx akq = a(k, q);
            a(k, p) = c * akp + spc * akq;
            a(k, q) = c * akq - sp * akp;
            a(p, k) = std::conj(a(k, p));
            a(q, k) = std::conj(a(k, q));
          }
          const double app = alpha * c * c + 2.0 * absb * c * s + gamma * s * s;
          const double aqq = alpha * s * s - 2.0 * absb * c * s + gamma * c * c;
          a(p, p) = app;
          a(q, q) = aqq;
          a(p, q) = 0.0;
          a(q, p) = 0.0;

          for (std::size_t k = 0; k < n; ++k) {
            const cplx vkp = v(k, p);
            const cplx vkq = v(k, q);
            v(k, p) = c * vkp + spc * vkq;
            v(k, q) = c * vkq - sp * vkp;
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  HermitianEigen out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = a(order[c], order[c]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  normalize_column_phases(out.vectors);
  return out;
}

ComplexMatrix gauss_invert(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorKind::ShapeMismatch,
                strfmt("inverse requires a square matrix, got %zux%zu", a.rows(),
                       a.cols()));
  }
  const std::size_t n = a.rows();
  ComplexMatrix work = a;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  const double scale = a.max_abs();
  const double pivot_tol = 1e-12 * scale;
  if (scale == 0.0) {
    throw Error(ErrorKind::Singular, "singular matrix: all entries zero");
  }

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot_row = col;
    double pivot_abs = std::abs(work(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      double m = std::abs(work(r, col));
      if (m > pivot_abs) {
        pivot_abs = m;
        pivot_row = r;
      }
    }
    if (pivot_abs <= pivot_tol) {
      throw Error(ErrorKind::Singular,
                  strfmt("singular matrix: pivot %.3e at column %zu (tolerance "
                         "%.3e)",
                         pivot_abs, col, pivot_tol));
    }
    if (pivot_row != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot_row, c), work(col, c));
        std::swap(inv(pivot_row, c), inv(col, c));
      }
    }
    const cplx pivot = work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) /= pivot;
      inv(col, c) /= pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const cplx factor = work(r, col);
      if (factor == cplx(0.0)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= factor * work(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

double spectral_norm(const ComplexMatrix& a) {
  HermitianEigen e = hermitian_eigen_jacobi(a.adjoint() * a);
  double top = e.values.empty() ? 0.0 : e.values.back();
  return std::sqrt(std::max(0.0, top));
}

double smallest_singular_value(const ComplexMatrix& a) {
  HermitianEigen e = hermitian_eigen_jacobi(a.adjoint() * a);
  double bottom = e.values.empty() ? 0.0 : e.values.front();
  return std::sqrt(std::max(0.0, bottom));
}

}  // namespace csf
