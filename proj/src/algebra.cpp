#include "cstarframes/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace csf {

AlgebraShape::AlgebraShape(std::vector<std::size_t> block_dims)
    : dims_(std::move(block_dims)) {
  if (dims_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "algebra shape must have at least one block");
  }
  for (std::size_t d : dims_) {
    if (d == 0) {
      throw Error(ErrorKind::InvalidArgument, "algebra block dimension must be >= 1");
    }
  }
}

std::size_t AlgebraShape::total_dim() const {
  std::size_t s = 0;
  for (std::size_t d : dims_) s += d * d;
  return s;
}

std::string AlgebraShape::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) os << ",";
    os << dims_[i];
  }
  os << "]";
  return os.str();
}

AlgebraElement::AlgebraElement(AlgebraShape shape, std::vector<ComplexMatrix> blocks)
    : shape_(std::move(shape)), blocks_(std::move(blocks)) {
  if (blocks_.size() != shape_.block_count()) {
    throw Error(ErrorKind::ShapeMismatch,
                strfmt("element has %zu blocks, shape %s expects %zu",
                       blocks_.size(), shape_.to_string().c_str(),
                       shape_.block_count()));
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    std::size_t n = shape_.block_dim(i);
    if (blocks_[i].rows() != n || blocks_[i].cols() != n) {
      throw Error(ErrorKind::ShapeMismatch,
                  strfmt("block %zu is %zux%zu, shape %s expects %zux%zu", i,
                         blocks_[i].rows(), blocks_[i].cols(),
                         shape_.to_string().c_str(), n, n));
    }
  }
}

AlgebraElement AlgebraElement::zero(const AlgebraShape& shape) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(shape.block_count());
  for (std::size_t i = 0; i < shape.block_count(); ++i)
    blocks.emplace_back(shape.block_dim(i), shape.block_dim(i));
  return AlgebraElement(shape, std::move(blocks));
}

AlgebraElement AlgebraElement::unit(const AlgebraShape& shape) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(shape.block_count());
  for (std::size_t i = 0; i < shape.block_count(); ++i)
    blocks.push_back(ComplexMatrix::identity(shape.block_dim(i)));
  return AlgebraElement(shape, std::move(blocks));
}

AlgebraElement AlgebraElement::scalar(const AlgebraShape& shape, cplx z) {
  return scale(z, unit(shape));
}

namespace {

void require_same_shape(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.shape() != b.shape()) {
    throw Error(ErrorKind::ShapeMismatch,
                strfmt("algebra shape mismatch: %s vs %s",
                       a.shape().to_string().c_str(),
                       b.shape().to_string().c_str()));
  }
}

template <typename F>
AlgebraElement blockwise(const AlgebraElement& a, F&& f) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(a.block_count());
  for (std::size_t i = 0; i < a.block_count(); ++i) blocks.push_back(f(a.block(i)));
  return AlgebraElement(a.shape(), std::move(blocks));
}

template <typename F>
AlgebraElement blockwise2(const AlgebraElement& a, const AlgebraElement& b, F&& f) {
  require_same_shape(a, b);
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(a.block_count());
  for (std::size_t i = 0; i < a.block_count(); ++i)
    blocks.push_back(f(a.block(i), b.block(i)));
  return AlgebraElement(a.shape(), std::move(blocks));
}

}  // namespace

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  return blockwise2(a, b, [](const ComplexMatrix& x, const ComplexMatrix& y) { return x + y; });
}

AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) {
  return blockwise2(a, b, [](const ComplexMatrix& x, const ComplexMatrix& y) { return x - y; });
}

AlgebraElement neg(const AlgebraElement& a) {
  return blockwise(a, [](const ComplexMatrix& x) { return cplx(-1.0) * x; });
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  return blockwise2(a, b, [](const ComplexMatrix& x, const ComplexMatrix& y) { return x * y; });
}

AlgebraElement scale(cplx z, const AlgebraElement& a) {
  return blockwise(a, [&](const ComplexMatrix& x) { return z * x; });
}

AlgebraElement star(const AlgebraElement& a) {
  return blockwise(a, [](const ComplexMatrix& x) { return x.adjoint(); });
}

std::vector<HermitianEigen> hermitian_eigen(const AlgebraElement& a) {
  double dev = norm(sub(a, star(a)));
  if (dev > 1e-9 * (1.0 + norm(a))) {
    throw Error(ErrorKind::InvalidArgument,
                strfmt("hermitian_eigen: input deviates from self-adjoint by %.3e", dev));
  }
  std::vector<HermitianEigen> out;
  out.reserve(a.block_count());
  for (std::size_t i = 0; i < a.block_count(); ++i) {
    // Work on the exactly Hermitian part so rounding in the caller's data
    // cannot leak into the solver.
    ComplexMatrix h = cplx(0.5) * (a.block(i) + a.block(i).adjoint());
    out.push_back(hermitian_eigen_jacobi(h));
  }
  return out;
}

double norm(const AlgebraElement& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.block_count(); ++i) {
    const ComplexMatrix& m = a.block(i);
    HermitianEigen e = hermitian_eigen_jacobi(m.adjoint() * m);
    if (!e.values.empty()) best = std::max(best, std::sqrt(std::max(0.0, e.values.back())));
  }
  return best;
}

bool is_positive(const AlgebraElement& a, double tol) {
  const double slack = tol * (1.0 + norm(a));
  if (norm(sub(a, star(a))) > slack) return false;
  for (std::size_t i = 0; i < a.block_count(); ++i) {
    ComplexMatrix h = cplx(0.5) * (a.block(i) + a.block(i).adjoint());
    HermitianEigen e = hermitian_eigen_jacobi(h);
    if (!e.values.empty() && e.values.front() < -slack) return false;
  }
  return true;
}

bool leq(const AlgebraElement& a, const AlgebraElement& b, double tol) {
  require_same_shape(a, b);
  return is_positive(sub(b, a), tol);
}

AlgebraElement inverse(const AlgebraElement& a) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(a.block_count());
  for (std::size_t i = 0; i < a.block_count(); ++i) {
    try {
      blocks.push_back(gauss_invert(a.block(i)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Singular) throw;
      throw Error(ErrorKind::Singular,
                  strfmt("algebra element not invertible: block %zu has min "
                         "singular value %.3e",
                         i, smallest_singular_value(a.block(i))));
    }
  }
  AlgebraElement inv(a.shape(), std::move(blocks));
  double residual = norm(sub(mul(a, inv), AlgebraElement::unit(a.shape())));
  double scale_ref = 1.0 + norm(a) * norm(inv);
  if (residual > 1e-10 * scale_ref) {
    throw Error(ErrorKind::Singular,
                strfmt("algebra inverse failed residual check: %.3e", residual));
  }
  return inv;
}

AlgebraElement sqrt_positive(const AlgebraElement& a, double tol) {
  if (!is_positive(a, tol)) {
    throw Error(ErrorKind::InvalidArgument, "sqrt_positive: input is not positive");
  }
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(a.block_count());
  for (std::size_t i = 0; i < a.block_count(); ++i) {
    ComplexMatrix h = cplx(0.5) * (a.block(i) + a.block(i).adjoint());
    HermitianEigen e = hermitian_eigen_jacobi(h);
    const std::size_t n = h.rows();
    ComplexMatrix root(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      double lam = std::sqrt(std::max(0.0, e.values[c]));
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t r2 = 0; r2 < n; ++r2) {
          root(r, r2) += lam * e.vectors(r, c) * std::conj(e.vectors(r2, c));
        }
      }
    }
    blocks.push_back(std::move(root));
  }
  return AlgebraElement(a.shape(), std::move(blocks));
}

AlgebraElement abs_sq_star(const AlgebraElement& a) { return mul(a, star(a)); }

bool approx_equal(const AlgebraElement& a, const AlgebraElement& b, double tol) {
  if (a.shape() != b.shape()) return false;
  return norm(sub(a, b)) <= tol;
}

}  // namespace csf
