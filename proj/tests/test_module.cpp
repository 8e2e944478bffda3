#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "cstarframes/generate.hpp"
#include "cstarframes/module.hpp"
#include "support.hpp"

using namespace csf;
using namespace csf::test;

namespace {

const cplx kI(0.0, 1.0);

ModuleOperator random_operator(SeededRng& rng, const AlgebraShape& shape, std::size_t rank) {
  std::vector<AlgebraElement> coeffs;
  for (std::size_t i = 0; i < rank * rank; ++i) coeffs.push_back(random_element(rng, shape));
  return ModuleOperator(shape, rank, std::move(coeffs));
}

}  // namespace

TEST_CASE("inner reproduces the worked diagonal-algebra example") {
  // f = (a, b) in the rank-1 module over the two-scalar-block algebra:
  // inner(f, f) = diag(|a|^2, |b|^2).
  cplx a(1.0, 2.0), b(-0.5, 0.25);
  ModuleVector f(diag_shape(), {el11(a, b)});
  CHECK(approx_equal(inner(f, f), el11(std::norm(a), std::norm(b)), 1e-15));

  ModuleVector zero = ModuleVector::zero(diag_shape(), 1);
  CHECK(norm(inner(zero, f)) == 0.0);

  // rank 2 over a scalar algebra: (1, i) vs (i, 1) -> 1*(-i) + i*1 = 0.
  CHECK(norm(inner(vec2(1, kI), vec2(kI, 1))) <= 1e-15);

  CHECK_THROWS_AS(inner(f, ModuleVector::zero(diag_shape(), 2)), Error);
}

TEST_CASE("module_action") {
  SeededRng rng(21);
  AlgebraShape s({2, 1});
  ModuleVector f = random_vector(rng, s, 3);
  CHECK(approx_equal(module_action(AlgebraElement::unit(s), f), f, 0.0));
  CHECK(vec_norm(module_action(AlgebraElement::zero(s), f)) == 0.0);

  for (int trial = 0; trial < 10; ++trial) {
    AlgebraElement a = random_element(rng, s);
    ModuleVector g = random_vector(rng, s, 3);
    AlgebraElement lhs = inner(module_action(a, f), g);
    AlgebraElement rhs = mul(a, inner(f, g));
    CHECK(norm(sub(lhs, rhs)) <= 1e-12 * (1.0 + norm(lhs)));
  }
}

TEST_CASE("vec_norm") {
  CHECK(vec_norm(ModuleVector::zero(diag_shape(), 2)) == 0.0);
  CHECK(vec_norm(vec1(3.0)) == doctest::Approx(3.0));
  // Worked example with a = 1, b = 0.
  CHECK(vec_norm(ModuleVector(diag_shape(), {el11(1, 0)})) == doctest::Approx(1.0));
}

TEST_CASE("inner-product axioms on random instances") {
  SeededRng rng(22);
  AlgebraShape s({2, 1});
  for (int trial = 0; trial < 20; ++trial) {
    ModuleVector f = random_vector(rng, s, 2);
    ModuleVector g = random_vector(rng, s, 2);
    // (i) positivity, (ii) definiteness direction norm(f)=0 => f=0 is
    // structural; (iii) star symmetry; (iv) A-linearity checked above.
    CHECK(is_positive(inner(f, f)));
    CHECK(norm(sub(star(inner(f, g)), inner(g, f))) <= 1e-12);
    if (vec_norm(f) == 0.0) CHECK(norm(inner(f, f)) == 0.0);
  }
}

TEST_CASE("cauchy-schwarz inequality") {
  SeededRng rng(23);
  AlgebraShape s({2, 1});
  for (int trial = 0; trial < 50; ++trial) {
    ModuleVector f = random_vector(rng, s, 2);
    ModuleVector g = random_vector(rng, s, 2);
    double lhs = norm(inner(f, g));
    double rhs = norm(inner(f, f)) * norm(inner(g, g));
    CHECK(lhs * lhs <= rhs + 1e-10);
  }
}

TEST_CASE("op_apply") {
  AlgebraShape s = scalar_shape();
  ModuleOperator id = ModuleOperator::identity(s, 2);
  ModuleVector f = vec2(cplx(1, 1), 3.0);
  CHECK(approx_equal(op_apply(id, f), f, 0.0));
  CHECK(vec_norm(op_apply(ModuleOperator::zero(s, 2), f)) == 0.0);

  ModuleOperator two(s, 1, {el1(2.0)});
  CHECK(approx_equal(op_apply(two, vec1(3.0)), vec1(6.0), 0.0));
}

TEST_CASE("op_adjoint") {
  AlgebraShape s = scalar_shape();
  ModuleOperator id = ModuleOperator::identity(s, 2);
  CHECK(op_norm(op_sub(op_adjoint(id), id)) == 0.0);

  ModuleOperator ti(s, 1, {el1(kI)});
  CHECK(approx_equal(op_adjoint(ti).coeff(0, 0), el1(-kI), 0.0));

  SeededRng rng(24);
  AlgebraShape s2({2, 1});
  for (int trial = 0; trial < 10; ++trial) {
    ModuleOperator t = random_operator(rng, s2, 2);
    CHECK(op_norm(op_sub(op_adjoint(op_adjoint(t)), t)) == 0.0);
    ModuleVector f = random_vector(rng, s2, 2);
    ModuleVector g = random_vector(rng, s2, 2);
    AlgebraElement lhs = inner(op_apply(t, f), g);
    AlgebraElement rhs = inner(f, op_apply(op_adjoint(t), g));
    CHECK(norm(sub(lhs, rhs)) <= 1e-10 * (1.0 + norm(lhs)));
  }
}

TEST_CASE("op_compose and friends") {
  SeededRng rng(25);
  AlgebraShape s({2});
  ModuleOperator t = random_operator(rng, s, 2);
  ModuleOperator id = ModuleOperator::identity(s, 2);
  CHECK(op_norm(op_sub(op_compose(t, id), t)) == 0.0);

  ModuleOperator tt = op_compose(t, op_adjoint(t));
  CHECK(op_norm(op_sub(op_adjoint(tt), tt)) <= 1e-13 * (1.0 + op_norm(tt)));

  // rank-1 composition over a scalar algebra is plain multiplication
  ModuleOperator a(scalar_shape(), 1, {el1(cplx(2, 1))});
  ModuleOperator b(scalar_shape(), 1, {el1(cplx(0, 3))});
  CHECK(approx_equal(op_compose(a, b).coeff(0, 0), mul(el1(cplx(2, 1)), el1(cplx(0, 3))), 0.0));
}

TEST_CASE("complex_realization basics") {
  AlgebraShape s = scalar_shape();
  ModuleOperator id = ModuleOperator::identity(s, 3);
  ComplexMatrix r = complex_realization(id);
  CHECK((r - ComplexMatrix::identity(3)).frobenius_norm() == 0.0);

  ModuleOperator two(s, 1, {el1(2.0)});
  ComplexMatrix r2 = complex_realization(two);
  CHECK(r2.rows() == 1);
  CHECK(r2(0, 0) == cplx(2.0));
}

TEST_CASE("complex_realization matches direct application") {
  SeededRng rng(26);
  AlgebraShape s({2, 1});
  for (int trial = 0; trial < 10; ++trial) {
    ModuleOperator t = random_operator(rng, s, 2);
    ModuleVector f = random_vector(rng, s, 2);
    ComplexMatrix r = complex_realization(t);
    std::vector<cplx> direct = flatten(op_apply(t, f));
    std::vector<cplx> via = matvec(r, flatten(f));
    double err = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < direct.size(); ++i) {
      err += std::norm(direct[i] - via[i]);
      scale += std::norm(direct[i]);
    }
    CHECK(std::sqrt(err) <= 1e-12 * (1.0 + std::sqrt(scale)));
  }
}

TEST_CASE("complex_realization is a homomorphism and sends adjoints to adjoints") {
  SeededRng rng(27);
  AlgebraShape s({2});
  ModuleOperator t1 = random_operator(rng, s, 2);
  ModuleOperator t2 = random_operator(rng, s, 2);
  ComplexMatrix lhs = complex_realization(op_compose(t1, t2));
  ComplexMatrix rhs = complex_realization(t2) * complex_realization(t1);
  CHECK((lhs - rhs).frobenius_norm() <= 1e-12 * (1.0 + rhs.frobenius_norm()));

  ComplexMatrix adj = complex_realization(op_adjoint(t1));
  CHECK((adj - complex_realization(t1).adjoint()).frobenius_norm() <= 1e-13);
}

TEST_CASE("flatten/unflatten round-trip") {
  SeededRng rng(28);
  AlgebraShape s({2, 1});
  ModuleVector f = random_vector(rng, s, 3);
  ModuleVector back = unflatten(s, 3, flatten(f));
  CHECK(approx_equal(back, f, 0.0));
}

TEST_CASE("op_invert") {
  AlgebraShape s = scalar_shape();
  ModuleOperator id = ModuleOperator::identity(s, 2);
  CHECK(op_norm(op_sub(op_invert(id), id)) <= 1e-14);

  ModuleOperator d(diag_shape(), 1, {el11(2, 4)});
  CHECK(approx_equal(op_invert(d).coeff(0, 0), el11(0.5, 0.25), 1e-13));

  CHECK_THROWS_AS(op_invert(ModuleOperator::zero(s, 2)), Error);

  SeededRng rng(29);
  AlgebraShape s2({2, 1});
  for (int trial = 0; trial < 10; ++trial) {
    ModuleOperator t = op_add(random_operator(rng, s2, 2),
                              op_scale(4.0, ModuleOperator::identity(s2, 2)));
    ModuleOperator inv = op_invert(t);
    CHECK(op_norm(op_sub(op_compose(t, inv), ModuleOperator::identity(s2, 2))) <= 1e-9);
  }
}

TEST_CASE("operator_as_algebra_element is a star-isomorphism onto M_k(A)") {
  SeededRng rng(30);
  AlgebraShape s({2, 1});
  ModuleOperator t1 = random_operator(rng, s, 2);
  ModuleOperator t2 = random_operator(rng, s, 2);
  AlgebraElement a1 = operator_as_algebra_element(t1);
  AlgebraElement a2 = operator_as_algebra_element(t2);
  CHECK(norm(sub(operator_as_algebra_element(op_compose(t1, t2)), mul(a1, a2))) <= 1e-12);
  CHECK(norm(sub(operator_as_algebra_element(op_adjoint(t1)), star(a1))) == 0.0);
}

TEST_CASE("hermitian operator spectrum lifts eigenvectors correctly") {
  SeededRng rng(31);
  AlgebraShape s({2, 1});
  ModuleOperator t0 = random_operator(rng, s, 2);
  ModuleOperator t = op_compose(t0, op_adjoint(t0));  // self-adjoint positive
  OperatorSpectrum spec = hermitian_operator_spectrum(t);
  std::size_t b = spec.argmin_block();
  ModuleVector v = lift_eigenvector(s, 2, b, spec.blocks[b].vectors, 0);
  ModuleVector tv = op_apply(t, v);
  ModuleVector expect = scale(spec.blocks[b].values.front(), v);
  CHECK(vec_norm(sub(tv, expect)) <= 1e-10 * (1.0 + vec_norm(tv)));
}
