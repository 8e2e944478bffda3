#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "cstarframes/algebra.hpp"
#include "cstarframes/generate.hpp"
#include "support.hpp"

using namespace csf;
using namespace csf::test;

namespace {
const cplx kI(0.0, 1.0);
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(AlgebraShape({}), Error);
  CHECK_THROWS_AS(AlgebraShape({1, 0}), Error);
  CHECK(diag_shape().total_dim() == 2);
  CHECK(AlgebraShape({2, 1}).total_dim() == 5);
}

TEST_CASE("add") {
  AlgebraShape s = diag_shape();
  auto one = AlgebraElement::unit(s);
  auto zero = AlgebraElement::zero(s);
  CHECK(approx_equal(add(one, zero), one, 0.0));
  CHECK(approx_equal(add(el11(1, 2), el11(3, 4)), el11(4, 6), 0.0));

  SeededRng rng(1);
  auto a = random_element(rng, AlgebraShape({2, 1}));
  CHECK(norm(add(a, neg(a))) == 0.0);

  CHECK_THROWS_AS(add(one, AlgebraElement::unit(scalar_shape())), Error);
}

TEST_CASE("mul") {
  SeededRng rng(2);
  auto a = random_element(rng, mat2_shape());
  CHECK(approx_equal(mul(a, AlgebraElement::unit(mat2_shape())), a, 0.0));

  auto nilpotent = el2(0, 1, 0, 0);
  CHECK(norm(mul(nilpotent, nilpotent)) == 0.0);

  CHECK(approx_equal(mul(el11(2, 3), el11(5, 7)), el11(10, 21), 0.0));
}

TEST_CASE("star") {
  CHECK(approx_equal(star(AlgebraElement::unit(diag_shape())),
                     AlgebraElement::unit(diag_shape()), 0.0));
  CHECK(approx_equal(star(el1(cplx(1, 1))), el1(cplx(1, -1)), 0.0));
  CHECK(approx_equal(star(el2(0, 1, 0, 0)), el2(0, 0, 1, 0), 0.0));

  SeededRng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_element(rng, AlgebraShape({2, 1}));
    auto b = random_element(rng, AlgebraShape({2, 1}));
    CHECK(approx_equal(star(star(a)), a, 0.0));
    CHECK(norm(sub(star(mul(a, b)), mul(star(b), star(a)))) <= 1e-14);
  }
}

TEST_CASE("hermitian_eigen") {
  auto id2 = AlgebraElement::unit(mat2_shape());
  auto eig = hermitian_eigen(id2);
  CHECK(eig[0].values[0] == doctest::Approx(1.0));
  CHECK(eig[0].values[1] == doctest::Approx(1.0));

  // Closed-form oracle for [[2,1],[1,2]]: roots of the characteristic
  // polynomial lambda^2 - 4 lambda + 3.
  auto sym = el2(2, 1, 1, 2);
  auto e2 = hermitian_eigen(sym);
  CHECK(e2[0].values[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(e2[0].values[1] == doctest::Approx(3.0).epsilon(1e-13));

  auto d = el11(5, -2);
  auto e3 = hermitian_eigen(d);
  CHECK(e3[0].values[0] == doctest::Approx(5.0));
  CHECK(e3[1].values[0] == doctest::Approx(-2.0));

  CHECK_THROWS_AS(hermitian_eigen(el2(0, 1, 0, 0)), Error);
}

TEST_CASE("hermitian_eigen spectral reconstruction on random input") {
  SeededRng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    auto a0 = random_element(rng, AlgebraShape({2, 2}));
    auto a = scale(0.5, add(a0, star(a0)));
    auto eig = hermitian_eigen(a);
    AlgebraElement rebuilt = AlgebraElement::zero(a.shape());
    std::vector<ComplexMatrix> blocks;
    for (std::size_t i = 0; i < a.block_count(); ++i) {
      std::size_t n = a.shape().block_dim(i);
      ComplexMatrix m(n, n);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t r2 = 0; r2 < n; ++r2)
            m(r, r2) += eig[i].values[c] * eig[i].vectors(r, c) *
                        std::conj(eig[i].vectors(r2, c));
      blocks.push_back(std::move(m));
    }
    rebuilt = AlgebraElement(a.shape(), blocks);
    CHECK(norm(sub(a, rebuilt)) <= 1e-10 * (1.0 + norm(a)));
  }
}

TEST_CASE("norm") {
  CHECK(norm(AlgebraElement::unit(diag_shape())) == doctest::Approx(1.0));
  CHECK(norm(el2(3, 0, 0, -4)) == doctest::Approx(4.0));

  SeededRng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_element(rng, AlgebraShape({2, 1}));
    double lhs = norm(mul(star(a), a));
    double rhs = norm(a) * norm(a);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + rhs));  // C*-identity
  }
}

TEST_CASE("is_positive") {
  CHECK(is_positive(AlgebraElement::zero(mat2_shape())));
  CHECK(is_positive(el2(1, 0, 0, 0)));
  CHECK_FALSE(is_positive(el2(1, 0, 0, -0.5)));

  SeededRng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_element(rng, AlgebraShape({2, 1}));
    CHECK(is_positive(mul(a, star(a))));
  }
}

TEST_CASE("leq") {
  AlgebraShape s = mat2_shape();
  CHECK(leq(AlgebraElement::zero(s), AlgebraElement::unit(s)));
  CHECK(leq(el11(1, 2), el11(2, 2)));
  CHECK_FALSE(leq(el11(1, 3), el11(2, 2)));  // incomparable pair
  CHECK_THROWS_AS(leq(AlgebraElement::unit(s), el1(1)), Error);
}

TEST_CASE("order transitivity at stacked tolerance") {
  SeededRng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    AlgebraShape s({2});
    auto a = random_element(rng, s);
    auto base = mul(a, star(a));
    auto b = add(base, scale(0.1 + rng.unit(), AlgebraElement::unit(s)));
    auto c = add(b, mul(random_element(rng, s), star(random_element(rng, s))));
    double tol = kDefaultTol;
    if (leq(base, b, tol) && leq(b, c, tol)) {
      CHECK(leq(base, c, 3 * tol));
    }
  }
}

TEST_CASE("inverse") {
  auto one = AlgebraElement::unit(diag_shape());
  CHECK(approx_equal(inverse(one), one, 1e-14));
  CHECK(approx_equal(inverse(el11(2, 4)), el11(0.5, 0.25), 1e-14));

  try {
    inverse(el11(1, 0));
    FAIL("expected singular error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singular);
    CHECK(std::string(e.what()).find("block 1") != std::string::npos);
  }

  SeededRng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = add(random_element(rng, AlgebraShape({2, 1})),
                 AlgebraElement::scalar(AlgebraShape({2, 1}), 4.0));
    CHECK(norm(sub(mul(a, inverse(a)), AlgebraElement::unit(a.shape()))) <= 1e-10);
  }
}

TEST_CASE("sqrt_positive") {
  auto one = AlgebraElement::unit(diag_shape());
  CHECK(approx_equal(sqrt_positive(one), one, 1e-14));
  CHECK(approx_equal(sqrt_positive(el11(4, 9)), el11(2, 3), 1e-13));
  CHECK_THROWS_AS(sqrt_positive(el11(1, -1)), Error);

  SeededRng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    auto b = random_element(rng, AlgebraShape({2, 1}));
    auto p = mul(b, star(b));
    auto r = sqrt_positive(p);
    CHECK(is_positive(r));
    CHECK(norm(sub(mul(r, r), p)) <= 1e-10 * (1.0 + norm(p)));
  }
}

TEST_CASE("abs_sq_star") {
  auto one = AlgebraElement::unit(diag_shape());
  CHECK(approx_equal(abs_sq_star(one), one, 0.0));
  CHECK(approx_equal(abs_sq_star(el1(cplx(1, 1))), el1(2), 1e-15));

  SeededRng rng(10);
  auto a = random_element(rng, AlgebraShape({2, 1}));
  CHECK(is_positive(abs_sq_star(a)));
}

TEST_CASE("scalar constructor ties to the unit") {
  auto s = AlgebraElement::scalar(diag_shape(), kI);
  CHECK(approx_equal(s, el11(kI, kI), 0.0));
}
