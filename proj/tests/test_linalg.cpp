#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tavis/linalg.hpp"
#include "tavis/spin_register.hpp"

using namespace tavis;

TEST_CASE("kron of identities is identity") {
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  CHECK(kron(id2, id2) == ComplexMatrix::Identity(4, 4));
}

TEST_CASE("kron places sigma_plus entry at (0,2)") {
  const ComplexMatrix k = kron(pauli(Pauli::plus), ComplexMatrix::Identity(2, 2));
  CHECK(k(0, 2) == Complex(1.0, 0.0));
  for (Index j = 0; j < 4; ++j) {
    if (j != 2) CHECK(k(0, j) == Complex(0.0, 0.0));
  }
}

TEST_CASE("kron agrees with an index-loop oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix a = oracle::random_matrix(rng, 2, 2);
    const ComplexMatrix b = oracle::random_matrix(rng, 3, 3);
    CHECK(kron(a, b) == oracle::kron_loop(a, b));
  }
  const ComplexMatrix a = oracle::random_matrix(rng, 2, 3);
  const ComplexMatrix b = oracle::random_matrix(rng, 4, 1);
  const ComplexMatrix k = kron(a, b);
  CHECK(k.rows() == 8);
  CHECK(k.cols() == 3);
  CHECK(k == oracle::kron_loop(a, b));
}

TEST_CASE("kron is associative") {
  std::mt19937_64 rng(11);
  const ComplexMatrix a = oracle::random_matrix(rng, 2, 2);
  const ComplexMatrix b = oracle::random_matrix(rng, 3, 2);
  const ComplexMatrix c = oracle::random_matrix(rng, 2, 3);
  CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-14);
}

TEST_CASE("expm_hermitian special cases") {
  const double t = 0.83;
  SUBCASE("zero generator gives identity") {
    const ComplexMatrix z = ComplexMatrix::Zero(4, 4);
    CHECK(max_abs_diff(expm_hermitian(z, Complex(0.0, -t)), ComplexMatrix::Identity(4, 4)) < 1e-15);
  }
  SUBCASE("diagonal generator gives diagonal phases") {
    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d(0, 0) = 1.5;
    d(1, 1) = -0.25;
    d(2, 2) = 4.0;
    const ComplexMatrix u = expm_hermitian(d, Complex(0.0, -t));
    for (Index k = 0; k < 3; ++k) {
      CHECK(std::abs(u(k, k) - std::exp(Complex(0.0, -t * d(k, k).real()))) < 1e-14);
    }
    CHECK(std::abs(u(0, 1)) < 1e-15);
  }
  SUBCASE("sigma_x rotation") {
    ComplexMatrix x(2, 2);
    x << 0.0, 1.0, 1.0, 0.0;
    ComplexMatrix expected(2, 2);
    expected << std::cos(t), Complex(0.0, -std::sin(t)), Complex(0.0, -std::sin(t)), std::cos(t);
    CHECK(max_abs_diff(expm_hermitian(x, Complex(0.0, -t)), expected) < 1e-14);
  }
}

TEST_CASE("expm_hermitian matches a Taylor-series oracle") {
  std::mt19937_64 rng(3);
  for (int n : {2, 5, 9}) {
    const ComplexMatrix h = oracle::random_hermitian(rng, n);
    const double t = 1.7;
    CHECK(max_abs_diff(expm_hermitian(h, Complex(0.0, -t)),
                       oracle::expm_taylor(Complex(0.0, -t) * h)) < 1e-12);
    // Real scale too: exp(0.3 h).
    CHECK(max_abs_diff(expm_hermitian(h, 0.3), oracle::expm_taylor(0.3 * h)) < 1e-12);
  }
}

TEST_CASE("expm_hermitian unitarity and group law on random inputs") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> time(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix h = oracle::random_hermitian(rng, 6);
    const double t = time(rng);
    const double s = time(rng);
    const ComplexMatrix ut = expm_hermitian(h, Complex(0.0, -t));
    const ComplexMatrix us = expm_hermitian(h, Complex(0.0, -s));
    CHECK(max_abs_diff(ut.adjoint() * ut, ComplexMatrix::Identity(6, 6)) < 1e-10);
    CHECK(max_abs_diff(ut * us, expm_hermitian(h, Complex(0.0, -(t + s)))) < 1e-10);
  }
}

TEST_CASE("expm_hermitian rejects non-Hermitian input with the defect") {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 1) = 1.0;
  try {
    expm_hermitian(a, Complex(0.0, -1.0));
    FAIL("expected NonHermitianError");
  } catch (const NonHermitianError& e) {
    CHECK(e.defect() == doctest::Approx(1.0));
    CHECK(std::string(e.what()).find("max|A - A^dagger|") != std::string::npos);
  }
  // A defect at rounding level is accepted.
  ComplexMatrix b = ComplexMatrix::Identity(2, 2);
  b(0, 1) = 1e-14;
  CHECK_NOTHROW(expm_hermitian(b, Complex(0.0, -1.0)));
}

TEST_CASE("op_norm_diff") {
  std::mt19937_64 rng(5);
  const ComplexMatrix a = oracle::random_matrix(rng, 5, 5);
  const std::vector<Index> all{0, 1, 2, 3, 4};

  CHECK(op_norm_diff(a, a, all) == 0.0);

  ComplexMatrix b = a;
  b(0, 0) += 0.5;
  CHECK(op_norm_diff(a, b, {1, 2, 3, 4}) == 0.0);
  CHECK(op_norm_diff(a, b, all) == doctest::Approx(0.5));

  const ComplexMatrix c = oracle::random_matrix(rng, 5, 5);
  const std::vector<Index> mask{0, 2, 3};
  double expected = 0.0;
  for (Index i : mask)
    for (Index j : mask) expected = std::max(expected, std::abs(a(i, j) - c(i, j)));
  CHECK(op_norm_diff(a, c, mask) == expected);

  CHECK_THROWS_AS(op_norm_diff(a, ComplexMatrix::Zero(4, 4), all), DimensionMismatch);
}
