// Independent reference computations used only by the tests. Nothing here
// calls into the library's eigensolver path.
#ifndef TAVIS_TESTS_ORACLES_HPP
#define TAVIS_TESTS_ORACLES_HPP

#include <cmath>
#include <random>

#include "tavis/linalg.hpp"

namespace oracle {

using tavis::Complex;
using tavis::ComplexMatrix;
using tavis::Index;

inline ComplexMatrix kron_loop(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// exp(a) by scaling and squaring a truncated Taylor series.
inline ComplexMatrix expm_taylor(const ComplexMatrix& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
  const ComplexMatrix scaled = a / std::pow(2.0, squarings);
  ComplexMatrix term = ComplexMatrix::Identity(a.rows(), a.cols());
  ComplexMatrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

// sum_k (-lambda)^k x^{2k} / (2k)!, the series of cos(x sqrt(lambda)).
inline double cos_series(double lambda, double x, int terms = 20) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < terms; ++k) {
    term *= -lambda * x * x / ((2.0 * k - 1.0) * (2.0 * k));
    sum += term;
  }
  return sum;
}

// sum_k (-lambda)^k x^{2k+1} / (2k+1)!, the series of sin(x sqrt(lambda))/sqrt(lambda).
inline double sinc_series(double lambda, double x, int terms = 20) {
  double term = x;
  double sum = x;
  for (int k = 1; k < terms; ++k) {
    term *= -lambda * x * x / ((2.0 * k) * (2.0 * k + 1.0));
    sum += term;
  }
  return sum;
}

inline double poisson_pmf(double mean, int m) {
  double p = std::exp(-mean);
  for (int k = 1; k <= m; ++k) p *= mean / k;
  return p;
}

inline ComplexMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = Complex(u(rng), u(rng));
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, Index n) {
  const ComplexMatrix m = random_matrix(rng, n, n);
  return 0.5 * (m + m.adjoint());
}

}  // namespace oracle

#endif
