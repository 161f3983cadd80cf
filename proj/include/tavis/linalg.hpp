#ifndef TAVIS_LINALG_HPP
#define TAVIS_LINALG_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace tavis {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Absolute tolerance on max|A - A^dagger| for a matrix to count as Hermitian.
inline constexpr double kHermitianTolerance = 1e-12;

class NonHermitianError : public std::domain_error {
 public:
  explicit NonHermitianError(double defect);
  double defect() const noexcept { return defect_; }

 private:
  double defect_;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Kronecker product: result((i*b.rows()+k), (j*b.cols()+l)) = a(i,j)*b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// max|A - A^dagger| over all entries; A must be square.
double hermiticity_defect(const ComplexMatrix& a);

/// exp(scale * h) for Hermitian h, computed as V diag(exp(scale*eig)) V^dagger.
/// Throws NonHermitianError when the defect exceeds kHermitianTolerance.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, Complex scale);

/// max |a(i,j) - b(i,j)| for i, j drawn from `mask`. An empty mask yields 0.
double op_norm_diff(const ComplexMatrix& a, const ComplexMatrix& b,
                    const std::vector<Index>& mask);

/// Unmasked max entrywise difference.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Restriction of `a` to the rows and columns listed in `mask`.
ComplexMatrix restrict_to(const ComplexMatrix& a, const std::vector<Index>& mask);

}  // namespace tavis

#endif  // TAVIS_LINALG_HPP
