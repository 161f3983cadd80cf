#include "tavis/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tavis {

namespace {

std::string defect_message(double defect) {
  std::ostringstream os;
  os << "matrix is not Hermitian: max|A - A^dagger| = " << defect
     << " exceeds " << kHermitianTolerance;
  return os.str();
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream os;
    os << "dimension mismatch: " << a.rows() << "x" << a.cols() << " vs "
       << b.rows() << "x" << b.cols();
    throw DimensionMismatch(os.str());
  }
}

}  // namespace

NonHermitianError::NonHermitianError(double defect)
    : std::domain_error(defect_message(defect)), defect_(defect) {}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double hermiticity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatch("hermiticity check needs a square matrix");
  }
  double worst = 0.0;
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i <= j; ++i) {
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return worst;
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, Complex scale) {
  const double defect = hermiticity_defect(h);
  if (defect > kHermitianTolerance) throw NonHermitianError(defect);
  if (h.rows() == 0) return h;

  // Symmetrize so the solver sees an exactly Hermitian input.
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigendecomposition did not converge");
  }
  const ComplexMatrix& v = solver.eigenvectors();
  ComplexVector phases(v.cols());
  for (Index k = 0; k < v.cols(); ++k) {
    phases(k) = std::exp(scale * solver.eigenvalues()(k));
  }
  return v * phases.asDiagonal() * v.adjoint();
}

double op_norm_diff(const ComplexMatrix& a, const ComplexMatrix& b,
                    const std::vector<Index>& mask) {
  require_same_shape(a, b);
  double worst = 0.0;
  for (Index j : mask) {
    if (j < 0 || j >= a.cols()) throw DimensionMismatch("mask index out of range");
    for (Index i : mask) {
      if (i < 0 || i >= a.rows()) throw DimensionMismatch("mask index out of range");
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    }
  }
  return worst;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

ComplexMatrix restrict_to(const ComplexMatrix& a, const std::vector<Index>& mask) {
  ComplexMatrix out(static_cast<Index>(mask.size()), static_cast<Index>(mask.size()));
  for (std::size_t c = 0; c < mask.size(); ++c) {
    for (std::size_t r = 0; r < mask.size(); ++r) {
      out(static_cast<Index>(r), static_cast<Index>(c)) = a(mask[r], mask[c]);
    }
  }
  return out;
}

}  // namespace tavis
