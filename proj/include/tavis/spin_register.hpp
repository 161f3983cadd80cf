#ifndef TAVIS_SPIN_REGISTER_HPP
#define TAVIS_SPIN_REGISTER_HPP

#include "tavis/linalg.hpp"

namespace tavis {

/// Register of n two-level atoms, n in 1..4.
///
/// Basis index b encodes atom states big-endian (atom 1 is the most
/// significant bit). A bit value 0 is the upper level (sigma_3 = +1), so b = 0
/// is the all-excited state and b = L-1 the all-ground state.
class AtomRegister {
 public:
  static constexpr int kMaxAtoms = 4;

  explicit AtomRegister(int atoms);

  int atoms() const noexcept { return atoms_; }
  int levels() const noexcept { return 1 << atoms_; }

  /// Twice the S_3 eigenvalue of basis state b: (#excited - #ground).
  int twice_s3(int b) const;

 private:
  int atoms_;
};

enum class Pauli { plus, minus, three };

/// 2x2 sigma_+, sigma_-, sigma_3 in the (upper, lower) basis.
ComplexMatrix pauli(Pauli which);

/// 1_2 x ... x sigma x ... x 1_2 with sigma at 1-based position `atom`.
ComplexMatrix sigma_embed(const AtomRegister& reg, Pauli which, int atom);

struct CollectiveSpins {
  ComplexMatrix s_plus;
  ComplexMatrix s_minus;
  ComplexMatrix s3;
};

CollectiveSpins collective(const AtomRegister& reg);

struct Su2Residuals {
  double s3_plus;   // max|[S3,S+] - S+|
  double s3_minus;  // max|[S3,S-] + S-|
  double plus_minus;  // max|[S+,S-] - 2 S3|

  double worst() const;
};

Su2Residuals su2_check(const CollectiveSpins& spins);

}  // namespace tavis

#endif  // TAVIS_SPIN_REGISTER_HPP
