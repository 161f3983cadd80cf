#ifndef TAVIS_ORACLE_HPP
#define TAVIS_ORACLE_HPP

#include <stdexcept>
#include <vector>

#include "tavis/tc_model.hpp"

namespace tavis {

/// Composite indices sharing one eigenvalue of E = S3 x 1 + 1 x N.
/// `key` is 2E shifted so the smallest possible key is zero.
struct SectorBasis {
  int key;
  std::vector<Index> indices;

  Index dim() const noexcept { return static_cast<Index>(indices.size()); }
};

/// Partition of an (atomic rows) x (cutoff) space by excitation number.
/// `twice_weights[r]` is twice the S3 eigenvalue of atomic row r.
std::vector<SectorBasis> sectors_from_weights(const std::vector<int>& twice_weights,
                                              int cutoff);

std::vector<SectorBasis> sectors(const AtomRegister& reg, const FockSpace& space);

/// Atomic weights of the spin-1 and spin-2 blocks (S3 = +1..-1, +2..-2).
std::vector<int> spin_one_weights();
std::vector<int> spin_two_weights();

class SectorLeakError : public std::runtime_error {
 public:
  SectorLeakError(Index row, Index col, double magnitude);
  Index row() const noexcept { return row_; }
  Index col() const noexcept { return col_; }

 private:
  Index row_;
  Index col_;
};

inline constexpr double kSectorLeakTolerance = 1e-12;

/// exp(scale * op) computed sector by sector. `op` must be Hermitian and must
/// not couple different sectors.
CompositeOperator exp_sector(const CompositeOperator& op, const std::vector<SectorBasis>& parts,
                             Complex scale);

/// Whole-space exponential; slower second oracle with an independent error model.
CompositeOperator exp_dense(const CompositeOperator& op, Complex scale);

/// exp(-itH) for any detuning.
CompositeOperator u_oracle(double t, const ModelParams& p);

/// exp(-itg A_n).
CompositeOperator interaction_oracle(double t, double g, const AtomRegister& reg,
                                     const FockSpace& space);

}  // namespace tavis

#endif  // TAVIS_ORACLE_HPP
