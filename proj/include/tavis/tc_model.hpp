#ifndef TAVIS_TC_MODEL_HPP
#define TAVIS_TC_MODEL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "tavis/fock.hpp"
#include "tavis/linalg.hpp"
#include "tavis/spin_register.hpp"

namespace tavis {

/// Operator on (2^n atomic levels) x (cutoff photon levels), atoms first:
/// composite index = atomic * cutoff + photon.
using CompositeOperator = ComplexMatrix;

struct ModelParams {
  double omega = 1.0;  // field frequency
  double delta = 1.0;  // atomic splitting
  double g = 1.0;      // coupling
  int atoms = 4;
  FockSpace space{32};

  bool resonant() const noexcept { return delta == omega; }
  AtomRegister reg() const { return AtomRegister(atoms); }
};

/// H = omega 1 x a^dagger a + delta S3 x 1 + g (S+ x a + S- x a^dagger).
CompositeOperator hamiltonian(const ModelParams& p);

/// The same Hamiltonian summed atom by atom from embedded Pauli operators.
CompositeOperator hamiltonian_per_atom(const ModelParams& p);

/// omega 1 x a^dagger a + delta S3 x 1.
CompositeOperator free_hamiltonian(const ModelParams& p);

/// A_n = S+ x a + S- x a^dagger (coupling not included).
CompositeOperator interaction(const AtomRegister& reg, const FockSpace& space);
CompositeOperator interaction(const ModelParams& p);

/// E = S3 x 1 + 1 x a^dagger a, the conserved excitation number.
CompositeOperator excitation_operator(const AtomRegister& reg, const FockSpace& space);

/// The four-atom interaction written out entry by entry from its printed
/// 16x16 operator-valued form.
CompositeOperator a4_explicit(const FockSpace& space);

/// Constant orthogonal 16x16 transform that block-diagonalizes A_4.
ComplexMatrix transform_t();

enum class BlockKind { zero, spin_one, spin_two };

struct BlockDescriptor {
  BlockKind kind;
  int offset;  // first atomic row in the transformed basis
  int size;    // atomic rows
};

/// 0 + B1 + 0 + B1 + B1 + B2 at atomic offsets 0, 1, 4, 5, 8, 11.
std::vector<BlockDescriptor> four_atom_layout();

/// Spin-1 block: tridiagonal with sqrt(2) a above and sqrt(2) a^dagger below.
CompositeOperator b1_generator(const FockSpace& space);

/// Spin-2 block, internal order m = +2..-2: couplings 2a, sqrt6 a, sqrt6 a, 2a.
CompositeOperator b2_generator(const FockSpace& space);

/// (left x 1) * op * (right x 1) for left/right acting on the atomic factor.
CompositeOperator atomic_sandwich(const ComplexMatrix& left, const CompositeOperator& op,
                                  const ComplexMatrix& right, int cutoff);

class DecompositionError : public std::runtime_error {
 public:
  DecompositionError(double leak, Index row, Index col);
  double leak() const noexcept { return leak_; }

 private:
  double leak_;
};

struct OperatorBlock {
  BlockDescriptor descriptor;
  CompositeOperator op;  // (size * cutoff) square
};

inline constexpr double kBlockLeakTolerance = 1e-12;

/// Computes (T x 1)^dagger A4 (T x 1), checks that everything outside the
/// layout's diagonal blocks vanishes, and returns the blocks.
std::vector<OperatorBlock> block_decompose(const CompositeOperator& a4,
                                           const ComplexMatrix& t_mat,
                                           const std::vector<BlockDescriptor>& layout,
                                           int cutoff, double* max_leak = nullptr);

}  // namespace tavis

#endif  // TAVIS_TC_MODEL_HPP
