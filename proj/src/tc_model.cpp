#include "tavis/tc_model.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <string_view>

namespace tavis {

namespace {

ComplexMatrix identity(Index n) { return ComplexMatrix::Identity(n, n); }

// Printed A_4: 'a' = a, 'd' = a^dagger, '0' and '.' (blank) = 0.
constexpr std::array<std::string_view, 16> kA4Pattern = {
    "0aa0a000a.......",  //
    "d00a0a00.a......",  //
    "d00a00a0..a.....",  //
    "0dd0000a...a....",  //
    "d0000aa0....a...",  //
    "0d00d00a.....a..",  //
    "00d0d00a......a.",  //
    "000d0dd0.......a",  //
    "d.......0aa0a000",  //
    ".d......d00a0a00",  //
    "..d.....d00a00a0",  //
    "...d....0dd0000a",  //
    "....d...d0000aa0",  //
    ".....d..0d00d00a",  //
    "......d.00d0d00a",  //
    ".......d000d0dd0",
};

}  // namespace

CompositeOperator free_hamiltonian(const ModelParams& p) {
  const AtomRegister reg = p.reg();
  const Ladder lad = ladder(p.space);
  const CollectiveSpins spins = collective(reg);
  return p.omega * kron(identity(reg.levels()), lad.n_op) +
         p.delta * kron(spins.s3, identity(p.space.cutoff()));
}

CompositeOperator interaction(const AtomRegister& reg, const FockSpace& space) {
  const Ladder lad = ladder(space);
  const CollectiveSpins spins = collective(reg);
  return kron(spins.s_plus, lad.a) + kron(spins.s_minus, lad.a_dag);
}

CompositeOperator interaction(const ModelParams& p) { return interaction(p.reg(), p.space); }

CompositeOperator hamiltonian(const ModelParams& p) {
  return free_hamiltonian(p) + p.g * interaction(p);
}

CompositeOperator hamiltonian_per_atom(const ModelParams& p) {
  const AtomRegister reg = p.reg();
  const Ladder lad = ladder(p.space);
  const Index levels = reg.levels();
  CompositeOperator h = p.omega * kron(identity(levels), lad.n_op);
  for (int i = 1; i <= reg.atoms(); ++i) {
    h += 0.5 * p.delta * kron(sigma_embed(reg, Pauli::three, i), identity(p.space.cutoff()));
    h += p.g * (kron(sigma_embed(reg, Pauli::plus, i), lad.a) +
                kron(sigma_embed(reg, Pauli::minus, i), lad.a_dag));
  }
  return h;
}

CompositeOperator excitation_operator(const AtomRegister& reg, const FockSpace& space) {
  const Ladder lad = ladder(space);
  return kron(collective(reg).s3, identity(space.cutoff())) +
         kron(identity(reg.levels()), lad.n_op);
}

CompositeOperator a4_explicit(const FockSpace& space) {
  const Ladder lad = ladder(space);
  const Index m = space.cutoff();
  CompositeOperator out = CompositeOperator::Zero(16 * m, 16 * m);
  for (Index r = 0; r < 16; ++r) {
    for (Index c = 0; c < 16; ++c) {
      const char entry = kA4Pattern[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (entry == 'a') {
        out.block(r * m, c * m, m, m) = lad.a;
      } else if (entry == 'd') {
        out.block(r * m, c * m, m, m) = lad.a_dag;
      }
    }
  }
  return out;
}

ComplexMatrix transform_t() {
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  const double r6 = 1.0 / std::sqrt(6.0);
  const double q = 1.0 / (2.0 * std::sqrt(3.0));
  const double s23 = std::sqrt(2.0 / 3.0);
  const double s32 = std::sqrt(3.0) / 2.0;
  const double h = 0.5;

  const double rows[16][16] = {
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
      {0, r2, 0, 0, 0, r6, 0, 0, q, 0, 0, 0, h, 0, 0, 0},
      {0, -r2, 0, 0, 0, r6, 0, 0, q, 0, 0, 0, h, 0, 0, 0},
      {0, 0, 0, 0, r3, 0, r3, 0, 0, r6, 0, 0, 0, r6, 0, 0},
      {0, 0, 0, 0, 0, -s23, 0, 0, q, 0, 0, 0, h, 0, 0, 0},
      {h, 0, h, 0, -q, 0, -q, 0, 0, r6, 0, 0, 0, r6, 0, 0},
      {-h, 0, -h, 0, -q, 0, -q, 0, 0, r6, 0, 0, 0, r6, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, s32, 0, 0, 0, h, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, -s32, 0, 0, 0, h, 0, 0, 0},
      {-h, 0, h, 0, -q, 0, q, 0, 0, -r6, 0, 0, 0, r6, 0, 0},
      {h, 0, -h, 0, -q, 0, q, 0, 0, -r6, 0, 0, 0, r6, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, s23, 0, 0, -q, 0, 0, 0, h, 0},
      {0, 0, 0, 0, r3, 0, -r3, 0, 0, -r6, 0, 0, 0, r6, 0, 0},
      {0, 0, 0, r2, 0, 0, 0, -r6, 0, 0, -q, 0, 0, 0, h, 0},
      {0, 0, 0, -r2, 0, 0, 0, -r6, 0, 0, -q, 0, 0, 0, h, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
  };
  ComplexMatrix t(16, 16);
  for (Index r = 0; r < 16; ++r) {
    for (Index c = 0; c < 16; ++c) t(r, c) = rows[r][c];
  }
  return t;
}

std::vector<BlockDescriptor> four_atom_layout() {
  return {{BlockKind::zero, 0, 1},     {BlockKind::spin_one, 1, 3},
          {BlockKind::zero, 4, 1},     {BlockKind::spin_one, 5, 3},
          {BlockKind::spin_one, 8, 3}, {BlockKind::spin_two, 11, 5}};
}

namespace {

CompositeOperator tridiagonal_generator(const FockSpace& space,
                                        const std::vector<double>& couplings) {
  const Ladder lad = ladder(space);
  const Index m = space.cutoff();
  const Index rows = static_cast<Index>(couplings.size()) + 1;
  CompositeOperator out = CompositeOperator::Zero(rows * m, rows * m);
  for (Index k = 0; k + 1 < rows; ++k) {
    out.block(k * m, (k + 1) * m, m, m) = couplings[static_cast<std::size_t>(k)] * lad.a;
    out.block((k + 1) * m, k * m, m, m) = couplings[static_cast<std::size_t>(k)] * lad.a_dag;
  }
  return out;
}

}  // namespace

CompositeOperator b1_generator(const FockSpace& space) {
  return tridiagonal_generator(space, {std::sqrt(2.0), std::sqrt(2.0)});
}

CompositeOperator b2_generator(const FockSpace& space) {
  return tridiagonal_generator(space, {2.0, std::sqrt(6.0), std::sqrt(6.0), 2.0});
}

CompositeOperator atomic_sandwich(const ComplexMatrix& left, const CompositeOperator& op,
                                  const ComplexMatrix& right, int cutoff) {
  const Index m = cutoff;
  const Index inner = op.rows() / m;
  if (op.rows() != inner * m || op.cols() != op.rows() || left.cols() != inner ||
      right.rows() != inner) {
    throw DimensionMismatch("atomic_sandwich: factor shapes do not match operator");
  }
  const Index out_rows = left.rows();
  const Index out_cols = right.cols();
  CompositeOperator out = CompositeOperator::Zero(out_rows * m, out_cols * m);
  for (Index c = 0; c < inner; ++c) {
    for (Index d = 0; d < inner; ++d) {
      const auto blk = op.block(c * m, d * m, m, m);
      if (blk.cwiseAbs().maxCoeff() == 0.0) continue;
      for (Index a = 0; a < out_rows; ++a) {
        if (left(a, c) == 0.0) continue;
        for (Index b = 0; b < out_cols; ++b) {
          const Complex w = left(a, c) * right(d, b);
          if (w == 0.0) continue;
          out.block(a * m, b * m, m, m) += w * blk;
        }
      }
    }
  }
  return out;
}

DecompositionError::DecompositionError(double leak, Index row, Index col)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "block decomposition failed: off-block entry (" << row << ", " << col
           << ") has magnitude " << leak << " above " << kBlockLeakTolerance;
        return os.str();
      }()),
      leak_(leak) {}

std::vector<OperatorBlock> block_decompose(const CompositeOperator& a4,
                                           const ComplexMatrix& t_mat,
                                           const std::vector<BlockDescriptor>& layout,
                                           int cutoff, double* max_leak) {
  const double defect = max_abs_diff(t_mat.adjoint() * t_mat, identity(t_mat.rows()));
  if (defect > kBlockLeakTolerance) {
    throw std::invalid_argument("transform is not orthogonal within tolerance");
  }
  const CompositeOperator rotated = atomic_sandwich(t_mat.adjoint(), a4, t_mat, cutoff);

  std::vector<int> owner(static_cast<std::size_t>(t_mat.rows()), -1);
  for (std::size_t k = 0; k < layout.size(); ++k) {
    for (int r = 0; r < layout[k].size; ++r) {
      owner.at(static_cast<std::size_t>(layout[k].offset + r)) = static_cast<int>(k);
    }
  }
  const Index m = cutoff;
  double worst = 0.0;
  Index worst_row = 0;
  Index worst_col = 0;
  for (Index j = 0; j < rotated.cols(); ++j) {
    for (Index i = 0; i < rotated.rows(); ++i) {
      const int oi = owner[static_cast<std::size_t>(i / m)];
      const int oj = owner[static_cast<std::size_t>(j / m)];
      if (oi == oj && oi >= 0) continue;
      const double mag = std::abs(rotated(i, j));
      if (mag > worst) {
        worst = mag;
        worst_row = i;
        worst_col = j;
      }
    }
  }
  if (max_leak != nullptr) *max_leak = worst;
  if (worst > kBlockLeakTolerance) throw DecompositionError(worst, worst_row, worst_col);

  std::vector<OperatorBlock> blocks;
  blocks.reserve(layout.size());
  for (const BlockDescriptor& desc : layout) {
    blocks.push_back({desc, rotated.block(desc.offset * m, desc.offset * m,
                                          desc.size * m, desc.size * m)});
  }
  return blocks;
}

}  // namespace tavis
