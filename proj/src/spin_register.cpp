#include "tavis/spin_register.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace tavis {

AtomRegister::AtomRegister(int atoms) : atoms_(atoms) {
  if (atoms < 1 || atoms > kMaxAtoms) {
    throw std::invalid_argument("atom count must lie in 1.." +
                                std::to_string(kMaxAtoms) + ", got " +
                                std::to_string(atoms));
  }
}

int AtomRegister::twice_s3(int b) const {
  if (b < 0 || b >= levels()) throw std::out_of_range("atomic basis index out of range");
  const int ground = std::popcount(static_cast<unsigned>(b));
  return atoms_ - 2 * ground;
}

ComplexMatrix pauli(Pauli which) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  switch (which) {
    case Pauli::plus:
      m(0, 1) = 1.0;
      break;
    case Pauli::minus:
      m(1, 0) = 1.0;
      break;
    case Pauli::three:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

ComplexMatrix sigma_embed(const AtomRegister& reg, Pauli which, int atom) {
  if (atom < 1 || atom > reg.atoms()) {
    throw std::out_of_range("atom index " + std::to_string(atom) +
                            " outside 1.." + std::to_string(reg.atoms()));
  }
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  for (int k = 1; k <= reg.atoms(); ++k) {
    out = kron(out, k == atom ? pauli(which) : id2);
  }
  return out;
}

CollectiveSpins collective(const AtomRegister& reg) {
  const Index dim = reg.levels();
  CollectiveSpins spins{ComplexMatrix::Zero(dim, dim), ComplexMatrix::Zero(dim, dim),
                        ComplexMatrix::Zero(dim, dim)};
  for (int i = 1; i <= reg.atoms(); ++i) {
    spins.s_plus += sigma_embed(reg, Pauli::plus, i);
    spins.s_minus += sigma_embed(reg, Pauli::minus, i);
    spins.s3 += sigma_embed(reg, Pauli::three, i);
  }
  spins.s3 *= 0.5;
  return spins;
}

double Su2Residuals::worst() const {
  return std::max({s3_plus, s3_minus, plus_minus});
}

Su2Residuals su2_check(const CollectiveSpins& spins) {
  const auto comm = [](const ComplexMatrix& x, const ComplexMatrix& y) -> ComplexMatrix {
    return x * y - y * x;
  };
  const auto worst = [](const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
  };
  return {worst(comm(spins.s3, spins.s_plus) - spins.s_plus),
          worst(comm(spins.s3, spins.s_minus) + spins.s_minus),
          worst(comm(spins.s_plus, spins.s_minus) - 2.0 * spins.s3)};
}

}  // namespace tavis
