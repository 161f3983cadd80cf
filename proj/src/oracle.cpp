#include "tavis/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tavis {

std::vector<SectorBasis> sectors_from_weights(const std::vector<int>& twice_weights,
                                              int cutoff) {
  if (twice_weights.empty()) return {};
  const int lowest = *std::min_element(twice_weights.begin(), twice_weights.end());
  std::map<int, std::vector<Index>> by_key;
  for (std::size_t r = 0; r < twice_weights.size(); ++r) {
    for (int n = 0; n < cutoff; ++n) {
      const int key = twice_weights[r] - lowest + 2 * n;
      by_key[key].push_back(static_cast<Index>(r) * cutoff + n);
    }
  }
  std::vector<SectorBasis> out;
  out.reserve(by_key.size());
  for (auto& [key, idx] : by_key) {
    std::sort(idx.begin(), idx.end());
    out.push_back({key, std::move(idx)});
  }
  return out;
}

std::vector<SectorBasis> sectors(const AtomRegister& reg, const FockSpace& space) {
  std::vector<int> weights(static_cast<std::size_t>(reg.levels()));
  for (int b = 0; b < reg.levels(); ++b) weights[static_cast<std::size_t>(b)] = reg.twice_s3(b);
  return sectors_from_weights(weights, space.cutoff());
}

std::vector<int> spin_one_weights() { return {2, 0, -2}; }
std::vector<int> spin_two_weights() { return {4, 2, 0, -2, -4}; }

SectorLeakError::SectorLeakError(Index row, Index col, double magnitude)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "operator couples different excitation sectors at (" << row << ", " << col
           << "), magnitude " << magnitude;
        return os.str();
      }()),
      row_(row),
      col_(col) {}

CompositeOperator exp_sector(const CompositeOperator& op, const std::vector<SectorBasis>& parts,
                             Complex scale) {
  if (op.rows() != op.cols()) throw DimensionMismatch("exp_sector needs a square operator");

  std::vector<int> owner(static_cast<std::size_t>(op.rows()), -1);
  for (std::size_t s = 0; s < parts.size(); ++s) {
    for (Index i : parts[s].indices) {
      if (i < 0 || i >= op.rows() || owner[static_cast<std::size_t>(i)] != -1) {
        throw std::invalid_argument("sector list is not a partition of the operator's index range");
      }
      owner[static_cast<std::size_t>(i)] = static_cast<int>(s);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
    throw std::invalid_argument("sector list does not cover every index");
  }
  for (Index j = 0; j < op.cols(); ++j) {
    for (Index i = 0; i < op.rows(); ++i) {
      if (owner[static_cast<std::size_t>(i)] == owner[static_cast<std::size_t>(j)]) continue;
      const double mag = std::abs(op(i, j));
      if (mag > kSectorLeakTolerance) throw SectorLeakError(i, j, mag);
    }
  }

  CompositeOperator out = CompositeOperator::Zero(op.rows(), op.cols());
  for (const SectorBasis& part : parts) {
    const ComplexMatrix local = expm_hermitian(restrict_to(op, part.indices), scale);
    for (Index c = 0; c < part.dim(); ++c) {
      for (Index r = 0; r < part.dim(); ++r) {
        out(part.indices[static_cast<std::size_t>(r)], part.indices[static_cast<std::size_t>(c)]) =
            local(r, c);
      }
    }
  }
  return out;
}

CompositeOperator exp_dense(const CompositeOperator& op, Complex scale) {
  return expm_hermitian(op, scale);
}

CompositeOperator u_oracle(double t, const ModelParams& p) {
  return exp_sector(hamiltonian(p), sectors(p.reg(), p.space), Complex(0.0, -t));
}

CompositeOperator interaction_oracle(double t, double g, const AtomRegister& reg,
                                     const FockSpace& space) {
  return exp_sector(interaction(reg, space), sectors(reg, space), Complex(0.0, -t * g));
}

}  // namespace tavis
