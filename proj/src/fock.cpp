#include "tavis/fock.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tavis {

FockSpace::FockSpace(int cutoff, int guard) : cutoff_(cutoff), guard_(guard) {
  if (cutoff < kMinCutoff || guard < kMinGuard || guard >= cutoff) {
    std::ostringstream os;
    os << "invalid Fock space: cutoff " << cutoff << ", guard " << guard
       << " (need cutoff >= " << kMinCutoff << ", guard >= " << kMinGuard
       << ", guard < cutoff)";
    throw std::invalid_argument(os.str());
  }
}

std::vector<Index> guard_band_mask(int atomic_levels, const FockSpace& space) {
  std::vector<Index> mask;
  mask.reserve(static_cast<std::size_t>(atomic_levels * space.safe_levels()));
  for (int b = 0; b < atomic_levels; ++b) {
    for (int m = 0; m < space.safe_levels(); ++m) {
      mask.push_back(static_cast<Index>(b) * space.cutoff() + m);
    }
  }
  return mask;
}

Ladder ladder(const FockSpace& space) {
  const Index dim = space.cutoff();
  Ladder out{FockOperator::Zero(dim, dim), FockOperator::Zero(dim, dim),
             FockOperator::Zero(dim, dim)};
  for (Index m = 1; m < dim; ++m) {
    out.a(m - 1, m) = std::sqrt(static_cast<double>(m));
  }
  out.a_dag = out.a.adjoint();
  for (Index m = 0; m < dim; ++m) out.n_op(m, m) = static_cast<double>(m);
  return out;
}

FockOperator number_fn_term(const FockSpace& space, const NumberFunction& f,
                            int shift, int ladder_power, LadderSide side) {
  if (ladder_power < 0 || ladder_power > 4) {
    throw std::invalid_argument("ladder power must lie in 0..4");
  }
  const int dim = space.cutoff();
  FockOperator out = FockOperator::Zero(dim, dim);
  if (side == LadderSide::diagonal) ladder_power = 0;

  for (int m = 0; m < dim; ++m) {
    // a^k |m> = sqrt(m!/(m-k)!) |m-k>, (a^dagger)^k |m> = sqrt((m+k)!/m!) |m+k>.
    const int target = side == LadderSide::raise ? m + ladder_power : m - ladder_power;
    if (target < 0 || target >= dim) continue;
    double weight = 1.0;
    for (int j = 0; j < ladder_power; ++j) {
      weight *= side == LadderSide::raise ? std::sqrt(static_cast<double>(m + j + 1))
                                          : std::sqrt(static_cast<double>(m - j));
    }
    out(target, m) = weight * f.evaluate(target + shift);
  }
  return out;
}

double entire_cos(double lambda, double x) {
  if (lambda >= 0.0) return std::cos(x * std::sqrt(lambda));
  return std::cosh(x * std::sqrt(-lambda));
}

double entire_sinc(double lambda, double x) {
  if (lambda > 0.0) {
    const double root = std::sqrt(lambda);
    return std::sin(x * root) / root;
  }
  if (lambda < 0.0) {
    const double root = std::sqrt(-lambda);
    return std::sinh(x * root) / root;
  }
  return x;
}

}  // namespace tavis
