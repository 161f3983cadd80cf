#ifndef TAVIS_FOCK_HPP
#define TAVIS_FOCK_HPP

#include <functional>
#include <string>
#include <vector>

#include "tavis/linalg.hpp"

namespace tavis {

using FockOperator = ComplexMatrix;

/// Truncated single-mode Fock space with photon levels 0..cutoff-1.
///
/// The top `guard` levels are excluded from comparisons. Operators that move
/// photon number by at most four (the spin-2 block) are exact on the remaining
/// band, so every cross-check against an oracle is done there.
class FockSpace {
 public:
  static constexpr int kMinCutoff = 8;
  static constexpr int kMinGuard = 6;
  static constexpr int kDefaultGuard = 6;

  explicit FockSpace(int cutoff, int guard = kDefaultGuard);

  int cutoff() const noexcept { return cutoff_; }
  int guard() const noexcept { return guard_; }
  /// Number of levels below the guard band.
  int safe_levels() const noexcept { return cutoff_ - guard_; }

 private:
  int cutoff_;
  int guard_;
};

/// Composite indices (atoms-first: atomic * cutoff + photon) whose photon
/// number lies below the guard band.
std::vector<Index> guard_band_mask(int atomic_levels, const FockSpace& space);

struct Ladder {
  FockOperator a;
  FockOperator a_dag;
  FockOperator n_op;
};

Ladder ladder(const FockSpace& space);

/// A function of the photon number, defined on all integers.
struct NumberFunction {
  std::function<Complex(int)> evaluate;
  std::string label;
};

enum class LadderSide { lower, raise, diagonal };

/// Matrix of f(N + shift) * a^k (side = lower) or f(N + shift) * (a^dagger)^k
/// (side = raise): the ladder power acts first, then f is evaluated at the
/// resulting photon number plus `shift`. For side = diagonal the power is
/// ignored and the result is diag(f(m + shift)).
FockOperator number_fn_term(const FockSpace& space, const NumberFunction& f,
                            int shift, int ladder_power, LadderSide side);

/// cos(x sqrt(lambda)) continued to lambda < 0 as cosh(x sqrt(-lambda)).
double entire_cos(double lambda, double x);

/// sin(x sqrt(lambda)) / sqrt(lambda), equal to x at lambda = 0 and
/// sinh(x sqrt(-lambda)) / sqrt(-lambda) for lambda < 0.
double entire_sinc(double lambda, double x);

}  // namespace tavis

#endif  // TAVIS_FOCK_HPP
