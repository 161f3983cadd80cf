#ifndef TAVIS_DYNAMICS_HPP
#define TAVIS_DYNAMICS_HPP

#include <stdexcept>
#include <vector>

#include "tavis/closed_form.hpp"
#include "tavis/spin_register.hpp"
#include "tavis/tc_model.hpp"

namespace tavis {

/// Pure state on the composite (atoms x photons) space.
class QuantumState {
 public:
  QuantumState(ComplexVector amplitudes, int atomic_levels, int cutoff);

  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  int atomic_levels() const noexcept { return atomic_levels_; }
  int cutoff() const noexcept { return cutoff_; }
  double norm() const { return amplitudes_.norm(); }

 private:
  ComplexVector amplitudes_;
  int atomic_levels_;
  int cutoff_;
};

class CutoffTooSmall : public std::invalid_argument {
 public:
  CutoffTooSmall(double alpha_abs, int required_cutoff);
  int required_cutoff() const noexcept { return required_; }

 private:
  int required_;
};

/// Poisson mass allowed at photon levels inside the guard band.
inline constexpr double kCoherentTailTolerance = 1e-12;

/// Coherent-state photon amplitudes e^{-|a|^2/2} a^m / sqrt(m!), renormalized
/// over the cutoff. Refuses when |alpha|^2 > (cutoff - guard)/2 or the tail in
/// the guard band exceeds kCoherentTailTolerance.
ComplexVector coherent_state(Complex alpha, const FockSpace& space);

/// |m> in the truncated Fock space.
ComplexVector number_state(int photons, const FockSpace& space);

/// |b> x field for atomic basis index b.
QuantumState product_state(const AtomRegister& reg, int atomic_index, const ComplexVector& field,
                           const FockSpace& space);

/// u * state; throws DimensionMismatch on shape disagreement.
QuantumState evolve(const QuantumState& state, const CompositeOperator& u);

/// <S3 x 1>.
double atomic_inversion(const QuantumState& state, const CollectiveSpins& spins);

/// p(m) = sum over atomic levels of |amplitude|^2.
std::vector<double> photon_distribution(const QuantumState& state);

/// <S3 x 1 + 1 x N>.
double mean_excitation(const QuantumState& state, const AtomRegister& reg);

enum class Method { closed, oracle };

/// Evolution operator for the chosen method: u_full or u_oracle.
CompositeOperator evolution_operator(double t, const ModelParams& p, Method method);

struct TimeSeries {
  std::vector<double> times;
  std::vector<double> values;
};

/// Atomic inversion at each grid time, with a fresh U(t_k) per sample.
TimeSeries trace_observable(const ModelParams& p, const QuantumState& initial,
                            const std::vector<double>& times, Method method);

/// Same observable on the uniform grid t_k = k * step, k = 0..samples-1,
/// obtained by applying U(step) repeatedly.
TimeSeries trace_observable_stepped(const ModelParams& p, const QuantumState& initial,
                                    double step, int samples, Method method);

/// Uniform grid of `points` samples on [0, t_max]; points == 1 gives {0}.
std::vector<double> uniform_grid(double t_max, int points);

}  // namespace tavis

#endif  // TAVIS_DYNAMICS_HPP
