#include "tavis/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "tavis/oracle.hpp"

namespace tavis {

QuantumState::QuantumState(ComplexVector amplitudes, int atomic_levels, int cutoff)
    : amplitudes_(std::move(amplitudes)), atomic_levels_(atomic_levels), cutoff_(cutoff) {
  if (amplitudes_.size() != static_cast<Index>(atomic_levels) * cutoff) {
    throw DimensionMismatch("state length does not equal atomic levels x cutoff");
  }
}

namespace {

// Poisson weights e^{-x} x^m / m! accumulated in log space.
double poisson_weight(double mean, int m) {
  if (mean == 0.0) return m == 0 ? 1.0 : 0.0;
  return std::exp(-mean + m * std::log(mean) - std::lgamma(m + 1.0));
}

bool coherent_fits(double mean, int cutoff, int guard) {
  if (mean > 0.5 * (cutoff - guard)) return false;
  double inside = 0.0;
  for (int m = 0; m < cutoff - guard; ++m) inside += poisson_weight(mean, m);
  return 1.0 - inside <= kCoherentTailTolerance;
}

std::string cutoff_message(double alpha_abs, int required) {
  std::ostringstream os;
  os << "coherent amplitude |alpha| = " << alpha_abs
     << " does not fit the Fock cutoff; need cutoff >= " << required;
  return os.str();
}

}  // namespace

CutoffTooSmall::CutoffTooSmall(double alpha_abs, int required_cutoff)
    : std::invalid_argument(cutoff_message(alpha_abs, required_cutoff)),
      required_(required_cutoff) {}

ComplexVector coherent_state(Complex alpha, const FockSpace& space) {
  const double mean = std::norm(alpha);
  if (!coherent_fits(mean, space.cutoff(), space.guard())) {
    int required = space.cutoff();
    while (!coherent_fits(mean, required, space.guard())) ++required;
    throw CutoffTooSmall(std::abs(alpha), required);
  }
  ComplexVector amps = ComplexVector::Zero(space.cutoff());
  Complex term = std::exp(-0.5 * mean);
  for (int m = 0; m < space.cutoff(); ++m) {
    if (m > 0) term *= alpha / std::sqrt(static_cast<double>(m));
    amps(m) = term;
  }
  amps.normalize();
  return amps;
}

ComplexVector number_state(int photons, const FockSpace& space) {
  if (photons < 0 || photons >= space.cutoff()) {
    throw std::out_of_range("photon number outside the truncated Fock space");
  }
  ComplexVector amps = ComplexVector::Zero(space.cutoff());
  amps(photons) = 1.0;
  return amps;
}

QuantumState product_state(const AtomRegister& reg, int atomic_index, const ComplexVector& field,
                           const FockSpace& space) {
  if (atomic_index < 0 || atomic_index >= reg.levels()) {
    throw std::out_of_range("atomic basis index out of range");
  }
  if (field.size() != space.cutoff()) throw DimensionMismatch("field length != cutoff");
  ComplexVector amps = ComplexVector::Zero(static_cast<Index>(reg.levels()) * space.cutoff());
  amps.segment(static_cast<Index>(atomic_index) * space.cutoff(), space.cutoff()) = field;
  return QuantumState(std::move(amps), reg.levels(), space.cutoff());
}

QuantumState evolve(const QuantumState& state, const CompositeOperator& u) {
  if (u.rows() != u.cols() || u.cols() != state.amplitudes().size()) {
    throw DimensionMismatch("evolution operator does not match the state dimension");
  }
  return QuantumState(u * state.amplitudes(), state.atomic_levels(), state.cutoff());
}

double atomic_inversion(const QuantumState& state, const CollectiveSpins& spins) {
  const Index levels = state.atomic_levels();
  const Index m = state.cutoff();
  if (spins.s3.rows() != levels) throw DimensionMismatch("spin operators do not match the state");
  const auto& psi = state.amplitudes();
  Complex acc = 0.0;
  for (Index b = 0; b < levels; ++b) {
    for (Index c = 0; c < levels; ++c) {
      if (spins.s3(b, c) == 0.0) continue;
      acc += spins.s3(b, c) * psi.segment(b * m, m).dot(psi.segment(c * m, m));
    }
  }
  return acc.real();
}

std::vector<double> photon_distribution(const QuantumState& state) {
  std::vector<double> p(static_cast<std::size_t>(state.cutoff()), 0.0);
  const auto& psi = state.amplitudes();
  for (int b = 0; b < state.atomic_levels(); ++b) {
    for (int n = 0; n < state.cutoff(); ++n) {
      p[static_cast<std::size_t>(n)] += std::norm(psi(static_cast<Index>(b) * state.cutoff() + n));
    }
  }
  return p;
}

double mean_excitation(const QuantumState& state, const AtomRegister& reg) {
  if (state.atomic_levels() != reg.levels()) throw DimensionMismatch("register does not match state");
  double acc = 0.0;
  for (int b = 0; b < reg.levels(); ++b) {
    for (int n = 0; n < state.cutoff(); ++n) {
      acc += (0.5 * reg.twice_s3(b) + n) *
             std::norm(state.amplitudes()(static_cast<Index>(b) * state.cutoff() + n));
    }
  }
  return acc;
}

CompositeOperator evolution_operator(double t, const ModelParams& p, Method method) {
  return method == Method::closed ? u_full(t, p) : u_oracle(t, p);
}

TimeSeries trace_observable(const ModelParams& p, const QuantumState& initial,
                            const std::vector<double>& times, Method method) {
  const CollectiveSpins spins = collective(p.reg());
  TimeSeries out;
  out.times = times;
  out.values.reserve(times.size());
  for (double t : times) {
    out.values.push_back(atomic_inversion(evolve(initial, evolution_operator(t, p, method)), spins));
  }
  return out;
}

TimeSeries trace_observable_stepped(const ModelParams& p, const QuantumState& initial,
                                    double step, int samples, Method method) {
  const CollectiveSpins spins = collective(p.reg());
  const CompositeOperator u = evolution_operator(step, p, method);
  TimeSeries out;
  QuantumState state = initial;
  for (int k = 0; k < samples; ++k) {
    if (k > 0) state = evolve(state, u);
    out.times.push_back(k * step);
    out.values.push_back(atomic_inversion(state, spins));
  }
  return out;
}

std::vector<double> uniform_grid(double t_max, int points) {
  if (points < 1) throw std::invalid_argument("time grid needs at least one point");
  std::vector<double> grid(static_cast<std::size_t>(points), 0.0);
  for (int k = 1; k < points; ++k) {
    grid[static_cast<std::size_t>(k)] = t_max * k / (points - 1);
  }
  return grid;
}

}  // namespace tavis
