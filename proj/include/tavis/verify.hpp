#ifndef TAVIS_VERIFY_HPP
#define TAVIS_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tavis/tc_model.hpp"

namespace tavis {

/// How a residual is judged against its tolerance.
enum class Expectation {
  below,     // residual < tolerance
  exact,     // residual <= tolerance (tolerance 0 for integer arithmetic)
  at_least,  // residual >= tolerance: the check expects a failure to show up
};

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  Expectation expectation = Expectation::below;
  bool passed = false;
};

inline constexpr std::uint64_t kDefaultSeed = 20040517;

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  int cutoff = 40;  // headline closed-vs-oracle comparisons
  int guard = FockSpace::kDefaultGuard;
  int samples = 20;
  /// Replaces every tolerance when set.
  std::optional<double> tolerance_override;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

/// "NAME residual=X tol=Y PASS|FAIL".
std::string format_check(const CheckResult& check);

bool judge(double residual, double tolerance, Expectation expectation);

// Building blocks shared with the test suites.

/// max guard-band |exp_b2 - sector oracle of B2|.
double exp_b2_oracle_residual(double t, double g, const FockSpace& space);

/// max guard-band |u_interaction_n4 - sector oracle of A4|.
double u_interaction_oracle_residual(double t, double g, const FockSpace& space);

/// Largest entry of either grid of exp_b2 sitting on the wrong checkerboard parity.
double checkerboard_violation(double t, double g, const FockSpace& space);

/// max_m |f0(m) - exact| over m = 0..5 at time t, coupling g.
double f0_sector_residual(double t, double g, bool printed_form);

/// |F_{-1}(-1) - sin(2tg)/2| with the exact value read off the 2x2 sector.
double fm1_sector_residual(double t, double g, bool printed_form);

/// max guard-band |i (U(t+h) - U(t-h)) / 2h - H U(t)| for the closed form.
double schrodinger_residual(const ModelParams& p, double t, double h);

}  // namespace tavis

#endif  // TAVIS_VERIFY_HPP
