#ifndef TAVIS_CLI_HPP
#define TAVIS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tavis/dynamics.hpp"
#include "tavis/tc_model.hpp"
#include "tavis/verify.hpp"

namespace tavis::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kConfigError = 2 };

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class MethodChoice { closed, oracle, both };

struct RunConfig {
  int atoms = 4;
  std::optional<int> cutoff;  // command-specific default when unset
  int guard = FockSpace::kDefaultGuard;
  double omega = 1.0;
  std::optional<double> delta;  // defaults to omega
  double g = 1.0;
  double t = 0.0;
  std::optional<double> t_max;
  int t_steps = 1;
  MethodChoice method = MethodChoice::closed;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string state = "vacuum";
  std::string atomic = "all-up";
  std::optional<int> max_photon;
  std::optional<double> tolerance;

  double effective_delta() const { return delta.value_or(omega); }
  ModelParams params(int default_cutoff) const;
};

/// Throws ConfigError when the configuration cannot run; method=closed/both
/// needs four atoms at resonance.
void validate(const RunConfig& cfg);

/// Initial state from --state / --atomic.
QuantumState parse_initial_state(const RunConfig& cfg, const ModelParams& p);

/// Header plus one line of "re im" pairs per row; byte-deterministic.
void write_operator(std::ostream& os, const CompositeOperator& u, const RunConfig& cfg,
                    const ModelParams& p, const std::string& method);

/// Reads back the numeric body of an operator file.
CompositeOperator read_operator(std::istream& is);

/// Path with `tag` inserted before the extension: "u.txt" + "closed" -> "u.closed.txt".
std::string tagged_path(const std::string& path, const std::string& tag);

int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_evolve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line: parses, dispatches, and maps errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tavis::cli

#endif  // TAVIS_CLI_HPP
