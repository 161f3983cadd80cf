#include "tavis/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "tavis/closed_form.hpp"
#include "tavis/oracle.hpp"

namespace tavis::cli {

namespace {

constexpr int kDefaultBuildCutoff = 32;
constexpr int kDefaultVerifyCutoff = 40;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* method_name(MethodChoice m) {
  switch (m) {
    case MethodChoice::closed:
      return "closed";
    case MethodChoice::oracle:
      return "oracle";
    case MethodChoice::both:
      return "both";
  }
  return "?";
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot open output file " + path);
  return os;
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw ConfigError("cannot parse " + what + ": '" + text + "'");
  return v;
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw ConfigError("cannot parse " + what + ": '" + text + "'");
  return v;
}

int parse_atomic(const std::string& spec, const AtomRegister& reg) {
  if (spec == "all-up") return 0;
  if (spec == "all-down") return reg.levels() - 1;
  if (static_cast<int>(spec.size()) != reg.atoms()) {
    throw ConfigError("atomic bitstring '" + spec + "' must have one character per atom");
  }
  int index = 0;
  for (char c : spec) {
    if (c != '0' && c != '1') throw ConfigError("atomic bitstring may only contain 0 and 1");
    index = 2 * index + (c - '0');
  }
  return index;
}

}  // namespace

ModelParams RunConfig::params(int default_cutoff) const {
  ModelParams p;
  p.atoms = atoms;
  p.omega = omega;
  p.delta = effective_delta();
  p.g = g;
  p.space = FockSpace(cutoff.value_or(default_cutoff), guard);
  return p;
}

void validate(const RunConfig& cfg) {
  if (cfg.atoms < 1 || cfg.atoms > AtomRegister::kMaxAtoms) {
    throw ConfigError("--atoms must lie in 1..4");
  }
  try {
    FockSpace(cfg.cutoff.value_or(kDefaultBuildCutoff), cfg.guard);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (cfg.t_steps < 1) throw ConfigError("--t-steps must be at least 1");
  if (cfg.method != MethodChoice::oracle) {
    if (cfg.effective_delta() != cfg.omega) {
      throw ConfigError(
          "method closed needs resonance (--delta equal to --omega); use --method oracle");
    }
    if (cfg.atoms != 4) {
      throw ConfigError("method closed is the four-atom closed form; use --method oracle");
    }
  }
}

QuantumState parse_initial_state(const RunConfig& cfg, const ModelParams& p) {
  const AtomRegister reg = p.reg();
  const std::string& spec = cfg.state;
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (kind == "basis") {
    const int k = parse_int(arg, "basis index");
    const Index dim = static_cast<Index>(reg.levels()) * p.space.cutoff();
    if (k < 0 || k >= dim) throw ConfigError("basis index outside the composite space");
    ComplexVector amps = ComplexVector::Zero(dim);
    amps(k) = 1.0;
    return QuantumState(std::move(amps), reg.levels(), p.space.cutoff());
  }
  if (kind == "file") {
    std::ifstream is(arg);
    if (!is) throw ConfigError("cannot open amplitude file " + arg);
    std::vector<Complex> values;
    double re = 0.0;
    double im = 0.0;
    while (is >> re >> im) values.emplace_back(re, im);
    const Index dim = static_cast<Index>(reg.levels()) * p.space.cutoff();
    if (static_cast<Index>(values.size()) != dim) {
      throw ConfigError("amplitude file must hold " + std::to_string(dim) + " 're im' pairs");
    }
    ComplexVector amps = Eigen::Map<ComplexVector>(values.data(), dim);
    if (std::abs(amps.norm() - 1.0) > 1e-10) throw ConfigError("amplitude file is not normalized");
    return QuantumState(std::move(amps), reg.levels(), p.space.cutoff());
  }

  ComplexVector field;
  if (kind == "vacuum" && arg.empty()) {
    field = number_state(0, p.space);
  } else if (kind == "number") {
    const int m = parse_int(arg, "photon number");
    if (m < 0 || m >= p.space.cutoff()) throw ConfigError("photon number outside the cutoff");
    field = number_state(m, p.space);
  } else if (kind == "coherent") {
    const auto comma = arg.find(',');
    const double re = parse_double(arg.substr(0, comma), "coherent amplitude");
    const double im =
        comma == std::string::npos ? 0.0 : parse_double(arg.substr(comma + 1), "coherent amplitude");
    try {
      field = coherent_state(Complex(re, im), p.space);
    } catch (const CutoffTooSmall& e) {
      throw ConfigError(e.what());
    }
  } else {
    throw ConfigError("unknown --state '" + spec +
                      "' (expected vacuum, coherent:RE[,IM], number:M, basis:K or file:PATH)");
  }
  return product_state(reg, parse_atomic(cfg.atomic, reg), field, p.space);
}

void write_operator(std::ostream& os, const CompositeOperator& u, const RunConfig& cfg,
                    const ModelParams& p, const std::string& method) {
  os << "# tavis-operator 1\n";
  os << "# tool-version " << kToolVersion << "\n";
  os << "# method " << method << "\n";
  os << "# atoms " << p.atoms << " cutoff " << p.space.cutoff() << " guard " << p.space.guard()
     << "\n";
  os << "# omega " << fmt(p.omega) << " delta " << fmt(p.delta) << " g " << fmt(p.g) << " t "
     << fmt(cfg.t) << "\n";
  os << "# seed " << cfg.seed << "\n";
  os << "# rows " << u.rows() << " cols " << u.cols() << "\n";
  for (Index i = 0; i < u.rows(); ++i) {
    for (Index j = 0; j < u.cols(); ++j) {
      if (j > 0) os << ' ';
      os << fmt(u(i, j).real()) << ' ' << fmt(u(i, j).imag());
    }
    os << '\n';
  }
}

CompositeOperator read_operator(std::istream& is) {
  std::string line;
  Index rows = -1;
  Index cols = -1;
  while (std::getline(is, line)) {
    if (line.rfind("# rows ", 0) == 0) {
      std::istringstream hs(line.substr(2));
      std::string tag;
      hs >> tag >> rows >> tag >> cols;
      break;
    }
  }
  if (rows < 0 || cols < 0) throw std::runtime_error("operator file has no dimension header");
  CompositeOperator u(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      double re = 0.0;
      double im = 0.0;
      if (!(is >> re >> im)) throw std::runtime_error("operator file body is truncated");
      u(i, j) = Complex(re, im);
    }
  }
  return u;
}

std::string tagged_path(const std::string& path, const std::string& tag) {
  const std::filesystem::path p(path);
  std::filesystem::path out = p.parent_path() / p.stem();
  out += "." + tag;
  out += p.extension();
  return out.string();
}

int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  validate(cfg);
  const ModelParams p = cfg.params(kDefaultBuildCutoff);

  if (cfg.method != MethodChoice::both) {
    const CompositeOperator u =
        cfg.method == MethodChoice::closed ? u_full(cfg.t, p) : u_oracle(cfg.t, p);
    if (cfg.out.empty()) {
      write_operator(out, u, cfg, p, method_name(cfg.method));
    } else {
      std::ofstream os = open_output(cfg.out);
      write_operator(os, u, cfg, p, method_name(cfg.method));
    }
    return kSuccess;
  }

  if (cfg.out.empty()) throw ConfigError("--method both needs --out");
  const CompositeOperator closed = u_full(cfg.t, p);
  const CompositeOperator exact = u_oracle(cfg.t, p);
  {
    std::ofstream os = open_output(tagged_path(cfg.out, "closed"));
    write_operator(os, closed, cfg, p, "closed");
  }
  {
    std::ofstream os = open_output(tagged_path(cfg.out, "oracle"));
    write_operator(os, exact, cfg, p, "oracle");
  }
  const double diff = op_norm_diff(closed, exact, guard_band_mask(p.reg().levels(), p.space));
  std::ofstream os = open_output(tagged_path(cfg.out, "diff"));
  os << "max_guard_band_diff " << fmt(diff) << "\n";
  out << "max_guard_band_diff " << fmt(diff) << "\n";
  return kSuccess;
}

namespace {

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> rows;  // inversion, p(0..K)
};

Trajectory run_trajectory(const ModelParams& p, const QuantumState& initial,
                          const std::vector<double>& times, Method method, int max_photon) {
  const CollectiveSpins spins = collective(p.reg());
  Trajectory traj;
  traj.times = times;
  for (double t : times) {
    const QuantumState state = evolve(initial, evolution_operator(t, p, method));
    std::vector<double> row{atomic_inversion(state, spins)};
    const std::vector<double> dist = photon_distribution(state);
    row.insert(row.end(), dist.begin(), dist.begin() + max_photon + 1);
    traj.rows.push_back(std::move(row));
  }
  return traj;
}

void write_trajectory(std::ostream& os, const Trajectory& traj, const RunConfig& cfg,
                      const ModelParams& p, const std::string& method, int max_photon) {
  os << "# tavis-trajectory 1\n";
  os << "# tool-version " << kToolVersion << "\n";
  os << "# method " << method << "\n";
  os << "# atoms " << p.atoms << " cutoff " << p.space.cutoff() << " guard " << p.space.guard()
     << "\n";
  os << "# omega " << fmt(p.omega) << " delta " << fmt(p.delta) << " g " << fmt(p.g) << "\n";
  os << "# state " << cfg.state << " atomic " << cfg.atomic << "\n";
  os << "t,inversion";
  for (int k = 0; k <= max_photon; ++k) os << ",p" << k;
  os << '\n';
  for (std::size_t r = 0; r < traj.times.size(); ++r) {
    os << fmt(traj.times[r]);
    for (double v : traj.rows[r]) os << ',' << fmt(v);
    os << '\n';
  }
}

}  // namespace

int cmd_evolve(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  validate(cfg);
  const ModelParams p = cfg.params(kDefaultBuildCutoff);
  const QuantumState initial = parse_initial_state(cfg, p);
  const int max_photon = cfg.max_photon.value_or(std::min(10, p.space.cutoff() - 1));
  if (max_photon < 0 || max_photon >= p.space.cutoff()) {
    throw ConfigError("--max-photon must lie in 0..cutoff-1");
  }
  const std::vector<double> times =
      cfg.t_max ? uniform_grid(*cfg.t_max, cfg.t_steps) : std::vector<double>{cfg.t};

  auto emit = [&](const Trajectory& traj, const std::string& method, const std::string& path) {
    if (path.empty()) {
      write_trajectory(out, traj, cfg, p, method, max_photon);
    } else {
      std::ofstream os = open_output(path);
      write_trajectory(os, traj, cfg, p, method, max_photon);
    }
  };

  if (cfg.method != MethodChoice::both) {
    const Method m = cfg.method == MethodChoice::closed ? Method::closed : Method::oracle;
    emit(run_trajectory(p, initial, times, m, max_photon), method_name(cfg.method), cfg.out);
    return kSuccess;
  }

  if (cfg.out.empty()) throw ConfigError("--method both needs --out");
  const Trajectory closed = run_trajectory(p, initial, times, Method::closed, max_photon);
  const Trajectory exact = run_trajectory(p, initial, times, Method::oracle, max_photon);
  emit(closed, "closed", tagged_path(cfg.out, "closed"));
  emit(exact, "oracle", tagged_path(cfg.out, "oracle"));
  double diff = 0.0;
  for (std::size_t r = 0; r < closed.rows.size(); ++r) {
    for (std::size_t c = 0; c < closed.rows[r].size(); ++c) {
      diff = std::max(diff, std::abs(closed.rows[r][c] - exact.rows[r][c]));
    }
  }
  std::ofstream os = open_output(tagged_path(cfg.out, "diff"));
  os << "max_cell_diff " << fmt(diff) << "\n";
  out << "max_cell_diff " << fmt(diff) << "\n";
  return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  VerifyOptions opts;
  opts.seed = cfg.seed;
  opts.cutoff = cfg.cutoff.value_or(kDefaultVerifyCutoff);
  opts.guard = cfg.guard;
  opts.tolerance_override = cfg.tolerance;
  try {
    FockSpace(opts.cutoff, opts.guard);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  const std::vector<CheckResult> results = run_verification(opts);
  std::ostringstream report;
  bool all = true;
  for (const CheckResult& r : results) {
    report << format_check(r) << '\n';
    if (!r.passed) {
      all = false;
      err << "verification failed: " << r.name << '\n';
    }
  }
  const std::string text = report.str();
  out << text;
  if (!cfg.out.empty()) {
    std::ofstream os = open_output(cfg.out);
    os << text;
  }
  return all ? kSuccess : kVerificationFailure;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Four-atom Tavis-Cummings evolution operator: closed form and oracle"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string method = "closed";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--atoms", cfg.atoms, "Number of atoms (1..4)");
    sub->add_option("--cutoff", cfg.cutoff, "Photon levels kept (>= 8)");
    sub->add_option("--guard", cfg.guard, "Top photon levels excluded from comparisons (>= 6)");
    sub->add_option("--omega", cfg.omega, "Field frequency");
    sub->add_option("--delta", cfg.delta, "Atomic splitting (defaults to omega)");
    sub->add_option("--g", cfg.g, "Coupling constant");
    sub->add_option("--seed", cfg.seed, "Seed for randomized checks");
    sub->add_option("--out", cfg.out, "Output path (stdout when omitted)");
  };

  CLI::App* build = app.add_subcommand("build", "Write U(t) as a text matrix file");
  add_common(build);
  build->add_option("--t", cfg.t, "Time");
  build->add_option("--method", method, "closed, oracle or both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}));

  CLI::App* evolve_cmd = app.add_subcommand("evolve", "Write an observable time series");
  add_common(evolve_cmd);
  evolve_cmd->add_option("--t", cfg.t, "Single sample time");
  evolve_cmd->add_option("--t-max", cfg.t_max, "End of the uniform time grid");
  evolve_cmd->add_option("--t-steps", cfg.t_steps, "Number of grid points on [0, t-max]");
  evolve_cmd->add_option("--method", method, "closed, oracle or both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}));
  evolve_cmd->add_option("--state", cfg.state,
                         "vacuum | coherent:RE[,IM] | number:M | basis:K | file:PATH");
  evolve_cmd->add_option("--atomic", cfg.atomic,
                         "all-up | all-down | bitstring (0 = excited, atom 1 first)");
  evolve_cmd->add_option("--max-photon", cfg.max_photon, "Largest photon number K in the output");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the invariant and oracle checks");
  add_common(verify_cmd);
  verify_cmd->add_option("--tolerance", cfg.tolerance, "Replace every check tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kConfigError;
  }
  cfg.method = method == "oracle" ? MethodChoice::oracle
               : method == "both" ? MethodChoice::both
                                  : MethodChoice::closed;

  try {
    if (build->parsed()) return cmd_build(cfg, out, err);
    if (evolve_cmd->parsed()) return cmd_evolve(cfg, out, err);
    return cmd_verify(cfg, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
}

}  // namespace tavis::cli
