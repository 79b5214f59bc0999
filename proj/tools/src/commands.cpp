#include "stationary/cli/commands.hpp"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "stationary/cesaro.hpp"
#include "stationary/cli/matrix_io.hpp"
#include "stationary/direct_solver.hpp"
#include "stationary/irreducibility.hpp"
#include "stationary/simulator.hpp"
#include "stationary/testkit.hpp"

namespace stationary::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Common {
  std::string file;
  double tol = kDefaultRowSumTol;
  bool reproducible = false;
};

struct ValidateArgs {
  bool renormalize = false;
};

struct CheckArgs {
  double threshold = 0.0;
  bool full = false;
};

struct SolveArgs {
  std::string method = "direct";
  double eps = kDefaultCesaroEps;
  std::optional<std::size_t> max_iter;
  double positivity_tol = 0.0;
  double threshold = 0.0;
};

struct SimulateArgs {
  std::size_t steps = 1'000'000;
  std::optional<std::uint64_t> seed;
  std::size_t start = 0;
  bool compare = false;
};

struct GenerateArgs {
  std::string kind;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double coupling = testkit::kDefaultCoupling;
  std::string out;
};

// Reports and diagnostics for one command invocation.
class Session {
public:
  Session(std::string command, const Common& common, std::ostream& out, std::ostream& err)
      : command_(std::move(command)), common_(common), out_(out), err_(err), t0_(Clock::now()) {
    report_["command"] = command_;
  }

  Json& report() { return report_; }

  int emit(int code) {
    const double ms =
        common_.reproducible
            ? 0.0
            : std::chrono::duration<double, std::milli>(Clock::now() - t0_).count();
    report_["elapsed_ms"] = ms;
    out_ << report_.dump() << '\n';
    return code;
  }

  int diagnose(int code, const Error& e, Json extra = Json::object()) {
    Json d;
    d["command"] = command_;
    d["error"] = e.kind();
    d["message"] = e.what();
    for (auto& [k, v] : extra.items()) d[k] = v;
    err_ << d.dump() << '\n';
    return code;
  }

  int diagnose(int code, std::string_view kind, std::string_view message) {
    Json d;
    d["command"] = command_;
    d["error"] = kind;
    d["message"] = message;
    err_ << d.dump() << '\n';
    return code;
  }

private:
  std::string command_;
  const Common& common_;
  std::ostream& out_;
  std::ostream& err_;
  Clock::time_point t0_;
  Json report_;
};

StochasticMatrix load(const Common& common, bool renormalize = false) {
  return StochasticMatrix::validate(read_matrix_file(common.file),
                                    ValidateOptions{common.tol, renormalize});
}

Json validation_details(const ValidationError& e) {
  Json extra = Json::object();
  if (const auto* neg = dynamic_cast<const NegativeEntry*>(&e)) {
    extra["i"] = neg->i;
    extra["j"] = neg->j;
    extra["value"] = neg->value;
  } else if (const auto* row = dynamic_cast<const RowSumViolation*>(&e)) {
    extra["row"] = row->row;
    extra["sum"] = row->sum;
  } else if (const auto* sq = dynamic_cast<const NotSquare*>(&e)) {
    extra["rows"] = sq->rows;
    extra["bad_row"] = sq->bad_row;
    extra["bad_row_length"] = sq->bad_row_length;
  }
  return extra;
}

Json witness_json(const IrreducibilityCertificate& cert) {
  return Json::array({cert.witness->first, cert.witness->second});
}

Json min_powers_json(const MinPowerTable& table) {
  Json rows = Json::array();
  for (const auto& row : table) {
    Json r = Json::array();
    for (const auto& k : row) r.push_back(k ? Json(*k) : Json(nullptr));
    rows.push_back(std::move(r));
  }
  return rows;
}

void put_solution(Json& j, const StationarySolution& s) {
  j["pi"] = s.pi.vector();
  j["residual"] = s.report.residual;
  j["iterations"] = s.report.iterations;
  j["positivity_margin"] = s.report.positivity_margin;
  if (s.report.method == Method::direct) j["kernel_dimension"] = s.report.kernel_dimension;
}

int cmd_validate(Session& s, const Common& common, const ValidateArgs& args) {
  const StochasticMatrix p = load(common, args.renormalize);
  auto& r = s.report();
  r["matrix_file"] = common.file;
  r["n"] = p.size();
  r["valid"] = true;
  r["renormalized"] = args.renormalize;
  return s.emit(kSuccess);
}

int cmd_check(Session& s, const Common& common, const CheckArgs& args) {
  const StochasticMatrix p = load(common);
  const auto cert = is_irreducible(p, {args.threshold, args.full});
  auto& r = s.report();
  r["matrix_file"] = common.file;
  r["n"] = p.size();
  r["irreducible"] = cert.verdict;
  if (cert.witness) r["witness"] = witness_json(cert);
  if (cert.min_powers) r["min_powers"] = min_powers_json(*cert.min_powers);
  return s.emit(cert.verdict ? kSuccess : kReducible);
}

int cmd_solve(Session& s, const Common& common, const SolveArgs& args) {
  const StochasticMatrix p = load(common);
  const auto cert = is_irreducible(p, {args.threshold, false});
  auto& r = s.report();
  r["matrix_file"] = common.file;
  r["n"] = p.size();
  r["irreducible"] = cert.verdict;
  r["method"] = args.method;

  const bool want_direct = args.method == "direct" || args.method == "both";
  const bool want_cesaro = args.method == "cesaro" || args.method == "both";
  const DirectOptions direct_opts{std::nullopt, args.positivity_tol};
  const CesaroOptions cesaro_opts{args.eps, args.max_iter};

  std::optional<StationarySolution> direct;
  if (want_direct) {
    try {
      direct = solve_stationary_direct(p, direct_opts);
    } catch (const NotUniqueStationary& e) {
      r["kernel_dimension"] = e.kernel_dimension;
      r["error"] = e.kind();
      s.emit(kSolverFailure);
      return s.diagnose(kSolverFailure, e, Json{{"kernel_dimension", e.kernel_dimension}});
    } catch (const NonPositiveEntry& e) {
      r["error"] = e.kind();
      s.emit(kSolverFailure);
      return s.diagnose(kSolverFailure, e, Json{{"index", e.index}, {"value", e.value}});
    }
  }

  std::optional<StationarySolution> cesaro;
  if (want_cesaro) {
    if (!cert.verdict) {
      r["witness"] = witness_json(cert);
      r["error"] = "Reducible";
      s.emit(kReducible);
      return s.diagnose(kReducible, "Reducible",
                        "the Cesaro method requires an irreducible matrix");
    }
    r["eps"] = args.eps;
    try {
      cesaro = cesaro_solve(p, cesaro_opts);
    } catch (const MaxIterationsExceeded& e) {
      r["iterations"] = e.iterations;
      r["residual"] = e.residual;
      r["error"] = e.kind();
      s.emit(kSolverFailure);
      return s.diagnose(kSolverFailure, e,
                        Json{{"iterations", e.iterations}, {"residual", e.residual}});
    }
  }

  if (direct && cesaro) {
    Json d, c;
    put_solution(d, *direct);
    put_solution(c, *cesaro);
    r["direct"] = std::move(d);
    r["cesaro"] = std::move(c);
    r["distance"] = distance_inf(direct->pi.values(), cesaro->pi.values());
  } else {
    put_solution(r, direct ? *direct : *cesaro);
  }
  return s.emit(kSuccess);
}

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnvVar);
  if (env == nullptr || *env == '\0') return kDefaultSimulationSeed;
  const std::string text(env);
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.front() == '-')
    throw ParseError(std::string(kSeedEnvVar) + " is not an unsigned integer: " + text);
  return value;
}

int cmd_simulate(Session& s, const Common& common, const SimulateArgs& args) {
  const StochasticMatrix p = load(common);
  const std::uint64_t seed = args.seed ? *args.seed : default_seed();
  auto& r = s.report();
  r["matrix_file"] = common.file;
  r["n"] = p.size();

  std::optional<StationarySolution> direct;
  if (args.compare) {
    const auto cert = is_irreducible(p);
    r["irreducible"] = cert.verdict;
    if (!cert.verdict) {
      r["witness"] = witness_json(cert);
      r["error"] = "Reducible";
      s.emit(kReducible);
      return s.diagnose(kReducible, "Reducible", "--compare requires an irreducible matrix");
    }
    direct = solve_stationary_direct(p);
  }

  const TrajectoryStats stats = sample_trajectory(p, args.start, args.steps, seed);
  const ProbabilityVector empirical = empirical_distribution(stats);
  r["steps"] = stats.steps;
  r["seed"] = stats.seed;
  r["start"] = stats.start;
  r["counts"] = stats.counts;
  r["empirical"] = empirical.vector();
  if (direct) {
    r["pi"] = direct->pi.vector();
    r["distance"] = distance_inf(empirical.values(), direct->pi.values());
  }
  return s.emit(kSuccess);
}

int cmd_generate(Session& s, const GenerateArgs& args) {
  const auto kind = testkit::parse_fixture_kind(args.kind);
  if (!kind) throw InvalidSpec("unknown fixture kind '" + args.kind + "'");
  const StochasticMatrix p = testkit::generate({*kind, args.n, args.seed, args.coupling});
  write_matrix_file(args.out, p);
  auto& r = s.report();
  r["matrix_file"] = args.out;
  r["n"] = p.size();
  r["kind"] = args.kind;
  r["seed"] = args.seed;
  r["coupling"] = args.coupling;
  return s.emit(kSuccess);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stationary distributions of irreducible row-stochastic matrices", "stationary"};
  app.require_subcommand(1);

  Common common;
  app.add_flag("--reproducible", common.reproducible,
               "Report elapsed_ms as 0 so repeated runs give identical reports");

  auto add_matrix_input = [&common](CLI::App* cmd) {
    cmd->add_option("file", common.file, "Matrix file (JSON or CSV)")->required();
    cmd->add_option("--tol", common.tol, "Row-sum tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand("validate", "Check that a matrix is row-stochastic");
  add_matrix_input(validate);
  validate->add_flag("--renormalize", validate_args.renormalize,
                     "Divide rows by their sums after validation");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Decide irreducibility and print a certificate");
  add_matrix_input(check);
  check->add_option("--threshold", check_args.threshold, "Entries <= threshold count as zero")
      ->check(CLI::NonNegativeNumber);
  check->add_flag("--full", check_args.full, "Include the minimal positive power table");

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Compute the stationary distribution");
  add_matrix_input(solve);
  solve->add_option("--method", solve_args.method, "direct, cesaro or both")
      ->check(CLI::IsMember({"direct", "cesaro", "both"}))
      ->capture_default_str();
  solve->add_option("--eps", solve_args.eps, "Cesaro residual tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_option("--max-iter", solve_args.max_iter,
                    "Cesaro iteration limit (default max(1e7, ceil(2/eps)))")
      ->check(CLI::PositiveNumber);
  solve->add_option("--positivity-tol", solve_args.positivity_tol,
                    "Direct solver fails if some pi(i) <= this")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--threshold", solve_args.threshold,
                    "Support threshold for the irreducibility check")
      ->check(CLI::NonNegativeNumber);

  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "Sample a trajectory and count visits");
  add_matrix_input(simulate);
  simulate->add_option("--steps", sim_args.steps, "Number of transitions")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--seed", sim_args.seed, "Generator seed (default: $STATIONARY_SEED)");
  simulate->add_option("--start", sim_args.start, "Initial state")->capture_default_str();
  simulate->add_flag("--compare", sim_args.compare,
                     "Also report the direct solution and its distance to the frequencies");

  GenerateArgs gen_args;
  auto* generate = app.add_subcommand("generate", "Write a deterministic test fixture");
  generate->add_option("--kind", gen_args.kind, "Fixture kind")->required();
  generate->add_option("--n", gen_args.n, "Number of states")->required();
  generate->add_option("--seed", gen_args.seed, "Generator seed")->capture_default_str();
  generate->add_option("--coupling", gen_args.coupling, "Cross-block mass for near_reducible")
      ->capture_default_str();
  generate->add_option("--out", gen_args.out, "Output file (.json or .csv)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kIoOrParseError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Session session(command, common, out, err);
  try {
    if (command == "validate") return cmd_validate(session, common, validate_args);
    if (command == "check") return cmd_check(session, common, check_args);
    if (command == "solve") return cmd_solve(session, common, solve_args);
    if (command == "simulate") return cmd_simulate(session, common, sim_args);
    return cmd_generate(session, gen_args);
  } catch (const ValidationError& e) {
    return session.diagnose(kValidationFailure, e, validation_details(e));
  } catch (const IoError& e) {
    return session.diagnose(kIoOrParseError, e);
  } catch (const ParseError& e) {
    return session.diagnose(kIoOrParseError, e);
  } catch (const SolverError& e) {
    return session.diagnose(kSolverFailure, e);
  } catch (const Error& e) {
    // InvalidSpec, IndexOutOfRange, DimensionMismatch: bad user input.
    return session.diagnose(kValidationFailure, e);
  } catch (const std::invalid_argument& e) {
    return session.diagnose(kValidationFailure, "InvalidArgument", e.what());
  }
}

}  // namespace stationary::cli
