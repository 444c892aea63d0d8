#include "aoi/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "aoi/closed_form.hpp"
#include "aoi/errors.hpp"
#include "aoi/io.hpp"
#include "aoi/oracle.hpp"
#include "aoi/trajectory.hpp"
#include "aoi/tradeoff.hpp"

namespace aoi::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 1;
constexpr double kGapLow = -1e-6;
constexpr double kGapHigh = 1e-3;

struct InstanceFlags {
  std::string input;
  std::string mode;
  std::optional<double> T;
  std::optional<int> N;
  std::optional<double> c;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::string preset;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& f) {
  cmd->add_option("--input", f.input, "JSON instance file");
  cmd->add_option("--mode", f.mode, "constant | inverse | proportional");
  cmd->add_option("--T", f.T, "Horizon length");
  cmd->add_option("--N", f.N, "Number of updates");
  cmd->add_option("--c", f.c, "Processing floor (constant) or offset (proportional)");
  cmd->add_option("--alpha", f.alpha, "Age coefficient (inverse / proportional)");
  cmd->add_option("--beta", f.beta, "Distortion budget (constant mode, with --distortion)");
  cmd->add_option("--distortion", f.preset, "Distortion preset for --beta: tradeoff | unit");
}

ProblemInstance resolve_instance(const InstanceFlags& f) {
  const bool inline_given = !f.mode.empty() || f.T || f.N || f.c || f.alpha || f.beta;
  if (!f.input.empty()) {
    if (inline_given) throw DomainError("give either --input or inline instance flags, not both");
    return io::load_instance(f.input);
  }
  if (f.mode.empty() || !f.T || !f.N) throw DomainError("need --mode, --T and --N (or --input)");
  nlohmann::json mode{{"type", f.mode}};
  if (f.c) mode["c"] = *f.c;
  if (f.alpha) mode["alpha"] = *f.alpha;
  if (f.beta) {
    mode["beta"] = *f.beta;
    const auto spec = io::distortion_preset(f.preset.empty() ? "unit" : f.preset);
    mode["distortion"] = {{"kind", spec.kind == DistortionKind::Exponential ? "exponential"
                                                                            : "inverse-linear"},
                          {"a", spec.a},
                          {"b", spec.b},
                          {"d", spec.d},
                          {"c_max", spec.c_max}};
  }
  return io::parse_instance(nlohmann::json{{"T", *f.T}, {"N", *f.N}, {"mode", mode}});
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("AOI_SCHED_SEED")) {
    std::uint64_t value = 0;
    std::istringstream in(env);
    if (in >> value && in.eof()) return value;
    throw DomainError("AOI_SCHED_SEED must be an unsigned integer");
  }
  return kDefaultSeed;
}

// Writes to the named file, or to `fallback` when the path is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw DomainError("cannot open output file '" + path + "'");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

int cmd_solve(const InstanceFlags& flags, const std::string& format, const std::string& path,
              std::ostream& out) {
  const auto instance = resolve_instance(flags);
  const auto solution = solve(instance);
  Sink sink(path, out);
  if (format == "table") {
    io::write_solution_table(sink.stream(), instance, solution);
  } else if (format == "csv") {
    io::write_solution_csv(sink.stream(), instance, solution);
  } else if (format == "json-lines") {
    io::write_solution_jsonl(sink.stream(), instance, solution);
  } else {
    throw DomainError("solve: unsupported format '" + format + "'");
  }
  return kOk;
}

ProblemInstance random_instance(ModeKind kind, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick_n(1, 6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ProblemInstance inst;
  inst.N = pick_n(rng);
  inst.T = 1.0 + 19.0 * unit(rng);
  switch (kind) {
    case ModeKind::Constant:
      inst.mode = ConstantMode{unit(rng) * inst.T / inst.N};
      break;
    case ModeKind::InverseAge:
      inst.mode = InverseAgeMode{3.0 * (1.0 - unit(rng))};
      break;
    case ModeKind::ProportionalAge:
      // c <= T/N keeps the tight chain inside the horizon.
      inst.mode = ProportionalAgeMode{(1.0 - unit(rng)) * inst.T / inst.N,
                                      0.01 + 0.48 * unit(rng)};
      break;
  }
  return inst;
}

int cmd_verify(int trials, const std::string& mode, std::uint64_t seed, int restarts,
               std::ostream& out) {
  if (trials < 1) throw DomainError("verify: --trials must be at least 1");
  std::vector<ModeKind> kinds;
  if (mode.empty() || mode == "all") {
    kinds = {ModeKind::Constant, ModeKind::InverseAge, ModeKind::ProportionalAge};
  } else if (mode == "constant") {
    kinds = {ModeKind::Constant};
  } else if (mode == "inverse") {
    kinds = {ModeKind::InverseAge};
  } else if (mode == "proportional") {
    kinds = {ModeKind::ProportionalAge};
  } else {
    throw DomainError("verify: unknown mode '" + mode + "'");
  }

  OracleConfig config;
  config.restarts = restarts;
  bool ok = true;
  out << "mode,trials,max_gap,mean_gap,failures\n";
  for (const auto kind : kinds) {
    std::mt19937_64 rng(seed * 3 + static_cast<std::uint64_t>(kind));
    double max_gap = -INFINITY;
    double sum_gap = 0.0;
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
      const auto inst = random_instance(kind, rng);
      config.seed = rng();
      const double gap = compare(inst, config);
      max_gap = std::max(max_gap, gap);
      sum_gap += gap;
      if (!(gap >= kGapLow && gap <= kGapHigh)) ++failures;
    }
    out << to_string(kind) << ',' << trials << ',' << io::format_number(max_gap) << ','
        << io::format_number(sum_gap / trials) << ',' << failures << "\n";
    ok = ok && failures == 0;
  }
  return ok ? kOk : kVerificationFailed;
}

struct SweepFlags {
  std::string preset = "tradeoff";
  std::string kind;
  std::optional<double> a, b, d, c_max;
  std::optional<double> beta_min, beta_max;
  int steps = 50;
  double T = 10.0;
  int N = 3;
};

int cmd_sweep(const SweepFlags& f, const std::string& path, std::ostream& out,
              std::ostream& err) {
  DistortionSpec spec;
  const bool explicit_curve = !f.kind.empty() || f.a || f.b || f.d || f.c_max;
  if (explicit_curve) {
    if (!f.a || !f.b || !f.d || !f.c_max) throw DomainError("sweep: explicit curve needs --a --b --d --c-max");
    spec = io::parse_distortion({{"kind", f.kind.empty() ? "exponential" : f.kind},
                                 {"a", *f.a},
                                 {"b", *f.b},
                                 {"d", *f.d},
                                 {"c_max", *f.c_max}});
  } else {
    spec = io::distortion_preset(f.preset);
  }
  if (!(f.T > 0.0) || f.N < 1) throw DomainError("sweep: need T > 0 and N >= 1");
  const double lo = f.beta_min.value_or(eval(spec, spec.c_max));
  const double hi = f.beta_max.value_or(eval(spec, 0.0));
  const auto rows = sweep_tradeoff(spec, f.T, f.N, lo, hi, f.steps);
  Sink sink(path, out);
  io::write_sweep_csv(sink.stream(), rows, f.T);
  if (!average_age_nonincreasing(rows, f.T)) {
    err << "sweep: average age increased with the distortion budget\n";
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_trajectory(const InstanceFlags& flags, const std::string& format, double step,
                   const std::string& path, std::ostream& out, std::ostream& err) {
  const auto instance = resolve_instance(flags);
  if (format != "csv" && format != "svg") {
    throw DomainError("trajectory: unsupported format '" + format + "'");
  }
  const auto solution = solve(instance);
  const auto traj = build(solution.schedule);
  Sink sink(path, out);
  if (format == "csv") {
    io::write_trajectory_csv(sink.stream(), sample(traj, step > 0.0 ? step : traj.horizon));
  } else {
    io::write_trajectory_svg(sink.stream(), traj);
  }
  (sink.to_file() ? out : err) << "total_age " << io::format_number(solution.total_age) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Age-of-information optimal update scheduling under distortion constraints",
               "aoi-sched"};
  app.require_subcommand(1);

  InstanceFlags solve_flags;
  std::string solve_format = "table";
  std::string solve_out;
  auto* solve_cmd = app.add_subcommand("solve", "Closed-form optimal schedule");
  add_instance_flags(solve_cmd, solve_flags);
  solve_cmd->add_option("--format", solve_format, "table | csv | json-lines");
  solve_cmd->add_option("--out", solve_out, "Output file (default stdout)");

  int trials = 200;
  std::string verify_mode;
  std::optional<std::uint64_t> verify_seed;
  int restarts = 8;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check closed forms against the oracle");
  verify_cmd->add_option("--trials", trials, "Random instances per mode");
  verify_cmd->add_option("--mode", verify_mode, "constant | inverse | proportional | all");
  verify_cmd->add_option("--seed", verify_seed, "RNG seed (fallback: AOI_SCHED_SEED)");
  verify_cmd->add_option("--restarts", restarts, "Oracle restarts per instance");

  SweepFlags sweep_flags;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Average age versus distortion budget");
  sweep_cmd->add_option("--preset", sweep_flags.preset, "tradeoff | unit");
  sweep_cmd->add_option("--kind", sweep_flags.kind, "exponential | inverse-linear");
  sweep_cmd->add_option("--a", sweep_flags.a);
  sweep_cmd->add_option("--b", sweep_flags.b);
  sweep_cmd->add_option("--d", sweep_flags.d);
  sweep_cmd->add_option("--c-max", sweep_flags.c_max);
  sweep_cmd->add_option("--beta-min", sweep_flags.beta_min, "Default: D(c_max)");
  sweep_cmd->add_option("--beta-max", sweep_flags.beta_max, "Default: D(0)");
  sweep_cmd->add_option("--steps", sweep_flags.steps, "Number of budgets");
  sweep_cmd->add_option("--T", sweep_flags.T, "Horizon length");
  sweep_cmd->add_option("--N", sweep_flags.N, "Number of updates");
  sweep_cmd->add_option("--out", sweep_out, "Output file (default stdout)");

  InstanceFlags traj_flags;
  std::string traj_format = "csv";
  std::string traj_out;
  double step = 0.0;
  auto* traj_cmd = app.add_subcommand("trajectory", "Age curve of the optimal schedule");
  add_instance_flags(traj_cmd, traj_flags);
  traj_cmd->add_option("--format", traj_format, "csv | svg");
  traj_cmd->add_option("--step", step, "Sampling step for csv (default: breakpoints only)");
  traj_cmd->add_option("--out", traj_out, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve_flags, solve_format, solve_out, out);
    if (verify_cmd->parsed()) {
      return cmd_verify(trials, verify_mode, resolve_seed(verify_seed), restarts, out);
    }
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_flags, sweep_out, out, err);
    if (traj_cmd->parsed()) return cmd_trajectory(traj_flags, traj_format, step, traj_out, out, err);
  } catch (const Infeasible& e) {
    err << e.what() << "\n";
    return kInfeasible;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace aoi::cli
