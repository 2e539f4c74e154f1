#include "meanratio/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "meanratio/bounds.hpp"
#include "meanratio/oracle.hpp"
#include "meanratio/sweep.hpp"

namespace meanratio::cli {

namespace {

using Json = nlohmann::ordered_json;

struct GlobalOptions {
  std::uint64_t seed = 0;
  bool json = false;
  std::string out;
  /// Agreement threshold |bound - oracle max| for verify.
  double tolerance = 1e-6;
  double feasibility_tolerance = kDefaultFeasibilityTolerance;
};

const std::map<std::string, Mode> kModes{{"am", Mode::RelativeToAM},
                                         {"gm", Mode::RelativeToGM}};

struct InstanceOptions {
  std::string mode;
  std::size_t n = 0;
  std::vector<double> ratios;

  KnownRatios instance() const {
    return KnownRatios{.n = n, .mode = kModes.at(mode), .ratios = ratios};
  }
};

struct BoundOptions {
  std::string formula = "all";
  std::vector<double> lambdas;
};

struct VerifyOptions {
  oracle::OracleConfig oracle;
  std::size_t samples = 100'000;
};

void add_instance_options(CLI::App& sub, InstanceOptions& opts) {
  sub.add_option("--mode", opts.mode, "Known values are relative to the AM or GM")
      ->required()
      ->check(CLI::IsMember({"am", "gm"}));
  sub.add_option("-n", opts.n, "How many numbers in total")
      ->required()
      ->check(CLI::PositiveNumber);
  sub.add_option("-r,--ratios", opts.ratios, "Known ratios r_1,...,r_m")
      ->required()
      ->delimiter(',');
}

std::string join_reals(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += format_real(xs[i]);
  }
  return s;
}

std::string echo(const std::vector<std::string>& args) {
  std::string s;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ' ';
    s += args[i];
  }
  return s;
}

Json instance_json(const KnownRatios& instance) {
  return Json{{"n", instance.n},
              {"mode", to_string(instance.mode)},
              {"ratios", instance.ratios}};
}

Json bound_json(const BoundReport& report) {
  Json j{{"formula", to_string(report.formula)},
         {"value", report.value},
         {"lambdas", nullptr},
         {"degenerate", report.degenerate}};
  if (report.lambdas_used) j["lambdas"] = report.lambdas_used->values;
  return j;
}

struct Skipped {
  Formula formula;
  std::string reason;
};

// Result of a command before rendering.
struct Rendered {
  std::string text;
  int code = kSuccess;
};

std::string header_text(const std::string& command, const KnownRatios& instance) {
  return fmt::format("command: {}\nmode: {}\nn: {}\nratios: {}\n", command,
                     to_string(instance.mode), instance.n,
                     join_reals(instance.ratios));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// Largest and smallest of exactly two ratios, for the Tung forms.
std::pair<double, double> extremes(const KnownRatios& instance) {
  if (instance.m() != 2) {
    throw UsageError("Tung forms need exactly two ratios (largest, smallest)");
  }
  const auto [lo, hi] =
      std::minmax(instance.ratios[0], instance.ratios[1]);
  return {hi, lo};
}

BoundReport tung_report(const KnownRatios& instance) {
  const auto [r1, r2] = extremes(instance);
  return instance.mode == Mode::RelativeToAM ? tung_bound_am(instance.n, r1, r2)
                                             : tung_bound_gm(instance.n, r1, r2);
}

BoundReport gap_report(const KnownRatios& instance) {
  const auto [r1, r2] = extremes(instance);
  return tung_gap(instance.n, r1, r2);
}

BoundReport objective_report(const KnownRatios& instance,
                             const std::vector<double>& given) {
  LambdaVector lambdas{given};
  const bool am = instance.mode == Mode::RelativeToAM;
  if (lambdas.values.empty()) {
    lambdas = am ? optimal_lambdas_am(instance) : optimal_lambdas_gm(instance);
  }
  const double value =
      am ? objective_f(instance, lambdas) : objective_g(instance, lambdas);
  return BoundReport{.value = value,
                     .formula = am ? Formula::ObjectiveF : Formula::ObjectiveG,
                     .lambdas_used = lambdas,
                     .instance = instance};
}

Rendered cmd_bound(const std::string& command, const GlobalOptions& global,
                   const InstanceOptions& opts, const BoundOptions& bound) {
  const auto start = std::chrono::steady_clock::now();
  const KnownRatios instance = opts.instance();
  if (Verdict v = validate(instance, global.feasibility_tolerance); !v) {
    throw FeasibilityError(v.violation);
  }

  std::vector<BoundReport> reports;
  std::vector<Skipped> skipped;
  const bool all = bound.formula == "all";
  if (all || bound.formula == "xia") {
    reports.push_back(xia_bound(instance, global.feasibility_tolerance));
  }
  if (bound.formula == "tung") reports.push_back(tung_report(instance));
  if (bound.formula == "gap") reports.push_back(gap_report(instance));
  if (bound.formula == "objective") {
    reports.push_back(objective_report(instance, bound.lambdas));
  }
  if (all && instance.m() == 2) {
    const Formula tung = instance.mode == Mode::RelativeToAM ? Formula::Tung1
                                                             : Formula::Tung2;
    try {
      reports.push_back(tung_report(instance));
    } catch (const FeasibilityError& e) {
      skipped.push_back({tung, e.what()});
    }
    reports.push_back(gap_report(instance));
  }
  if (all && instance.m() < instance.n) {
    try {
      reports.push_back(objective_report(instance, bound.lambdas));
    } catch (const DegenerateError& e) {
      skipped.push_back({instance.mode == Mode::RelativeToAM
                             ? Formula::ObjectiveF
                             : Formula::ObjectiveG,
                         e.what()});
    }
  }

  Rendered r;
  if (global.json) {
    Json j{{"command", command},
           {"tool_version", kToolVersion},
           {"seed", global.seed},
           {"instance", instance_json(instance)},
           {"bounds", Json::array()},
           {"skipped", Json::array()},
           {"oracle", nullptr}};
    for (const auto& rep : reports) j["bounds"].push_back(bound_json(rep));
    for (const auto& s : skipped) {
      j["skipped"].push_back(
          Json{{"formula", to_string(s.formula)}, {"reason", s.reason}});
    }
    j["duration_seconds"] = seconds_since(start);
    r.text = j.dump(2) + "\n";
    return r;
  }

  r.text = header_text(command, instance);
  for (const auto& rep : reports) {
    r.text += fmt::format("{}: {}\n", to_string(rep.formula),
                          format_real(rep.value));
    if (rep.lambdas_used) {
      r.text += fmt::format("lambdas: {}\n", join_reals(rep.lambdas_used->values));
    }
    if (rep.degenerate) r.text += "degenerate: true\n";
  }
  for (const auto& s : skipped) {
    r.text += fmt::format("{}: n/a ({})\n", to_string(s.formula), s.reason);
  }
  return r;
}

Rendered cmd_verify(const std::string& command, const GlobalOptions& global,
                    const InstanceOptions& opts, VerifyOptions verify) {
  const auto start = std::chrono::steady_clock::now();
  const KnownRatios instance = opts.instance();
  if (Verdict v = validate(instance, global.feasibility_tolerance); !v) {
    throw FeasibilityError(v.violation);
  }
  verify.oracle.seed = global.seed;
  const oracle::OracleResult best = oracle::maximize_ratio(instance, verify.oracle);
  const oracle::SoundnessResult sound =
      oracle::soundness_sweep(instance, verify.samples, global.seed);
  const bool pass =
      std::abs(best.gap) <= global.tolerance && sound.violations == 0;

  Rendered r;
  r.code = pass ? kSuccess : kVerificationFailed;
  if (global.json) {
    Json j{{"command", command},
           {"tool_version", kToolVersion},
           {"seed", global.seed},
           {"instance", instance_json(instance)},
           {"bounds", Json::array({bound_json(xia_bound(
                          instance, global.feasibility_tolerance))})},
           {"skipped", Json::array()},
           {"oracle",
            Json{{"restarts", verify.oracle.restarts},
                 {"max_iterations", verify.oracle.max_iterations},
                 {"step_tolerance", verify.oracle.step_tolerance},
                 {"max_ratio", best.max_ratio},
                 {"closed_form_bound", best.closed_form_bound},
                 {"gap", best.gap},
                 {"converged", best.converged},
                 {"iterations_used", best.iterations_used},
                 {"best_restart", best.best_restart},
                 {"argmax", best.argmax.values},
                 {"samples", sound.samples},
                 {"violations", sound.violations},
                 {"sample_max_ratio", sound.max_ratio},
                 {"tolerance", global.tolerance},
                 {"pass", pass}}}};
    j["duration_seconds"] = seconds_since(start);
    r.text = j.dump(2) + "\n";
    return r;
  }

  r.text = header_text(command, instance);
  r.text += fmt::format(
      "seed: {}\nbound: {}\noracle_max: {}\ngap: {}\nconverged: {}\n"
      "iterations: {}\nbest_restart: {}\nsamples: {}\nviolations: {}\n"
      "sample_max: {}\nverdict: {}\n",
      global.seed, format_real(best.closed_form_bound),
      format_real(best.max_ratio), format_real(best.gap), best.converged,
      best.iterations_used, best.best_restart, sound.samples, sound.violations,
      format_real(sound.max_ratio), pass ? "pass" : "fail");
  return r;
}

Rendered cmd_sweep(const std::string& command, const GlobalOptions& global,
                   SweepSpec spec) {
  const auto start = std::chrono::steady_clock::now();
  if (global.json) spec.output_format = OutputFormat::JSON;
  const auto rows = run_sweep(spec);

  Rendered r;
  if (spec.output_format == OutputFormat::CSV) {
    r.text = render_sweep_csv(rows);
    return r;
  }
  auto opt = [](const std::optional<double>& v) -> Json {
    return v ? Json(*v) : Json(nullptr);
  };
  Json j{{"command", command},
         {"tool_version", kToolVersion},
         {"seed", global.seed},
         {"spec",
          Json{{"n", spec.n},
               {"mode", to_string(spec.mode)},
               {"r1", spec.r1},
               {"r2_start", spec.r2_start},
               {"r2_end", spec.r2_end},
               {"points", spec.points}}},
         {"rows", Json::array()}};
  for (const auto& row : rows) {
    j["rows"].push_back(Json{{"r2", row.r2},
                             {"xia_bound", opt(row.xia)},
                             {"tung_bound", opt(row.tung)},
                             {"margin", opt(row.margin)},
                             {"domain_ok", row.domain_ok}});
  }
  j["duration_seconds"] = seconds_since(start);
  r.text = j.dump(2) + "\n";
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Sharp bounds on G_n/A_n with known values", "meanratio"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  GlobalOptions global;
  app.add_option("--seed", global.seed, "Seed for the oracle and sampling");
  app.add_flag("--json", global.json, "Emit a JSON report");
  app.add_option("--out", global.out, "Write the report to this file");
  app.add_option("--tolerance", global.tolerance,
                 "verify: maximum |bound - oracle max| accepted")
      ->check(CLI::PositiveNumber);
  app.add_option("--feasibility-tolerance", global.feasibility_tolerance,
                 "Relative tolerance of the feasibility checks")
      ->check(CLI::NonNegativeNumber);

  InstanceOptions bound_instance;
  BoundOptions bound;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate closed-form bounds");
  bound_cmd->fallthrough();
  add_instance_options(*bound_cmd, bound_instance);
  bound_cmd->add_option("--formula", bound.formula, "Which bound(s) to print")
      ->check(CLI::IsMember({"xia", "tung", "gap", "objective", "all"}));
  bound_cmd
      ->add_option("--lambdas", bound.lambdas,
                   "λ for --formula objective (default: optimal)")
      ->delimiter(',');

  InstanceOptions verify_instance;
  VerifyOptions verify;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check a bound against the oracle");
  verify_cmd->fallthrough();
  add_instance_options(*verify_cmd, verify_instance);
  verify_cmd->add_option("--restarts", verify.oracle.restarts)
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-iterations", verify.oracle.max_iterations)
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--step-tolerance", verify.oracle.step_tolerance)
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--parallelism", verify.oracle.parallelism,
                         "Oracle threads, 0 = auto");
  verify_cmd->add_option("--samples", verify.samples, "Soundness samples")
      ->check(CLI::PositiveNumber);

  SweepSpec spec{.r2_start = 0.1, .r2_end = 1.0, .points = 91};
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Tabulate sharp vs Tung bounds over r2");
  sweep_cmd->fallthrough();
  std::string sweep_mode;
  std::string sweep_format = "csv";
  sweep_cmd->add_option("--mode", sweep_mode)
      ->required()
      ->check(CLI::IsMember({"am", "gm"}));
  sweep_cmd->add_option("-n", spec.n)->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--r1", spec.r1)->required();
  sweep_cmd->add_option("--r2-start", spec.r2_start);
  sweep_cmd->add_option("--r2-end", spec.r2_end);
  sweep_cmd->add_option("--points", spec.points);
  sweep_cmd->add_option("--format", sweep_format)
      ->check(CLI::IsMember({"csv", "json"}));

  // CLI11 consumes arguments from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  const std::string command = echo(args);
  Rendered rendered;
  try {
    if (bound_cmd->parsed()) {
      rendered = cmd_bound(command, global, bound_instance, bound);
    } else if (verify_cmd->parsed()) {
      rendered = cmd_verify(command, global, verify_instance, verify);
    } else {
      spec.mode = kModes.at(sweep_mode);
      spec.output_format =
          sweep_format == "json" ? OutputFormat::JSON : OutputFormat::CSV;
      check(spec);
      rendered = cmd_sweep(command, global, spec);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "infeasible instance: " << e.what() << "\n";
    return kInfeasible;
  }

  if (global.out.empty()) {
    out << rendered.text;
  } else {
    std::ofstream file(global.out, std::ios::binary);
    file << rendered.text;
    file.close();
    if (!file) {
      err << "cannot write " << global.out << "\n";
      return kOutputError;
    }
  }
  return rendered.code;
}

}  // namespace meanratio::cli
