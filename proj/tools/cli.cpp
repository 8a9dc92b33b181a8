#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "avghaz/average_hazard.hpp"
#include "avghaz/error.hpp"
#include "avghaz/estimators.hpp"
#include "avghaz/io.hpp"
#include "avghaz/piecewise_model.hpp"
#include "avghaz/simulation.hpp"

namespace avghaz::cli {

namespace {

namespace fs = std::filesystem;
using io::format_double;

const std::map<std::string, Extrapolation> kExtrapolation{
    {"error", Extrapolation::Error},
    {"carry-forward", Extrapolation::CarryForward}};

/// Thrown for bad flag values found after CLI11 parsing succeeded.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TauOptions {
  std::string list;
  std::string grid;

  void add_to(CLI::App& sub) {
    auto* l = sub.add_option("--tau", list,
                             "Comma-separated truncation times, or start:stop:step");
    auto* g = sub.add_option("--tau-grid", grid,
                             "Truncation grid start:stop:step (stop inclusive)");
    l->excludes(g);
  }

  std::vector<double> resolve(std::optional<std::string> fallback = {}) const {
    std::string spec = !list.empty() ? list : grid;
    if (spec.empty()) {
      if (!fallback) throw UsageError("one of --tau or --tau-grid is required");
      spec = *fallback;
    }
    try {
      return io::parse_tau_spec(spec);
    } catch (const Error& e) {
      throw UsageError(std::string("bad tau specification: ") + e.what());
    }
  }
};

struct ModelOptions {
  std::string model_file;
  std::optional<double> constant_rate;

  void add_to(CLI::App& sub) {
    auto* f = sub.add_option("--hazard-model", model_file,
                             "JSON model file with 'cuts' and 'hazards'");
    auto* c = sub.add_option("--constant-hazard", constant_rate,
                             "Constant hazard rate per time unit");
    f->excludes(c);
  }

  PiecewiseExpModel resolve() const {
    if (!model_file.empty()) return io::read_model(fs::path(model_file));
    if (!constant_rate) {
      throw UsageError("one of --hazard-model or --constant-hazard is required");
    }
    return PiecewiseExpModel::constant(*constant_rate);
  }
};

void check_output_path(const std::string& out_path) {
  if (out_path.empty()) return;
  const fs::path parent = fs::absolute(fs::path(out_path)).parent_path();
  if (!fs::is_directory(parent)) {
    throw UsageError("output directory '" + parent.string() + "' does not exist");
  }
}

void emit(const std::string& out_path, const std::string& content,
          std::ostream& out) {
  if (out_path.empty()) {
    out << content;
  } else {
    io::write_file_atomic(fs::path(out_path), content);
  }
}

// estimate ------------------------------------------------------------------

struct EstimateArgs {
  std::string input;
  TauOptions tau;
  std::string extrapolation = "error";
  bool harmonic = false;
  std::string out;
};

int cmd_estimate(const EstimateArgs& a, std::ostream& out, std::ostream& err) {
  check_output_path(a.out);
  const std::vector<double> taus = a.tau.resolve();
  const Extrapolation policy = kExtrapolation.at(a.extrapolation);
  const SurvivalData data = io::read_survival_csv(fs::path(a.input));
  const KaplanMeierFit fit = km_fit(data);
  if (fit.degenerate()) {
    err << "warning: no events in input; survival is identically 1\n";
  }

  const auto rows = fit.table().rows();
  std::ostringstream csv;
  csv << "tau,cum_incidence,rmst,ah,degenerate";
  if (a.harmonic) csv << ",harmonic";
  csv << '\n';
  for (double tau : taus) {
    AHEstimate est{};
    try {
      est = average_hazard(fit, tau, policy);
    } catch (const Error& e) {
      throw Error(e.code(), "tau=" + format_double(tau) + ": " + e.what(),
                  std::nullopt, tau);
    }
    csv << format_double(tau) << ',' << format_double(est.cum_incidence) << ','
        << format_double(est.rmst) << ',' << format_double(est.value) << ','
        << (est.degenerate ? 1 : 0);
    if (a.harmonic) {
      csv << ',';
      const auto it = std::find_if(rows.begin(), rows.end(),
                                   [&](const EventRow& r) { return r.time == tau; });
      if (it != rows.end()) {
        const auto k = static_cast<std::size_t>(it - rows.begin()) + 1;
        csv << format_double(average_hazard_harmonic(fit, k));
      }
    }
    csv << '\n';
  }
  emit(a.out, csv.str(), out);
  return kOk;
}

// simulate ------------------------------------------------------------------

struct SimulateArgs {
  ModelOptions model;
  double censor_at = 120.0;
  std::vector<std::size_t> n{10, 30, 50, 100};
  std::size_t reps = 1000;
  TauOptions tau;
  unsigned long long seed = kDefaultSeed;
  unsigned threads = 1;
  std::string extrapolation = "carry-forward";
  std::string out;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  check_output_path(a.out);
  SimulationConfig config{a.model.resolve(),
                          a.censor_at,
                          a.n,
                          a.reps,
                          a.tau.resolve("10:120:5"),
                          a.seed,
                          kExtrapolation.at(a.extrapolation)};
  try {
    validate(config);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const SimulationSummary summary = run_bias_study(config, a.threads);

  std::ostringstream csv;
  io::write_summary_csv(csv, summary);
  emit(a.out, csv.str(), out);

  std::ostream& digest = a.out.empty() ? err : out;
  digest << "max |bias|:";
  for (std::size_t n : config.sample_sizes) {
    double worst = 0.0;
    double at = 0.0;
    for (const SummaryRow& r : summary.rows) {
      if (r.n == n && std::isfinite(r.bias) && std::abs(r.bias) >= worst) {
        worst = std::abs(r.bias);
        at = r.tau;
      }
    }
    digest << " n=" << n << ' ' << format_double(worst) << " (tau="
           << format_double(at) << ')';
  }
  digest << '\n';
  return kOk;
}

// oracle --------------------------------------------------------------------

struct OracleArgs {
  ModelOptions model;
  TauOptions tau;
  std::string what = "ah";
  std::string out;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  check_output_path(a.out);
  const std::vector<double> taus = a.tau.resolve();
  const PiecewiseExpModel model = a.model.resolve();

  std::ostringstream csv;
  csv << "tau,value\n";
  for (double tau : taus) {
    if (a.what == "ah" ? !(tau > 0.0) : !(tau >= 0.0)) {
      throw Error(a.what == "ah" ? ErrorCode::NonPositiveTau
                                 : ErrorCode::InvalidArgument,
                  "tau=" + format_double(tau) + " outside the model's domain",
                  std::nullopt, tau);
    }
    double v = 0.0;
    if (a.what == "survival") {
      v = model.survival(tau);
    } else if (a.what == "cumhaz") {
      v = model.cumulative_hazard(tau);
    } else if (a.what == "density") {
      v = model.density(tau);
    } else {
      v = model.average_hazard(tau);
    }
    csv << format_double(tau) << ',' << format_double(v) << '\n';
  }
  emit(a.out, csv.str(), out);
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfDomain:
    case ErrorCode::NonPositiveTau:
    case ErrorCode::InvalidArgument:
      return kDomainError;
    case ErrorCode::InvalidModel:
      return kModelError;
    default:
      return kUsageOrParseError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Average hazard estimation, bias studies and analytic oracle",
               "avghaz"};
  app.require_subcommand(1);

  EstimateArgs est;
  auto* estimate = app.add_subcommand(
      "estimate", "Kaplan-Meier plug-in average hazard from a time,status CSV");
  estimate->add_option("--input,-i", est.input, "Input CSV (time,status)")
      ->required()
      ->check(CLI::ExistingFile);
  est.tau.add_to(*estimate);
  estimate->add_option("--extrapolation", est.extrapolation,
                       "Beyond the last observation: error | carry-forward")
      ->check(CLI::IsMember({"error", "carry-forward"}));
  estimate->add_flag("--harmonic", est.harmonic,
                     "Add the harmonic-form value at observed event times");
  estimate->add_option("--out,-o", est.out, "Output CSV (default: stdout)");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand(
      "simulate", "Monte Carlo bias study of the average hazard estimator");
  sim.model.add_to(*simulate);
  simulate->add_option("--censor-at", sim.censor_at, "Administrative censoring time")
      ->capture_default_str();
  simulate->add_option("--n", sim.n, "Comma-separated sample sizes")
      ->delimiter(',')
      ->capture_default_str();
  simulate->add_option("--reps", sim.reps, "Replications per sample size")
      ->capture_default_str();
  sim.tau.add_to(*simulate);
  simulate->add_option("--seed", sim.seed, "Base seed")->capture_default_str();
  simulate->add_option("--threads", sim.threads,
                       "Worker threads (0 = hardware); output does not depend on it")
      ->capture_default_str();
  simulate->add_option("--extrapolation", sim.extrapolation,
                       "Beyond the last observation: error | carry-forward")
      ->check(CLI::IsMember({"error", "carry-forward"}))
      ->capture_default_str();
  simulate->add_option("--out,-o", sim.out, "Summary CSV (default: stdout)");

  OracleArgs orc;
  auto* oracle = app.add_subcommand(
      "oracle", "Closed-form S, H, f or AH of a piecewise-exponential model");
  orc.model.add_to(*oracle);
  orc.tau.add_to(*oracle);
  oracle->add_option("--what", orc.what, "survival | cumhaz | density | ah")
      ->check(CLI::IsMember({"survival", "cumhaz", "density", "ah"}))
      ->capture_default_str();
  oracle->add_option("--out,-o", orc.out, "Output CSV (default: stdout)");

  std::vector<const char*> argv{"avghaz"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsageOrParseError;
  }

  try {
    if (estimate->parsed()) return cmd_estimate(est, out, err);
    if (simulate->parsed()) return cmd_simulate(sim, out, err);
    return cmd_oracle(orc, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace avghaz::cli
