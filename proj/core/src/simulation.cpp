#include "avghaz/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "avghaz/error.hpp"

namespace avghaz {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::ConfigInvalid, what);
}

}  // namespace

void validate(const SimulationConfig& config) {
  if (!(config.censor_time > 0.0) || !std::isfinite(config.censor_time)) {
    invalid("censor time must be finite and > 0");
  }
  if (config.sample_sizes.empty()) invalid("no sample sizes");
  for (std::size_t n : config.sample_sizes) {
    if (n == 0) invalid("sample sizes must be >= 1");
  }
  if (config.replications == 0) invalid("replications must be >= 1");
  if (config.tau_grid.empty()) invalid("empty tau grid");
  for (std::size_t i = 0; i < config.tau_grid.size(); ++i) {
    const double tau = config.tau_grid[i];
    if (!(tau > 0.0)) invalid("tau values must be > 0");
    if (tau > config.censor_time) {
      invalid("tau " + std::to_string(tau) + " exceeds the censor time");
    }
    if (i > 0 && !(tau > config.tau_grid[i - 1])) {
      invalid("tau grid must be strictly increasing");
    }
  }
}

std::vector<double> regular_grid(double start, double stop, double step) {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step) ||
      !(step > 0.0) || stop < start) {
    throw Error(ErrorCode::InvalidArgument,
                "grid needs finite start <= stop and step > 0");
  }
  const double span = (stop - start) / step;
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid.push_back(start + static_cast<double>(i) * step);
  }
  // A stop that lands on the grid is emitted exactly as given.
  if (std::abs(grid.back() - stop) <= 1e-9 * step) grid.back() = stop;
  return grid;
}

std::vector<double> default_tau_grid() { return regular_grid(10.0, 120.0, 5.0); }

RandomStream replication_stream(std::uint64_t seed, std::size_t n,
                                std::size_t rep_index) {
  const auto lo = [](std::uint64_t v) {
    return static_cast<std::uint32_t>(v & 0xffffffffu);
  };
  const auto hi = [](std::uint64_t v) {
    return static_cast<std::uint32_t>(v >> 32);
  };
  const auto n64 = static_cast<std::uint64_t>(n);
  const auto r64 = static_cast<std::uint64_t>(rep_index);
  std::seed_seq seq{lo(seed), hi(seed), lo(n64), hi(n64), lo(r64), hi(r64)};
  return RandomStream(seq);
}

std::vector<ReplicationPoint> run_replication(const SimulationConfig& config,
                                              std::size_t n,
                                              std::size_t rep_index) {
  RandomStream rng = replication_stream(config.seed, n, rep_index);
  const SurvivalData data =
      sample_censored(config.model, config.censor_time, n, rng);
  const KaplanMeierFit fit = km_fit(data);

  std::vector<ReplicationPoint> points;
  points.reserve(config.tau_grid.size());
  for (double tau : config.tau_grid) {
    ReplicationPoint p{tau, std::nullopt};
    if (config.extrapolation == Extrapolation::CarryForward ||
        tau <= fit.domain_limit()) {
      p.estimate = average_hazard(fit, tau, config.extrapolation);
    }
    points.push_back(p);
  }
  return points;
}

SimulationSummary run_bias_study(const SimulationConfig& config,
                                 unsigned threads) {
  validate(config);
  const std::size_t reps = config.replications;
  const std::size_t n_tau = config.tau_grid.size();
  const std::size_t jobs = config.sample_sizes.size() * reps;

  // results[job] with job = size_index * reps + rep_index.
  std::vector<std::vector<ReplicationPoint>> results(jobs);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      const std::size_t n = config.sample_sizes[job / reps];
      results[job] = run_replication(config, n, job % reps);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SimulationSummary summary;
  summary.rows.reserve(config.sample_sizes.size() * n_tau);
  for (std::size_t s = 0; s < config.sample_sizes.size(); ++s) {
    for (std::size_t i = 0; i < n_tau; ++i) {
      SummaryRow row{};
      row.n = config.sample_sizes[s];
      row.tau = config.tau_grid[i];
      row.true_ah = config.model.average_hazard(row.tau);

      // Fixed rep order keeps the sums bit-stable.
      double sum = 0.0;
      std::size_t count = 0;
      for (std::size_t r = 0; r < reps; ++r) {
        const auto& est = results[s * reps + r][i].estimate;
        if (!est) continue;
        sum += est->value;
        ++count;
        if (est->degenerate) {
          ++row.n_degenerate;
        } else {
          ++row.n_defined;
        }
      }
      if (count == 0) {
        row.mean_ah = std::numeric_limits<double>::quiet_NaN();
        row.bias = row.mean_ah;
        row.mc_se = 0.0;
      } else {
        row.mean_ah = sum / static_cast<double>(count);
        row.bias = row.mean_ah - row.true_ah;
        double ss = 0.0;
        for (std::size_t r = 0; r < reps; ++r) {
          const auto& est = results[s * reps + r][i].estimate;
          if (!est) continue;
          const double d = est->value - row.mean_ah;
          ss += d * d;
        }
        row.mc_se = count > 1
                        ? std::sqrt(ss / static_cast<double>(count - 1) /
                                    static_cast<double>(count))
                        : 0.0;
      }
      summary.rows.push_back(row);
    }
  }
  return summary;
}

}  // namespace avghaz
