#pragma once

// Repeated-sampling bias study of the plug-in average hazard estimator.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "avghaz/average_hazard.hpp"
#include "avghaz/piecewise_model.hpp"
#include "avghaz/step_function.hpp"

namespace avghaz {

struct SimulationConfig {
  PiecewiseExpModel model;
  double censor_time;
  std::vector<std::size_t> sample_sizes;
  std::size_t replications;
  std::vector<double> tau_grid;
  std::uint64_t seed;
  Extrapolation extrapolation = Extrapolation::CarryForward;
};

/// Throws Error{ConfigInvalid} describing the first violated constraint.
void validate(const SimulationConfig& config);

/// start, start+step, ... up to stop inclusive (stop is kept when it lands
/// on the grid up to rounding). Throws InvalidArgument on a bad spec.
std::vector<double> regular_grid(double start, double stop, double step);

/// 10, 15, ..., 120.
std::vector<double> default_tau_grid();

/// Generator for one replication. The state is obtained by feeding the
/// 32-bit halves of (seed, n, rep_index) through std::seed_seq into
/// mt19937_64, so it depends only on those three values.
RandomStream replication_stream(std::uint64_t seed, std::size_t n,
                                std::size_t rep_index);

struct ReplicationPoint {
  double tau;
  std::optional<AHEstimate> estimate;  // empty when tau is out of domain
};

/// One simulated dataset of size n, fitted and evaluated over the grid.
/// A pure function of (config, n, rep_index).
std::vector<ReplicationPoint> run_replication(const SimulationConfig& config,
                                              std::size_t n,
                                              std::size_t rep_index);

struct SummaryRow {
  std::size_t n;
  double tau;
  double true_ah;
  double mean_ah;
  double bias;
  double mc_se;
  std::size_t n_defined;
  std::size_t n_degenerate;
};

struct SimulationSummary {
  std::vector<SummaryRow> rows;  // ordered by (n as configured, tau)
};

/// Degenerate replications enter the mean with value 0. Out-of-domain
/// replications are left out at that tau. threads == 0 means hardware
/// concurrency; the result does not depend on it.
SimulationSummary run_bias_study(const SimulationConfig& config,
                                 unsigned threads = 1);

}  // namespace avghaz
