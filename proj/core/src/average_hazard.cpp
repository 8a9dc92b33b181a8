#include "avghaz/average_hazard.hpp"

#include <string>

#include "avghaz/error.hpp"

namespace avghaz {

namespace {

void check_tau(double tau) {
  if (!(tau > 0.0)) {
    throw Error(ErrorCode::NonPositiveTau, "tau must be > 0", std::nullopt,
                tau);
  }
}

}  // namespace

double rmst(const KaplanMeierFit& fit, double tau, Extrapolation policy) {
  check_tau(tau);
  return fit.survival().integral(tau, policy);
}

double cumulative_incidence(const KaplanMeierFit& fit, double tau,
                            Extrapolation policy) {
  check_tau(tau);
  return 1.0 - fit.survival()(tau, policy);
}

AHEstimate average_hazard(const KaplanMeierFit& fit, double tau,
                          Extrapolation policy) {
  AHEstimate est{};
  est.tau = tau;
  est.cum_incidence = cumulative_incidence(fit, tau, policy);
  est.rmst = rmst(fit, tau, policy);
  est.value = est.cum_incidence / est.rmst;
  est.degenerate = est.cum_incidence == 0.0;
  return est;
}

std::vector<AHEstimate> ah_curve(const KaplanMeierFit& fit,
                                 std::span<const double> tau_grid,
                                 Extrapolation policy) {
  if (tau_grid.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty tau grid");
  }
  std::vector<AHEstimate> out;
  out.reserve(tau_grid.size());
  for (std::size_t i = 0; i < tau_grid.size(); ++i) {
    if (i > 0 && !(tau_grid[i] > tau_grid[i - 1])) {
      throw Error(ErrorCode::InvalidArgument,
                  "tau grid must be strictly increasing (index " +
                      std::to_string(i) + ")",
                  i, tau_grid[i]);
    }
    try {
      out.push_back(average_hazard(fit, tau_grid[i], policy));
    } catch (const Error& e) {
      throw Error(e.code(),
                  "tau grid index " + std::to_string(i) + ": " + e.what(), i,
                  tau_grid[i]);
    }
  }
  return out;
}

std::vector<DiscreteHazardRow> discrete_hazard(const KaplanMeierFit& fit) {
  const EventTable& table = fit.table();
  if (table.empty()) {
    throw Error(ErrorCode::NoEvents,
                "discrete hazard needs at least one observed event");
  }
  // Survival knots are 0, t_1, ..., t_K, so values()[j] = S(t_j).
  const auto surv = fit.survival().values();
  std::vector<DiscreteHazardRow> rows;
  rows.reserve(table.size());
  double prev_time = 0.0;
  for (std::size_t j = 0; j < table.size(); ++j) {
    const EventRow& row = table[j];
    DiscreteHazardRow out{};
    out.time = row.time;
    out.gap = row.time - prev_time;
    out.hazard = static_cast<double>(row.events) /
                 (static_cast<double>(row.at_risk) * out.gap);
    out.density = out.hazard * surv[j];
    rows.push_back(out);
    prev_time = row.time;
  }
  return rows;
}

double average_hazard_harmonic(const KaplanMeierFit& fit,
                               std::size_t event_index) {
  const std::size_t k_max = fit.table().size();
  if (event_index < 1 || event_index > k_max) {
    throw Error(ErrorCode::IndexOutOfRange,
                "event index " + std::to_string(event_index) +
                    " outside 1.." + std::to_string(k_max),
                event_index);
  }
  const auto rows = discrete_hazard(fit);
  double numerator = 0.0;
  double denominator = 0.0;
  for (std::size_t j = 0; j < event_index; ++j) {
    const double mass = rows[j].density * rows[j].gap;
    numerator += mass;
    denominator += mass / rows[j].hazard;
  }
  return numerator / denominator;
}

}  // namespace avghaz
