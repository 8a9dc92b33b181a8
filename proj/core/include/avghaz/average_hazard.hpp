#pragma once

// Kaplan-Meier plug-in estimation of the average hazard
//
//   AH(tau) = (1 - S(tau)) / integral_0^tau S(u) du
//
// together with the discrete hazard/density quantities defined at observed
// event times and the harmonic-mean form built from them.

#include <cstddef>
#include <span>
#include <vector>

#include "avghaz/estimators.hpp"
#include "avghaz/step_function.hpp"

namespace avghaz {

struct AHEstimate {
  double tau;
  double cum_incidence;  // 1 - S(tau)
  double rmst;           // integral_0^tau S(u) du
  double value;          // cum_incidence / rmst
  bool degenerate;       // no events by tau, value == 0
};

/// Restricted mean survival time. Under CarryForward the final survival
/// value extends past the domain limit.
double rmst(const KaplanMeierFit& fit, double tau,
            Extrapolation policy = Extrapolation::Error);

double cumulative_incidence(const KaplanMeierFit& fit, double tau,
                            Extrapolation policy = Extrapolation::Error);

/// Throws NonPositiveTau or OutOfDomain (the latter only under
/// Extrapolation::Error). A tau at an event time includes that event's jump.
AHEstimate average_hazard(const KaplanMeierFit& fit, double tau,
                          Extrapolation policy = Extrapolation::Error);

/// Element-wise average_hazard over a non-empty, strictly increasing grid.
/// Errors carry the grid index of the failing point.
std::vector<AHEstimate> ah_curve(const KaplanMeierFit& fit,
                                 std::span<const double> tau_grid,
                                 Extrapolation policy = Extrapolation::Error);

struct DiscreteHazardRow {
  double time;    // t_j
  double gap;     // t_j - t_{j-1}, with t_0 = 0
  double hazard;  // d_j / (r_j * gap)
  double density; // hazard * S(t_{j-1})
};

/// Discrete hazard and density at the observed event times only.
/// Throws NoEvents for a fit without events.
std::vector<DiscreteHazardRow> discrete_hazard(const KaplanMeierFit& fit);

/// Harmonic-mean form evaluated at tau = t_k, where k is the 1-based
/// event index:
///
///   sum_{j<=k} f_j gap_j  /  sum_{j<=k} f_j gap_j / h_j
///
/// Only defined at event times; between them the discrete hazard does not
/// exist. Throws IndexOutOfRange unless 1 <= k <= K.
double average_hazard_harmonic(const KaplanMeierFit& fit,
                               std::size_t event_index);

}  // namespace avghaz
