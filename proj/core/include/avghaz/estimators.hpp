#pragma once

#include "avghaz/event_table.hpp"
#include "avghaz/step_function.hpp"
#include "avghaz/survival_data.hpp"

namespace avghaz {

/// Product-limit survival curve. With no events the curve is identically 1
/// and `degenerate()` is true.
class KaplanMeierFit {
 public:
  KaplanMeierFit(EventTable table, StepFunction survival)
      : table_(std::move(table)), survival_(std::move(survival)) {}

  const EventTable& table() const noexcept { return table_; }
  const StepFunction& survival() const noexcept { return survival_; }
  double domain_limit() const noexcept { return survival_.domain_limit(); }
  bool degenerate() const noexcept { return table_.empty(); }

  double operator()(double t,
                    Extrapolation policy = Extrapolation::Error) const {
    return survival_(t, policy);
  }

 private:
  EventTable table_;
  StepFunction survival_;
};

/// Cumulative hazard sum of d_j / r_j. Identically 0 with no events.
class NelsonAalenFit {
 public:
  NelsonAalenFit(EventTable table, StepFunction cum_hazard)
      : table_(std::move(table)), cum_hazard_(std::move(cum_hazard)) {}

  const EventTable& table() const noexcept { return table_; }
  const StepFunction& cum_hazard() const noexcept { return cum_hazard_; }
  double domain_limit() const noexcept { return cum_hazard_.domain_limit(); }
  bool degenerate() const noexcept { return table_.empty(); }

  double operator()(double t,
                    Extrapolation policy = Extrapolation::Error) const {
    return cum_hazard_(t, policy);
  }

 private:
  EventTable table_;
  StepFunction cum_hazard_;
};

KaplanMeierFit km_fit(const SurvivalData& data);
NelsonAalenFit na_fit(const SurvivalData& data);

}  // namespace avghaz
