#include "avghaz/estimators.hpp"

#include <vector>

namespace avghaz {

KaplanMeierFit km_fit(const SurvivalData& data) {
  EventTable table = event_table(data);
  std::vector<double> knots{0.0};
  std::vector<double> values{1.0};
  knots.reserve(table.size() + 1);
  values.reserve(table.size() + 1);

  double s = 1.0;
  for (const EventRow& row : table.rows()) {
    s *= 1.0 - static_cast<double>(row.events) /
                   static_cast<double>(row.at_risk);
    knots.push_back(row.time);
    values.push_back(s);
  }
  StepFunction curve(std::move(knots), std::move(values), data.max_time());
  return KaplanMeierFit(std::move(table), std::move(curve));
}

NelsonAalenFit na_fit(const SurvivalData& data) {
  EventTable table = event_table(data);
  std::vector<double> knots{0.0};
  std::vector<double> values{0.0};
  knots.reserve(table.size() + 1);
  values.reserve(table.size() + 1);

  double h = 0.0;
  for (const EventRow& row : table.rows()) {
    h += static_cast<double>(row.events) / static_cast<double>(row.at_risk);
    knots.push_back(row.time);
    values.push_back(h);
  }
  StepFunction curve(std::move(knots), std::move(values), data.max_time());
  return NelsonAalenFit(std::move(table), std::move(curve));
}

}  // namespace avghaz
