#include "avghaz/event_table.hpp"

namespace avghaz {

EventTable event_table(const SurvivalData& data) {
  const auto obs = data.observations();
  const std::size_t n = obs.size();
  std::vector<EventRow> rows;

  std::size_t i = 0;
  while (i < n) {
    const double t = obs[i].time;
    // Everything from i onward has time >= t.
    const std::size_t at_risk = n - i;
    std::size_t events = 0;
    while (i < n && obs[i].time == t) {
      if (obs[i].is_event()) ++events;
      ++i;
    }
    if (events > 0) rows.push_back({t, events, at_risk});
  }
  return EventTable(std::move(rows), n);
}

}  // namespace avghaz
