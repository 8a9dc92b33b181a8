#include "avghaz/survival_data.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "avghaz/error.hpp"

namespace avghaz {

namespace {

void check_time(double t, std::size_t i) {
  if (!std::isfinite(t)) {
    throw Error(ErrorCode::NonFiniteTime,
                "observation " + std::to_string(i) + ": time is not finite", i,
                t);
  }
  if (t <= 0.0) {
    throw Error(ErrorCode::NonPositiveTime,
                "observation " + std::to_string(i) + ": time must be > 0", i,
                t);
  }
}

}  // namespace

SurvivalData SurvivalData::from_observations(
    std::vector<Observation> observations) {
  if (observations.empty()) {
    throw Error(ErrorCode::EmptyInput, "no observations");
  }
  for (std::size_t i = 0; i < observations.size(); ++i) {
    check_time(observations[i].time, i);
  }
  // Status::Event < Status::Censored, so events lead within a tie.
  std::stable_sort(observations.begin(), observations.end(),
                   [](const Observation& a, const Observation& b) {
                     if (a.time != b.time) return a.time < b.time;
                     return a.status < b.status;
                   });
  return SurvivalData(std::move(observations));
}

std::size_t SurvivalData::event_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(obs_.begin(), obs_.end(),
                    [](const Observation& o) { return o.is_event(); }));
}

SurvivalData ingest(std::span<const Record> records) {
  if (records.empty()) {
    throw Error(ErrorCode::EmptyInput, "no records");
  }
  std::vector<Observation> obs;
  obs.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const Record& r = records[i];
    check_time(r.time, i);
    if (r.status != 0 && r.status != 1) {
      throw Error(ErrorCode::BadStatus,
                  "record " + std::to_string(i) + ": status must be 0 or 1",
                  i, static_cast<double>(r.status));
    }
    obs.push_back({r.time, r.status == 1 ? Status::Event : Status::Censored});
  }
  return SurvivalData::from_observations(std::move(obs));
}

}  // namespace avghaz
