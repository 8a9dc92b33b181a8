#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace avghaz {

enum class Status : std::uint8_t { Event, Censored };

struct Observation {
  double time;
  Status status;

  bool is_event() const noexcept { return status == Status::Event; }
  friend bool operator==(const Observation&, const Observation&) = default;
};

/// Raw input record: status 1 = event, 0 = censored.
struct Record {
  double time;
  int status;
};

/// Validated right-censored sample, sorted by time with events ahead of
/// censorings at tied times.
class SurvivalData {
 public:
  /// Validates and sorts. Throws Error{NonPositiveTime|NonFiniteTime, i}
  /// naming the first bad observation, or EmptyInput.
  static SurvivalData from_observations(std::vector<Observation> observations);

  std::span<const Observation> observations() const noexcept { return obs_; }
  std::size_t size() const noexcept { return obs_.size(); }
  std::size_t event_count() const noexcept;
  double max_time() const noexcept { return obs_.back().time; }

 private:
  explicit SurvivalData(std::vector<Observation> obs) : obs_(std::move(obs)) {}
  std::vector<Observation> obs_;
};

/// Throws Error with EmptyInput, NonPositiveTime(i), NonFiniteTime(i) or
/// BadStatus(i); i is the position in `records`.
SurvivalData ingest(std::span<const Record> records);

}  // namespace avghaz
