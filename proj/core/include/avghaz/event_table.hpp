#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "avghaz/survival_data.hpp"

namespace avghaz {

struct EventRow {
  double time;          // t_j
  std::size_t events;   // d_j
  std::size_t at_risk;  // r_j
};

/// Distinct observed event times with event counts and risk-set sizes.
/// Empty when the sample has no events.
class EventTable {
 public:
  EventTable(std::vector<EventRow> rows, std::size_t n_total)
      : rows_(std::move(rows)), n_total_(n_total) {}

  std::span<const EventRow> rows() const noexcept { return rows_; }
  const EventRow& operator[](std::size_t j) const { return rows_[j]; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  std::size_t n_total() const noexcept { return n_total_; }

 private:
  std::vector<EventRow> rows_;
  std::size_t n_total_;
};

/// Tied censorings at t_j are counted in the risk set at t_j.
EventTable event_table(const SurvivalData& data);

}  // namespace avghaz
