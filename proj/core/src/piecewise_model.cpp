#include "avghaz/piecewise_model.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <string>

#include "avghaz/error.hpp"

namespace avghaz {

double uniform_open(RandomStream& rng) {
  static_assert(RandomStream::max() == std::numeric_limits<std::uint64_t>::max());
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
}

PiecewiseExpModel::PiecewiseExpModel(std::vector<double> cuts,
                                     std::vector<double> hazards)
    : cuts_(std::move(cuts)), hazards_(std::move(hazards)) {
  if (cuts_.empty()) {
    throw Error(ErrorCode::InvalidModel, "model needs at least one piece");
  }
  if (cuts_.size() != hazards_.size()) {
    throw Error(ErrorCode::InvalidModel,
                "cuts and hazards must have the same length");
  }
  if (cuts_.front() != 0.0) {
    throw Error(ErrorCode::InvalidModel, "first cut must be 0");
  }
  for (std::size_t k = 0; k < cuts_.size(); ++k) {
    if (!std::isfinite(cuts_[k]) || (k > 0 && !(cuts_[k] > cuts_[k - 1]))) {
      throw Error(ErrorCode::InvalidModel,
                  "cuts must be finite and strictly increasing", k, cuts_[k]);
    }
    if (!std::isfinite(hazards_[k]) || hazards_[k] < 0.0) {
      throw Error(ErrorCode::InvalidModel,
                  "hazard " + std::to_string(k) + " must be finite and >= 0",
                  k, hazards_[k]);
    }
  }
  cum_at_cut_.resize(cuts_.size());
  cum_at_cut_[0] = 0.0;
  for (std::size_t k = 1; k < cuts_.size(); ++k) {
    cum_at_cut_[k] =
        cum_at_cut_[k - 1] + hazards_[k - 1] * (cuts_[k] - cuts_[k - 1]);
  }
}

PiecewiseExpModel PiecewiseExpModel::constant(double rate) {
  return PiecewiseExpModel({0.0}, {rate});
}

std::size_t PiecewiseExpModel::piece_of(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw Error(ErrorCode::InvalidArgument,
                "model evaluated at a negative or non-finite time",
                std::nullopt, t);
  }
  const auto it = std::upper_bound(cuts_.begin(), cuts_.end(), t);
  return static_cast<std::size_t>(std::distance(cuts_.begin(), it)) - 1;
}

double PiecewiseExpModel::hazard(double t) const {
  return hazards_[piece_of(t)];
}

double PiecewiseExpModel::cumulative_hazard(double t) const {
  const std::size_t k = piece_of(t);
  return cum_at_cut_[k] + hazards_[k] * (t - cuts_[k]);
}

double PiecewiseExpModel::survival(double t) const {
  return std::exp(-cumulative_hazard(t));
}

double PiecewiseExpModel::density(double t) const {
  return hazard(t) * survival(t);
}

double PiecewiseExpModel::restricted_mean(double tau) const {
  if (!(tau > 0.0)) {
    throw Error(ErrorCode::NonPositiveTau, "tau must be > 0", std::nullopt,
                tau);
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < cuts_.size() && cuts_[k] < tau; ++k) {
    const double a = cuts_[k];
    const double b = (k + 1 < cuts_.size()) ? std::min(cuts_[k + 1], tau) : tau;
    const double s_a = std::exp(-cum_at_cut_[k]);
    const double lambda = hazards_[k];
    if (lambda > 0.0) {
      sum += s_a * -std::expm1(-lambda * (b - a)) / lambda;
    } else {
      sum += s_a * (b - a);
    }
  }
  return sum;
}

double PiecewiseExpModel::average_hazard(double tau) const {
  const double denom = restricted_mean(tau);
  // Over a stretch of equal hazard the ratio is that hazard identically.
  const std::size_t last = piece_of(tau);
  const std::size_t covered = (cuts_[last] < tau) ? last : last - 1;
  const bool uniform =
      std::all_of(hazards_.begin(), hazards_.begin() + covered + 1,
                  [&](double h) { return h == hazards_[0]; });
  if (uniform) return hazards_[0];
  return -std::expm1(-cumulative_hazard(tau)) / denom;
}

double PiecewiseExpModel::total_cumulative_hazard() const {
  if (hazards_.back() > 0.0) return std::numeric_limits<double>::infinity();
  return cum_at_cut_.back();
}

double PiecewiseExpModel::inverse_cumulative_hazard(double target) const {
  if (std::isnan(target)) {
    throw Error(ErrorCode::InvalidArgument, "target is NaN");
  }
  if (target <= 0.0) return 0.0;
  const std::size_t m = cuts_.size();
  for (std::size_t k = 0; k < m; ++k) {
    const double lambda = hazards_[k];
    if (lambda == 0.0) continue;
    const bool last = k + 1 == m;
    if (last || target <= cum_at_cut_[k + 1]) {
      const double t = cuts_[k] + (target - cum_at_cut_[k]) / lambda;
      return last ? t : std::min(t, cuts_[k + 1]);
    }
  }
  return std::numeric_limits<double>::infinity();
}

double PiecewiseExpModel::sample(RandomStream& rng) const {
  return inverse_cumulative_hazard(-std::log(uniform_open(rng)));
}

SurvivalData sample_censored(const PiecewiseExpModel& model,
                             double censor_time, std::size_t n,
                             RandomStream& rng) {
  if (!(censor_time > 0.0) || !std::isfinite(censor_time)) {
    throw Error(ErrorCode::InvalidArgument,
                "censor time must be finite and > 0", std::nullopt,
                censor_time);
  }
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  std::vector<Observation> obs;
  obs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = model.sample(rng);
    if (t <= censor_time) {
      obs.push_back({t, Status::Event});
    } else {
      obs.push_back({censor_time, Status::Censored});
    }
  }
  return SurvivalData::from_observations(std::move(obs));
}

}  // namespace avghaz
