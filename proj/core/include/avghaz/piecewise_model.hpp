#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "avghaz/survival_data.hpp"

namespace avghaz {

/// Generator used for every random draw in the library.
using RandomStream = std::mt19937_64;

/// Uniform draw on the open interval (0, 1) with 53 random bits.
double uniform_open(RandomStream& rng);

/// Piecewise-constant hazard lambda_k on [cuts[k], cuts[k+1]); the final
/// piece extends to infinity. Closed-form ground truth for S, H, f and AH.
class PiecewiseExpModel {
 public:
  /// cuts start at 0 and strictly increase; hazards are finite and >= 0,
  /// one per cut. Throws Error{InvalidModel}.
  PiecewiseExpModel(std::vector<double> cuts, std::vector<double> hazards);

  static PiecewiseExpModel constant(double rate);

  std::span<const double> cuts() const noexcept { return cuts_; }
  std::span<const double> hazards() const noexcept { return hazards_; }
  std::size_t pieces() const noexcept { return cuts_.size(); }

  /// Right-continuous: the hazard of piece k applies at cuts[k].
  double hazard(double t) const;
  double cumulative_hazard(double t) const;
  double survival(double t) const;
  double density(double t) const;

  /// integral_0^tau S(u) du in closed form, piece by piece.
  double restricted_mean(double tau) const;

  /// (1 - S(tau)) / restricted_mean(tau). Throws NonPositiveTau.
  double average_hazard(double tau) const;

  /// H(infinity): finite iff the last piece has zero hazard.
  double total_cumulative_hazard() const;

  /// inf{t : H(t) >= target}; +infinity when target exceeds H(infinity).
  double inverse_cumulative_hazard(double target) const;

  /// Inverse-transform draw; may return +infinity (see above).
  double sample(RandomStream& rng) const;

 private:
  std::size_t piece_of(double t) const;

  std::vector<double> cuts_;
  std::vector<double> hazards_;
  std::vector<double> cum_at_cut_;  // H(cuts[k])
};

/// n draws, each censored at censor_time: (min(T, c), Event iff T <= c).
SurvivalData sample_censored(const PiecewiseExpModel& model,
                             double censor_time, std::size_t n,
                             RandomStream& rng);

}  // namespace avghaz
