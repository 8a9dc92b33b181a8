#include "avghaz/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <string>

#include "avghaz/error.hpp"

namespace avghaz {

StepFunction::StepFunction(std::vector<double> knots,
                           std::vector<double> values, double domain_limit)
    : knots_(std::move(knots)),
      values_(std::move(values)),
      domain_limit_(domain_limit) {
  if (knots_.empty() || knots_.size() != values_.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "step function needs one value per knot");
  }
  if (knots_.front() != 0.0) {
    throw Error(ErrorCode::InvalidArgument, "first knot must be 0");
  }
  if (!std::is_sorted(knots_.begin(), knots_.end(),
                      [](double a, double b) { return a <= b; })) {
    throw Error(ErrorCode::InvalidArgument,
                "knots must be strictly increasing");
  }
  if (!(domain_limit_ >= knots_.back()) || !std::isfinite(domain_limit_)) {
    throw Error(ErrorCode::InvalidArgument,
                "domain limit must be finite and cover the last knot");
  }
}

void StepFunction::check_domain(double t, Extrapolation policy) const {
  if (t > domain_limit_ && policy == Extrapolation::Error) {
    throw Error(ErrorCode::OutOfDomain,
                "t = " + std::to_string(t) + " exceeds domain limit " +
                    std::to_string(domain_limit_),
                std::nullopt, t);
  }
}

double StepFunction::operator()(double t, Extrapolation policy) const {
  if (!(t >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "step function evaluated at negative time", std::nullopt, t);
  }
  check_domain(t, policy);
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  return values_[static_cast<std::size_t>(std::distance(knots_.begin(), it)) -
                 1];
}

double StepFunction::integral(double tau, Extrapolation policy) const {
  if (!(tau > 0.0)) {
    throw Error(ErrorCode::NonPositiveTau, "tau must be > 0", std::nullopt,
                tau);
  }
  return integral(0.0, tau, policy);
}

double StepFunction::integral(double from, double to,
                              Extrapolation policy) const {
  if (!(from >= 0.0) || !(to >= from)) {
    throw Error(ErrorCode::InvalidArgument,
                "integration bounds must satisfy 0 <= from <= to");
  }
  check_domain(to, policy);
  double sum = 0.0;
  const std::size_t m = knots_.size();
  for (std::size_t k = 0; k < m && knots_[k] < to; ++k) {
    const double lo = std::max(knots_[k], from);
    const double hi = (k + 1 < m) ? std::min(knots_[k + 1], to) : to;
    if (hi > lo) sum += values_[k] * (hi - lo);
  }
  return sum;
}

}  // namespace avghaz
