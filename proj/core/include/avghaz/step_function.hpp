#pragma once

#include <span>
#include <vector>

namespace avghaz {

/// What to do when a caller asks for a value past the domain limit.
enum class Extrapolation { Error, CarryForward };

/// Right-continuous piecewise-constant function on [0, domain_limit].
/// values[m] holds on [knots[m], knots[m+1]); the last value holds up to
/// domain_limit (and beyond, under CarryForward).
class StepFunction {
 public:
  /// knots must start at 0 and be strictly increasing, one value per knot,
  /// and domain_limit >= knots.back(). Throws Error{InvalidArgument}.
  StepFunction(std::vector<double> knots, std::vector<double> values,
               double domain_limit);

  std::span<const double> knots() const noexcept { return knots_; }
  std::span<const double> values() const noexcept { return values_; }
  double domain_limit() const noexcept { return domain_limit_; }

  /// Value of the last knot <= t. Throws OutOfDomain for t > domain_limit
  /// under Extrapolation::Error and InvalidArgument for t < 0.
  double operator()(double t,
                    Extrapolation policy = Extrapolation::Error) const;

  /// Exact integral over [0, tau] as a sum of rectangles.
  /// Throws NonPositiveTau for tau <= 0, OutOfDomain as above.
  double integral(double tau,
                  Extrapolation policy = Extrapolation::Error) const;

  /// Exact integral over [from, to], 0 <= from <= to.
  double integral(double from, double to,
                  Extrapolation policy = Extrapolation::Error) const;

 private:
  void check_domain(double t, Extrapolation policy) const;

  std::vector<double> knots_;
  std::vector<double> values_;
  double domain_limit_;
};

}  // namespace avghaz
