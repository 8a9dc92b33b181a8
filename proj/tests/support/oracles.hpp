#pragma once

// Test-only reference computations. Nothing here calls into the library's
// estimators; the inputs are raw (time, event) pairs.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "avghaz/survival_data.hpp"

namespace avghaz::testing {

struct RawObs {
  double time;
  bool event;
};

inline std::vector<RawObs> to_raw(const SurvivalData& data) {
  std::vector<RawObs> out;
  for (const auto& o : data.observations()) out.push_back({o.time, o.is_event()});
  return out;
}

inline std::vector<Record> to_records(const std::vector<RawObs>& raw) {
  std::vector<Record> out;
  for (const auto& o : raw) out.push_back({o.time, o.event ? 1 : 0});
  return out;
}

/// Distinct event times, with d_j and r_j counted by scanning every record.
struct BruteTable {
  std::vector<double> times;
  std::vector<double> d;
  std::vector<double> r;
};

inline BruteTable brute_table(const std::vector<RawObs>& raw) {
  std::set<double> ev;
  for (const auto& o : raw) if (o.event) ev.insert(o.time);
  BruteTable t;
  for (double s : ev) {
    double d = 0, r = 0;
    for (const auto& o : raw) {
      if (o.time >= s) r += 1;
      if (o.event && o.time == s) d += 1;
    }
    t.times.push_back(s);
    t.d.push_back(d);
    t.r.push_back(r);
  }
  return t;
}

/// S at each event time, S_0 = 1.
inline std::vector<double> brute_km_at_events(const BruteTable& t) {
  std::vector<double> s{1.0};
  for (std::size_t j = 0; j < t.times.size(); ++j) {
    s.push_back(s.back() * (1.0 - t.d[j] / t.r[j]));
  }
  return s;
}

/// Explicit summation
///   (1 - S(t_i)) / [sum_{j<=i} S(t_{j-1}) (t_j - t_{j-1}) + S(t_i)(tau - t_i)]
/// where t_i is the last event time <= tau and t_0 = 0.
inline double explicit_sum_average_hazard(const std::vector<RawObs>& raw,
                                      double tau) {
  const BruteTable t = brute_table(raw);
  const std::vector<double> s = brute_km_at_events(t);
  std::size_t i = 0;
  while (i < t.times.size() && t.times[i] <= tau) ++i;
  double denom = 0.0;
  double prev = 0.0;
  for (std::size_t j = 1; j <= i; ++j) {
    denom += s[j - 1] * (t.times[j - 1] - prev);
    prev = t.times[j - 1];
  }
  denom += s[i] * (tau - prev);
  return (1.0 - s[i]) / denom;
}

/// Random small right-censored dataset; times are sometimes rounded to
/// force ties between events and censorings.
inline std::vector<RawObs> random_dataset(std::mt19937_64& rng,
                                          std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> n_dist(1, max_n);
  std::exponential_distribution<double> event_dist(0.1);
  std::uniform_real_distribution<double> cens_dist(1.0, 40.0);
  std::bernoulli_distribution round_dist(0.3);
  const std::size_t n = n_dist(rng);
  const bool rounded = round_dist(rng);
  std::vector<RawObs> out;
  for (std::size_t i = 0; i < n; ++i) {
    double t = event_dist(rng) + 1e-3;
    double c = cens_dist(rng);
    if (rounded) {
      t = std::ceil(t);
      c = std::ceil(c);
    }
    out.push_back(t <= c ? RawObs{t, true} : RawObs{c, false});
  }
  return out;
}

/// Adaptive Simpson quadrature on [a, b].
inline double adaptive_simpson(const std::function<double(double)>& f,
                               double a, double b, double tol,
                               int depth = 50) {
  const auto simpson = [&](double lo, double hi, double flo, double fmid,
                           double fhi) {
    return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
  };
  std::function<double(double, double, double, double, double, double, double,
                        int)>
      rec = [&](double lo, double hi, double flo, double fmid, double fhi,
                double whole, double eps, int d) -> double {
    const double mid = 0.5 * (lo + hi);
    const double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(lo, mid, flo, flm, fmid);
    const double right = simpson(mid, hi, fmid, frm, fhi);
    if (d <= 0 || std::abs(left + right - whole) <= 15.0 * eps) {
      return left + right + (left + right - whole) / 15.0;
    }
    return rec(lo, mid, flo, flm, fmid, left, eps / 2, d - 1) +
           rec(mid, hi, fmid, frm, fhi, right, eps / 2, d - 1);
  };
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return rec(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, depth);
}

/// Two-sided one-sample Kolmogorov-Smirnov statistic.
inline double ks_statistic(std::vector<double> sample,
                           const std::function<double(double)>& cdf) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f,
                  f - static_cast<double>(i) / n});
  }
  return d;
}

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace avghaz::testing
