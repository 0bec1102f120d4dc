#include "ordent/lambert.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ordent {

namespace {

// 1/e split into a double and its rounding residual.
constexpr double kInvEHi = 0.36787944117144233;
constexpr double kInvELo = -1.2428753672788363e-17;
constexpr double kE = 2.718281828459045235360287;

// Inputs this close to -1/e are the branch point (about 4 ulps of 1/e).
constexpr double kBranchTolerance = 4.0 * 5.551115123125783e-17;

// W0 = -1 + p - p^2/3 + 11/72 p^3 - ... with p = sqrt(2(e x + 1)).
constexpr std::array<double, 10> kBranchSeries = {
    -1.0,
    1.0,
    -1.0 / 3.0,
    11.0 / 72.0,
    -43.0 / 540.0,
    769.0 / 17280.0,
    -221.0 / 8505.0,
    680863.0 / 43545600.0,
    -1963.0 / 204120.0,
    226287557.0 / 37623398400.0,
};

double branch_series(double p) {
  double w = 0.0;
  for (auto it = kBranchSeries.rbegin(); it != kBranchSeries.rend(); ++it) w = w * p + *it;
  return w;
}

// Halley steps on f(w) = w e^w - x. Used for -1/e < x <= e.
double halley_exp_form(double x, double w) {
  for (int i = 0; i < 32; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double w1 = w + 1.0;
    const double step = f / (ew * w1 - (w + 2.0) * f / (2.0 * w1));
    w -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(w)) break;
  }
  return w;
}

// Halley steps on f(w) = w + ln w - ln x, well conditioned for x > e (w > 1)
// and free of overflow for huge x.
double halley_log_form(double x, double w) {
  const double lx = std::log(x);
  for (int i = 0; i < 32; ++i) {
    const double f = w + std::log(w) - lx;
    const double d1 = 1.0 + 1.0 / w;
    const double d2 = -1.0 / (w * w);
    const double step = f / (d1 - 0.5 * f * d2 / d1);
    w -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(w)) break;
  }
  return w;
}

}  // namespace

double lambert_w0(double x) {
  if (std::isnan(x)) throw std::domain_error("lambert_w0: argument is NaN");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) {
    if (x > 0) return x;
    throw std::domain_error("lambert_w0: argument below -1/e");
  }

  // x + 1/e, exact up to the residual of the split constant.
  const double delta = (x + kInvEHi) + kInvELo;
  if (delta < -kBranchTolerance) {
    throw std::domain_error("lambert_w0: argument " + std::to_string(x) + " is below -1/e");
  }
  if (delta <= kBranchTolerance) return -1.0;

  if (x <= -0.25) {
    const double p = std::sqrt(2.0 * kE * delta);
    const double w = branch_series(p);
    // Truncation error is O(p^10); below 0.01 the series is exact to rounding.
    if (p < 0.01) return w;
    return halley_exp_form(x, w);
  }
  if (x <= kE) {
    const double l1 = std::log1p(x);
    const double guess = l1 * (1.0 - std::log1p(l1) / (2.0 + l1));
    return halley_exp_form(x, guess);
  }
  const double l1 = std::log(x);
  const double l2 = std::log(l1);
  return halley_log_form(x, l1 - l2 + l2 / l1);
}

}  // namespace ordent
