// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#include "baudscope/pulse.hpp"

#include <cmath>
#include <numbers>

#include "baudscope/errors.hpp"

namespace baudscope {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(x)/x, stable through x = 0.
double sinc_unnormalized(double x) {
  if (std::abs(x) < 1e-8) {
    return 1.0 - x * x / 6.0;
  }
  return std::sin(x) / x;
}

}  // namespace

double srrc_analytic(double rolloff, double t_symbols) {
  const double a = rolloff;
  const double t = t_symbols;
  if (std::abs(t) < 1e-12) {
    return 1.0 - a + 4.0 * a / kPi;
  }
  const double four_at = 4.0 * a * t;
  const double denom_core = 1.0 - four_at * four_at;
  if (std::abs(denom_core) < 1e-8) {
    // |t| = 1/(4a): both numerator and denominator vanish.
    const double c = kPi / (4.0 * a);
    return (a / std::numbers::sqrt2) *
           ((1.0 + 2.0 / kPi) * std::sin(c) + (1.0 - 2.0 / kPi) * std::cos(c));
  }
  const double num = std::sin(kPi * t * (1.0 - a)) +
                     four_at * std::cos(kPi * t * (1.0 + a));
  return num / (kPi * t * denom_core);
}

FirFilter design_srrc(double rolloff, int span_symbols, int samples_per_symbol) {
  if (!(rolloff >= 0.0 && rolloff <= 1.0)) {
    throw Error(Error::Code::BadRolloff, "roll-off must lie in [0,1]");
  }
  if (span_symbols < 1 || samples_per_symbol < 2) {
    throw Error(Error::Code::BadConfig, "span >= 1 and samples_per_symbol >= 2 required");
  }
  const int half = span_symbols * samples_per_symbol;
  Eigen::ArrayXd taps(2 * half + 1);
  for (int i = 0; i <= half; ++i) {
    const double v = srrc_analytic(rolloff, double(i) / samples_per_symbol);
    taps[half + i] = v;
    taps[half - i] = v;
  }
  taps /= std::sqrt(taps.square().sum());
  return {taps, samples_per_symbol};
}

double rc_pulse_analytic(double rolloff, double period_samples, double t_samples) {
  const double t = std::abs(t_samples) / period_samples;  // even pulse, T = 1
  const double a = rolloff;
  const double u = 2.0 * a * t;
  // cos(pi u / 2) / (1 - u^2) written as sin(pi w / 2) / (w (1 + u)) with
  // w = 1 - u, which stays stable through the u = 1 singularity.
  const double w = 1.0 - u;
  const double shoulder = (kPi / 2.0) * sinc_unnormalized(kPi * w / 2.0) / (1.0 + u);
  return sinc_unnormalized(kPi * t) * shoulder;
}

double rc_derivative_analytic(double rolloff, double period_samples, double t_samples) {
  const double T = period_samples;
  const double a = rolloff;
  const double t = t_samples;
  if (t == 0.0) {
    return 0.0;  // even pulse
  }
  const double d = 4.0 * a * a * t * t / (T * T) - 1.0;
  const bool near_zero = std::abs(t) < 1e-3 * T;
  const bool near_shoulder = std::abs(d) < 1e-7;
  if (near_zero || near_shoulder) {
    const double h = 1e-6 * T;
    return (rc_pulse_analytic(a, T, t + h) - rc_pulse_analytic(a, T, t - h)) / (2.0 * h);
  }
  const double u = kPi * t / T;
  const double v = kPi * a * t / T;
  const double su = std::sin(u);
  const double cu = std::cos(u);
  const double sv = std::sin(v);
  const double cv = std::cos(v);
  return a * su * sv / (t * d) - cu * cv / (t * d) +
         T * su * cv / (kPi * t * t * d) +
         8.0 * a * a * su * cv / (kPi * T * d * d);
}

double rc_slope_at_crossing(double rolloff, int crossing) {
  const double a = rolloff;
  const double m = crossing;
  const double denom = m * (4.0 * a * a * m * m - 1.0);
  if (std::abs(4.0 * a * a * m * m - 1.0) < 1e-9) {
    // m = 1/(2a): the closed form is 0/0, take the numerical limit.
    return rc_derivative_analytic(a, 1.0, m);
  }
  const double sign = (crossing % 2 == 0) ? -1.0 : 1.0;
  return sign * std::cos(kPi * a * m) / denom;
}

}  // namespace baudscope
