// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "baudscope/pulse.hpp"

using namespace baudscope;

namespace {

// Quadrature oracle: RC(tau) as the self-convolution of the continuous
// unit-energy SRRC, integrated by Simpson's rule over a wide support so the
// t^-3 tails stay below the comparison tolerance.
double rc_by_quadrature(double rolloff, double lag_symbols) {
  const double span = 1024.0;
  const std::int64_t steps = std::int64_t(2 * span * 2048);  // h = 2^-11 symbols
  const double h = 2 * span / double(steps);
  double odd = 0.0;
  double even = 0.0;
  for (std::int64_t i = 1; i < steps; ++i) {
    const double t = -span + i * h;
    const double f = srrc_analytic(rolloff, t) * srrc_analytic(rolloff, t + lag_symbols);
    (i % 2 ? odd : even) += f;
  }
  const double f0 = srrc_analytic(rolloff, -span) *
                    srrc_analytic(rolloff, -span + lag_symbols);
  const double fn = srrc_analytic(rolloff, span) *
                    srrc_analytic(rolloff, span + lag_symbols);
  return h / 3.0 * (f0 + fn + 4.0 * odd + 2.0 * even);
}

}  // namespace

TEST_CASE("srrc with zero roll-off is the sinc pulse") {
  const FirFilter fir = design_srrc(0.0, 12, 8);
  const int half = 12 * 8;
  REQUIRE(fir.taps.size() == 2 * half + 1);
  for (int k = 1; k <= 12; ++k) {
    CHECK(std::abs(fir.taps[half + k * 8]) < 1e-12);
    CHECK(std::abs(fir.taps[half - k * 8]) < 1e-12);
  }
}

TEST_CASE("srrc taps: unit energy, symmetric, odd length") {
  const FirFilter fir = design_srrc(0.15, 12, 8);
  CHECK(fir.taps.square().sum() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fir.taps.size() % 2 == 1);
  for (Eigen::Index i = 0; i < fir.taps.size(); ++i) {
    CHECK(fir.taps[i] == fir.taps[fir.taps.size() - 1 - i]);
  }
  CHECK_THROWS_AS(design_srrc(1.2, 12, 8), Error);
}

namespace {

// max |self-convolution - analytic RC| over lags up to max_lag_symbols
double self_conv_deviation(const FirFilter& fir, int max_lag_symbols) {
  const Eigen::Index n = fir.taps.size();
  const Eigen::Index limit =
      std::min<Eigen::Index>(n - 1, max_lag_symbols * fir.taps_per_symbol);
  double worst = 0.0;
  for (Eigen::Index lag = 0; lag <= limit; ++lag) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i + lag < n; ++i) {
      acc += fir.taps[i] * fir.taps[i + lag];
    }
    worst = std::max(
        worst, std::abs(acc - rc_pulse_analytic(0.15, fir.taps_per_symbol, double(lag))));
  }
  return worst;
}

}  // namespace

TEST_CASE("srrc self-convolution reproduces the analytic raised cosine") {
  // Checked over the crossing region the estimator reads (first six symbol
  // periods); beyond ~8 symbols the half-truncated window residue grows to
  // a few 1e-3 regardless of implementation.
  const FirFilter span12 = design_srrc(0.15, 12, 8);
  CHECK(self_conv_deviation(span12, 6) < 1e-3);

  // Convergence with span: the truncation residue shrinks monotonically.
  const FirFilter span4 = design_srrc(0.15, 4, 8);
  CHECK(self_conv_deviation(span12, 24) < self_conv_deviation(span4, 8));
}

TEST_CASE("rc pulse closed form") {
  CHECK(rc_pulse_analytic(0.15, 8.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(rc_pulse_analytic(0.15, 8.0, 8.0)) < 1e-12);
  CHECK(std::abs(rc_pulse_analytic(0.15, 8.0, 16.0)) < 1e-12);

  // Self-convolution quadrature oracle at lag 4 samples = 0.5 symbols.
  const double oracle = rc_by_quadrature(0.15, 0.5);
  CHECK(rc_pulse_analytic(0.15, 8.0, 4.0) == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("rc pulse is continuous through its shoulder singularity") {
  for (double a : {0.3, 0.5, 0.25}) {
    const double t0 = 1.0 / (2.0 * a);  // in symbols, T = 1
    const double at_limit = rc_pulse_analytic(a, 1.0, t0);
    CHECK(rc_pulse_analytic(a, 1.0, t0 + 1e-7) == doctest::Approx(at_limit).epsilon(1e-5));
    CHECK(rc_pulse_analytic(a, 1.0, t0 - 1e-7) == doctest::Approx(at_limit).epsilon(1e-5));
  }
  // alpha = 1/2 puts the shoulder on the first zero crossing
  CHECK(std::abs(rc_pulse_analytic(0.5, 8.0, 8.0)) < 1e-9);
}

TEST_CASE("rc derivative closed form") {
  CHECK(rc_derivative_analytic(0.15, 1.0, 1.0) == doctest::Approx(-0.97913).epsilon(1e-4));
  CHECK(rc_derivative_analytic(0.15, 8.0, 0.0) == 0.0);

  // Central finite differences of the pulse itself, seeded and reproducible.
  std::mt19937_64 rng(7);
  auto uniform = [&rng](double lo, double hi) {
    return lo + (hi - lo) * double(rng() >> 11) * 0x1.0p-53;
  };
  int checked = 0;
  while (checked < 200) {
    const double a = uniform(0.05, 0.95);
    const double t = uniform(0.05, 7.0);
    if (std::abs(4.0 * a * a * t * t - 1.0) < 0.02) continue;  // shoulder
    const double h = 1e-5;
    const double fd =
        (rc_pulse_analytic(a, 1.0, t + h) - rc_pulse_analytic(a, 1.0, t - h)) / (2 * h);
    if (std::abs(fd) < 1e-4) continue;  // relative comparison degenerates
    CHECK(rc_derivative_analytic(a, 1.0, t) == doctest::Approx(fd).epsilon(1e-6));
    ++checked;
  }
}

TEST_CASE("reduced crossing-slope form matches the full derivative") {
  for (double a : {0.1, 0.15, 0.35}) {
    for (int m = 1; m <= 5; ++m) {
      const double full = rc_derivative_analytic(a, 1.0, double(m));
      CHECK(rc_slope_at_crossing(a, m) == doctest::Approx(full).epsilon(1e-6));
    }
  }
  // Sign alternates starting negative at m = 1.
  CHECK(rc_slope_at_crossing(0.15, 1) < 0.0);
  CHECK(rc_slope_at_crossing(0.15, 2) > 0.0);
}

TEST_CASE("crossing slope at the rolloff=1/2 singular crossing") {
  // m = 1/(2a) makes the closed form 0/0; the limit is finite and nonzero.
  const double slope = rc_slope_at_crossing(0.5, 1);
  CHECK(std::isfinite(slope));
  CHECK(slope < 0.0);
  const double h = 1e-6;
  const double fd = (rc_pulse_analytic(0.5, 1.0, 1.0 + h) -
                     rc_pulse_analytic(0.5, 1.0, 1.0 - h)) / (2 * h);
  CHECK(slope == doctest::Approx(fd).epsilon(1e-4));
}

TEST_CASE("srrc analytic value at its own singular points") {
  // t = 1/(4a): 0/0 in the closed form, finite limit.
  for (double a : {0.25, 0.15, 0.5}) {
    const double t0 = 1.0 / (4.0 * a);
    const double v = srrc_analytic(a, t0);
    CHECK(std::isfinite(v));
    CHECK(srrc_analytic(a, t0 + 1e-7) == doctest::Approx(v).epsilon(1e-4));
  }
  CHECK(srrc_analytic(0.15, 0.0) ==
        doctest::Approx(1.0 - 0.15 + 4.0 * 0.15 / 3.14159265358979).epsilon(1e-9));
}
