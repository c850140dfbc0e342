// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#pragma once

#include <Eigen/Dense>

#include "baudscope/types.hpp"

namespace baudscope {

/// Linear-phase FIR pulse: odd tap count, symmetric about the center tap.
struct FirFilter {
  Eigen::ArrayXd taps;
  int taps_per_symbol = 0;
};

/// Continuous-time unit-energy square-root raised cosine evaluated at
/// t_symbols symbol periods from the peak. Removable singularities
/// (t = 0 and |t| = 1/(4*rolloff)) are evaluated by their analytic limits.
double srrc_analytic(double rolloff, double t_symbols);

/// Samples srrc_analytic on a regular grid: 2*span*sps + 1 taps, normalized
/// to unit energy (sum of squared taps = 1).
FirFilter design_srrc(double rolloff, int span_symbols, int samples_per_symbol);

/// Raised-cosine pulse (peak 1 at t = 0) with period T = period_samples,
/// evaluated at t_samples. Zeros at integer multiples of T.
double rc_pulse_analytic(double rolloff, double period_samples, double t_samples);

/// Derivative of rc_pulse_analytic with respect to t, same units. Removable
/// singularities (t = 0, |t| = T/(2*rolloff), including rolloff = 1/2 at
/// t = T) are evaluated by a symmetric finite difference with step 1e-6*T.
double rc_derivative_analytic(double rolloff, double period_samples, double t_samples);

/// Slope of the raised cosine at its m-th zero crossing t = m*T, for T = 1.
/// Closed form cos(pi*rolloff*m) / (m*(4*rolloff^2*m^2 - 1)) up to sign,
/// falling back to the numerical limit when m = 1/(2*rolloff).
double rc_slope_at_crossing(double rolloff, int crossing);

}  // namespace baudscope
