// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "baudscope/acf.hpp"
#include "baudscope/types.hpp"

namespace baudscope {

/// One located sign change of the real compensated ACF.
struct ZeroCrossing {
  int index_m = 0;                 // crossing number, 1-based
  double location_samples = 0.0;   // fractional lag of the crossing
  std::pair<int, int> bracket;     // integer lags with opposite signs around it
  double slope = 0.0;              // chord slope across the bracket, per sample
};

/// Sign-change bracket found while walking lags upward from the peak. When a
/// sample is exactly zero at the boundary, that lag is the crossing and the
/// bracket spans its opposite-signed neighbours.
struct SignChange {
  int lower = 0;
  int upper = 0;
  bool exact = false;
  int exact_lag = -1;
};

/// First `count` sign changes of the sequence, scanning lags upward from the
/// positive lag-0 peak.
std::vector<SignChange> find_sign_changes(const Eigen::ArrayXd& acf_real, int count);

/// Root of the chord through (x0,y0)-(x1,y1); values must straddle zero.
double interpolate_linear(double x0, double y0, double x1, double y1);

/// Root of the not-a-knot cubic spline through the points, restricted to
/// [bracket_lo, bracket_hi], found to 1e-12 by bisection on the bracketing
/// segment. Throws NoRootInBracket when the spline does not change sign.
double interpolate_spline(const Eigen::ArrayXd& xs, const Eigen::ArrayXd& ys,
                          double bracket_lo, double bracket_hi);

/// Locates the first p crossings of the real part of a compensated ACF using
/// the configured interpolator and point selection (points_before samples
/// before the bracket's upper lag, points_after at/after it).
std::vector<ZeroCrossing> locate_crossings(const AcfEstimate& acf,
                                           const EstimatorConfig& cfg);

/// Per-crossing symbol period estimate: location / crossing number.
double period_from_crossing(const ZeroCrossing& zc);

}  // namespace baudscope
