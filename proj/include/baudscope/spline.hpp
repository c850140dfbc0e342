// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#pragma once

#include <Eigen/Dense>

namespace baudscope {

/// Cubic interpolating spline with not-a-knot end conditions: the third
/// derivative is continuous across the second and penultimate knots, so the
/// first/last two segments share one cubic each. Needs at least 4 knots with
/// strictly increasing abscissae.
class NotAKnotSpline {
 public:
  NotAKnotSpline(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y);

  /// Evaluates the spline (extrapolates with the boundary cubics).
  double operator()(double x) const;

 private:
  Eigen::ArrayXd x_;
  Eigen::ArrayXd y_;
  Eigen::ArrayXd m_;  // second derivatives at the knots
};

}  // namespace baudscope
