// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "baudscope/zcd.hpp"

namespace baudscope {

/// Weights A: squared analytic RC slope at each crossing, normalized to sum 1.
Eigen::ArrayXd weights_slope_analytic(double rolloff, int count);

/// Weights C: slope scaled by crossing number, squared and normalized —
/// [cos(pi a m) / (4 a^2 m^2 - 1)]^2.
Eigen::ArrayXd weights_slope_zc(double rolloff, int count);

/// Weights B: squared chord slopes measured at the located crossings,
/// normalized. Throws DegenerateSlope if any slope is ~0.
Eigen::ArrayXd weights_slope_online(const std::vector<ZeroCrossing>& crossings);

/// Weighted mean of per-crossing period estimates, normalized by the sum of
/// the weights.
double combine_estimates(const Eigen::ArrayXd& periods, const Eigen::ArrayXd& weights);

}  // namespace baudscope
