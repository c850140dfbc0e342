// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#pragma once

#include <vector>

namespace baudscope {

/// Normalized mean square error of period estimates: mean of ((z - z~)/z)^2.
double metric_nmse(double true_period, const std::vector<double>& estimates);

/// sqrt(metric_nmse).
double metric_nrmse(double true_period, const std::vector<double>& estimates);

/// Signed relative error in parts per million: 1e6 * (estimate - truth)/truth.
double metric_ppm(double true_period, double estimate);

}  // namespace baudscope
