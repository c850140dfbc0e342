// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#include "baudscope/metrics.hpp"

#include <cmath>

#include "baudscope/errors.hpp"

namespace baudscope {

double metric_nmse(double true_period, const std::vector<double>& estimates) {
  if (!(true_period > 0.0)) {
    throw Error(Error::Code::BadConfig, "true period must be positive");
  }
  if (estimates.empty()) {
    throw Error(Error::Code::EmptyInput, "no estimates");
  }
  double acc = 0.0;
  for (double estimate : estimates) {
    const double rel = (true_period - estimate) / true_period;
    acc += rel * rel;
  }
  return acc / double(estimates.size());
}

double metric_nrmse(double true_period, const std::vector<double>& estimates) {
  return std::sqrt(metric_nmse(true_period, estimates));
}

double metric_ppm(double true_period, double estimate) {
  return 1e6 * (estimate - true_period) / true_period;
}

}  // namespace baudscope
