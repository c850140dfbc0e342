// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#include "baudscope/combine.hpp"

#include <cmath>
#include <numbers>

#include "baudscope/pulse.hpp"

namespace baudscope {

namespace {

void check_rolloff(double rolloff) {
  if (!(rolloff > 0.0 && rolloff <= 1.0)) {
    throw Error(Error::Code::BadRolloff, "roll-off must lie in (0,1] for slope weights");
  }
}

Eigen::ArrayXd normalized(Eigen::ArrayXd w) {
  return w / w.sum();
}

}  // namespace

Eigen::ArrayXd weights_slope_analytic(double rolloff, int count) {
  check_rolloff(rolloff);
  if (count < 1) {
    throw Error(Error::Code::BadConfig, "need at least one crossing");
  }
  Eigen::ArrayXd w(count);
  for (int m = 1; m <= count; ++m) {
    const double slope = rc_slope_at_crossing(rolloff, m);
    w[m - 1] = slope * slope;
  }
  return normalized(std::move(w));
}

Eigen::ArrayXd weights_slope_zc(double rolloff, int count) {
  check_rolloff(rolloff);
  if (count < 1) {
    throw Error(Error::Code::BadConfig, "need at least one crossing");
  }
  Eigen::ArrayXd w(count);
  for (int m = 1; m <= count; ++m) {
    const double scaled = double(m) * rc_slope_at_crossing(rolloff, m);
    w[m - 1] = scaled * scaled;
  }
  return normalized(std::move(w));
}

Eigen::ArrayXd weights_slope_online(const std::vector<ZeroCrossing>& crossings) {
  if (crossings.empty()) {
    throw Error(Error::Code::EmptyInput, "no crossings to weight");
  }
  Eigen::ArrayXd w(Eigen::Index(crossings.size()));
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    const double slope = crossings[i].slope;
    if (!(std::abs(slope) >= 1e-12)) {
      throw Error(Error::Code::DegenerateSlope,
                  "crossing " + std::to_string(i + 1) + " has a vanishing slope");
    }
    w[Eigen::Index(i)] = slope * slope;
  }
  return normalized(std::move(w));
}

double combine_estimates(const Eigen::ArrayXd& periods, const Eigen::ArrayXd& weights) {
  if (periods.size() == 0 || periods.size() != weights.size()) {
    throw Error(Error::Code::EmptyInput, "periods and weights must be non-empty and match");
  }
  if ((weights < 0.0).any()) {
    throw Error(Error::Code::EmptyInput, "weights must be non-negative");
  }
  const double total = weights.sum();
  if (!(total > 0.0)) {
    throw Error(Error::Code::EmptyInput, "weights must not all be zero");
  }
  return (periods * weights).sum() / total;
}

}  // namespace baudscope
