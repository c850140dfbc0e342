// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#include "baudscope/estimator.hpp"

#include "baudscope/acf.hpp"
#include "baudscope/combine.hpp"
#include "baudscope/foc.hpp"
#include "baudscope/zcd.hpp"

namespace baudscope {

RateEstimate estimate_symbol_rate(const IqBuffer& buf, const EstimatorConfig& cfg,
                                  double min_rate_hz) {
  validate_config(cfg);
  const int max_lag = max_lag_for(min_rate_hz, buf.sample_rate_hz, cfg.max_zero_crossing);
  const AcfEstimate acf = estimate_acf(buf, max_lag);
  const double freq_offset = estimate_freq_offset(acf);
  const AcfEstimate compensated = compensate_acf(acf, freq_offset);
  const auto crossings = locate_crossings(compensated, cfg);

  const int p = cfg.max_zero_crossing;
  Eigen::ArrayXd periods(p);
  for (int i = 0; i < p; ++i) {
    periods[i] = period_from_crossing(crossings[i]);
  }

  Eigen::ArrayXd weights;
  switch (cfg.combine_weights) {
    case WeightsMode::SingleCrossing:
      weights = Eigen::ArrayXd::Zero(p);
      weights[cfg.single_crossing - 1] = 1.0;
      break;
    case WeightsMode::SlopeAnalytic:
      weights = weights_slope_analytic(*cfg.rolloff_hint, p);
      break;
    case WeightsMode::SlopeOnline:
      weights = weights_slope_online(crossings);
      break;
    case WeightsMode::SlopeAndZc:
      weights = weights_slope_zc(*cfg.rolloff_hint, p);
      break;
  }

  RateEstimate estimate;
  estimate.per_zc_period_samples = periods;
  estimate.weights = weights;
  estimate.combined_period_samples = combine_estimates(periods, weights);
  estimate.symbol_rate_hz = buf.sample_rate_hz / estimate.combined_period_samples;
  estimate.freq_offset_hz = freq_offset;
  return estimate;
}

}  // namespace baudscope
