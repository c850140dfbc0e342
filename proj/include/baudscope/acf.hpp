// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "baudscope/types.hpp"

namespace baudscope {

/// Time-averaged autocorrelation over integer lags 0..max_lag, lag spacing
/// one sample period.
struct AcfEstimate {
  Eigen::VectorXcd values;
  double lag_spacing_s = 0.0;
  std::int64_t n_samples_used = 0;
};

/// values[tau] = 1/(N-tau) * sum_n y[n] * conj(y[n+tau]). Unbiased per-lag
/// normalization; accumulation in double. Parallel across lags with a fixed
/// per-lag summation order, so the result is independent of scheduling.
AcfEstimate estimate_acf(const IqBuffer& buf, int max_lag);

/// Lags needed to reach the p-th crossing of the slowest expected rate:
/// ceil(p * fs / min_symbol_rate) plus a guard of 4 samples.
int max_lag_for(double min_symbol_rate_hz, double sample_rate_hz, int max_zero_crossing);

/// Debug/plot dump: CSV with columns lag, re, im.
void write_acf_csv(const AcfEstimate& acf, std::ostream& out);
void write_acf_csv(const AcfEstimate& acf, const std::string& path);

}  // namespace baudscope
