// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "baudscope/errors.hpp"

namespace baudscope {

/// Uniformly sampled complex baseband signal. The universal carrier between
/// synthesis, channel models and the estimator.
struct IqBuffer {
  Eigen::VectorXcd samples;
  double sample_rate_hz = 0.0;
};

/// Full description of one synthetic transmission.
struct SignalSpec {
  double symbol_rate_hz = 7.0e6;
  int qam_order = 256;
  double rolloff = 0.15;
  int span_symbols = 12;  // one-sided SRRC span in symbols
  std::int64_t n_symbols = 10000;
  double freq_offset_hz = 0.0;
  double esno_db = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 1;
  double sample_rate_hz = 56.0e6;
};

/// One propagation path: linear gain and absolute delay.
struct EchoTap {
  double amplitude = 1.0;
  double delay_s = 0.0;
};

/// Direct path plus attenuated, delayed replicas.
struct EchoProfile {
  std::vector<EchoTap> taps;
};

enum class Interpolator { Linear, SplineNotAKnot };

enum class WeightsMode {
  SingleCrossing,  // all weight on one crossing (m = single_crossing)
  SlopeAnalytic,   // Weights A: squared analytic RC slope, needs roll-off
  SlopeOnline,     // Weights B: squared chord slope measured on the ACF
  SlopeAndZc,      // Weights C: slope and crossing number combined
};

struct EstimatorConfig {
  Interpolator interpolator = Interpolator::SplineNotAKnot;
  int max_zero_crossing = 5;  // p, number of crossings located
  int points_before = 4;      // interpolation points before the bracket's upper lag
  int points_after = 1;       // interpolation points at/after it
  WeightsMode combine_weights = WeightsMode::SingleCrossing;
  int single_crossing = 1;    // crossing used in SingleCrossing mode
  std::optional<double> rolloff_hint;  // required by SlopeAnalytic / SlopeAndZc
};

/// Result of one symbol-rate estimation. Periods and lags are in samples;
/// Hz conversions happen only at the API edge.
struct RateEstimate {
  Eigen::ArrayXd per_zc_period_samples;  // indexed by crossing m = 1..p
  Eigen::ArrayXd weights;                // non-negative, sums to 1
  double combined_period_samples = 0.0;
  double symbol_rate_hz = 0.0;
  double freq_offset_hz = 0.0;
};

/// Throws unless every SignalSpec invariant holds (oversampling >= 8,
/// roll-off in [0,1], supported QAM order, positive rates and counts).
void validate_spec(const SignalSpec& spec);

/// Throws unless the estimator configuration is self-consistent.
void validate_config(const EstimatorConfig& cfg);

/// Throws unless the profile starts with a unit-gain zero-delay direct path
/// and delays are non-decreasing.
void validate_profile(const EchoProfile& profile);

/// NorDig DVB-C echo channel presets 0..9: unit direct path plus one echo
/// with amplitude 10^(-Att/20) at the tabulated delay.
EchoProfile nordig_echo_preset(int path_number);

inline double oversampling_ratio(const SignalSpec& spec) {
  return spec.sample_rate_hz / spec.symbol_rate_hz;
}

}  // namespace baudscope
