// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#include "baudscope/types.hpp"

#include <cmath>
#include <string>

namespace baudscope {

const char* to_string(Error::Code code) {
  switch (code) {
    case Error::Code::OversamplingTooLow: return "OversamplingTooLow";
    case Error::Code::BadRolloff: return "BadRolloff";
    case Error::Code::BadOrder: return "BadOrder";
    case Error::Code::BadConfig: return "BadConfig";
    case Error::Code::ResamplingOverflow: return "ResamplingOverflow";
    case Error::Code::BufferTooShort: return "BufferTooShort";
    case Error::Code::NotEnoughCrossings: return "NotEnoughCrossings";
    case Error::Code::NoRootInBracket: return "NoRootInBracket";
    case Error::Code::DegenerateAcf: return "DegenerateAcf";
    case Error::Code::DegenerateSlope: return "DegenerateSlope";
    case Error::Code::EmptyInput: return "EmptyInput";
    case Error::Code::MalformedFile: return "MalformedFile";
    case Error::Code::EmptyFile: return "EmptyFile";
  }
  return "Unknown";
}

void validate_spec(const SignalSpec& spec) {
  if (!(spec.sample_rate_hz > 0.0) || !(spec.symbol_rate_hz > 0.0)) {
    throw Error(Error::Code::BadConfig, "sample and symbol rates must be positive");
  }
  if (!(spec.rolloff >= 0.0 && spec.rolloff <= 1.0)) {
    throw Error(Error::Code::BadRolloff,
                "roll-off must lie in [0,1], got " + std::to_string(spec.rolloff));
  }
  if (spec.qam_order != 4 && spec.qam_order != 16 && spec.qam_order != 64 &&
      spec.qam_order != 256) {
    throw Error(Error::Code::BadOrder,
                "unsupported QAM order " + std::to_string(spec.qam_order));
  }
  if (oversampling_ratio(spec) < 8.0) {
    throw Error(Error::Code::OversamplingTooLow,
                "oversampling ratio " + std::to_string(oversampling_ratio(spec)) +
                    " is below the minimum of 8");
  }
  if (spec.span_symbols < 1) {
    throw Error(Error::Code::BadConfig, "span_symbols must be >= 1");
  }
  if (spec.n_symbols < 1) {
    throw Error(Error::Code::BadConfig, "n_symbols must be >= 1");
  }
}

void validate_config(const EstimatorConfig& cfg) {
  if (cfg.max_zero_crossing < 1) {
    throw Error(Error::Code::BadConfig, "max_zero_crossing must be >= 1");
  }
  if (cfg.points_before < 1 || cfg.points_after < 1) {
    throw Error(Error::Code::BadConfig, "need at least one point on each side");
  }
  if (cfg.interpolator == Interpolator::SplineNotAKnot &&
      cfg.points_before + cfg.points_after < 4) {
    throw Error(Error::Code::BadConfig, "spline interpolation needs >= 4 points");
  }
  if (cfg.combine_weights == WeightsMode::SingleCrossing &&
      (cfg.single_crossing < 1 || cfg.single_crossing > cfg.max_zero_crossing)) {
    throw Error(Error::Code::BadConfig, "single_crossing outside [1, max_zero_crossing]");
  }
  if (cfg.combine_weights == WeightsMode::SlopeAnalytic ||
      cfg.combine_weights == WeightsMode::SlopeAndZc) {
    if (!cfg.rolloff_hint) {
      throw Error(Error::Code::BadConfig, "slope-based weights require rolloff_hint");
    }
    if (!(*cfg.rolloff_hint > 0.0 && *cfg.rolloff_hint <= 1.0)) {
      throw Error(Error::Code::BadRolloff, "rolloff_hint must lie in (0,1]");
    }
  }
}

void validate_profile(const EchoProfile& profile) {
  if (profile.taps.empty()) {
    throw Error(Error::Code::BadConfig, "echo profile needs at least the direct path");
  }
  if (profile.taps.front().amplitude != 1.0 || profile.taps.front().delay_s != 0.0) {
    throw Error(Error::Code::BadConfig, "first tap must be the unit-gain direct path");
  }
  for (std::size_t i = 1; i < profile.taps.size(); ++i) {
    if (profile.taps[i].delay_s < profile.taps[i - 1].delay_s) {
      throw Error(Error::Code::BadConfig, "echo delays must be non-decreasing");
    }
    if (!(profile.taps[i].delay_s >= 0.0)) {
      throw Error(Error::Code::BadConfig, "echo delays must be non-negative");
    }
  }
}

namespace {

// NorDig DVB-C echo paths: attenuation [dB], delay [ns].
constexpr double kNordigAttDb[10] = {12.0, 12.6, 13.7, 19.4, 25.0,
                                     30.7, 36.3, 39.7, 42.0, 42.0};
constexpr double kNordigDelayNs[10] = {0.0,   40.0,  50.0,  100.0, 150.0,
                                       200.0, 250.0, 280.0, 300.0, 350.0};

}  // namespace

EchoProfile nordig_echo_preset(int path_number) {
  if (path_number < 0 || path_number > 9) {
    throw Error(Error::Code::BadConfig,
                "NorDig echo preset must be 0..9, got " + std::to_string(path_number));
  }
  EchoProfile profile;
  profile.taps.push_back({1.0, 0.0});
  profile.taps.push_back({std::pow(10.0, -kNordigAttDb[path_number] / 20.0),
                          kNordigDelayNs[path_number] * 1e-9});
  return profile;
}

}  // namespace baudscope
