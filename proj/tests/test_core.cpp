// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "baudscope/types.hpp"

using namespace baudscope;

namespace {

Error::Code code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Error::Code::BadConfig;
}

}  // namespace

TEST_CASE("validate_spec accepts the DVB-C operating points") {
  SignalSpec spec;
  spec.symbol_rate_hz = 7e6;
  spec.sample_rate_hz = 56e6;
  spec.rolloff = 0.15;
  spec.qam_order = 256;
  CHECK_NOTHROW(validate_spec(spec));  // oversampling exactly 8

  spec.symbol_rate_hz = 1e6;
  CHECK_NOTHROW(validate_spec(spec));
  CHECK(oversampling_ratio(spec) == doctest::Approx(56.0));
}

TEST_CASE("validate_spec rejects out-of-contract parameters") {
  SignalSpec spec;
  spec.sample_rate_hz = 56e6;

  spec.symbol_rate_hz = 8e6;  // 56/8 = 7 < 8
  CHECK(code_of([&] { validate_spec(spec); }) == Error::Code::OversamplingTooLow);

  spec.symbol_rate_hz = 7e6;
  spec.rolloff = 1.5;
  CHECK(code_of([&] { validate_spec(spec); }) == Error::Code::BadRolloff);
  spec.rolloff = -0.1;
  CHECK(code_of([&] { validate_spec(spec); }) == Error::Code::BadRolloff);

  spec.rolloff = 0.15;
  spec.qam_order = 32;
  CHECK(code_of([&] { validate_spec(spec); }) == Error::Code::BadOrder);

  spec.qam_order = 256;
  spec.n_symbols = 0;
  CHECK(code_of([&] { validate_spec(spec); }) == Error::Code::BadConfig);
}

TEST_CASE("NorDig echo presets: direct path plus tabulated echo") {
  const double att_db[10] = {12.0, 12.6, 13.7, 19.4, 25.0, 30.7, 36.3, 39.7, 42.0, 42.0};
  const double delay_ns[10] = {0, 40, 50, 100, 150, 200, 250, 280, 300, 350};
  for (int k = 0; k < 10; ++k) {
    const EchoProfile profile = nordig_echo_preset(k);
    REQUIRE(profile.taps.size() == 2);
    CHECK(profile.taps[0].amplitude == 1.0);
    CHECK(profile.taps[0].delay_s == 0.0);
    CHECK(profile.taps[1].amplitude ==
          doctest::Approx(std::pow(10.0, -att_db[k] / 20.0)).epsilon(1e-12));
    CHECK(profile.taps[1].delay_s == doctest::Approx(delay_ns[k] * 1e-9).epsilon(1e-12));
    CHECK_NOTHROW(validate_profile(profile));
  }
  // Worst-case path, spelled out.
  CHECK(nordig_echo_preset(3).taps[1].amplitude == doctest::Approx(0.10715).epsilon(1e-4));
  CHECK(nordig_echo_preset(3).taps[1].delay_s * 56e6 == doctest::Approx(5.6));

  CHECK(code_of([] { nordig_echo_preset(10); }) == Error::Code::BadConfig);
  CHECK(code_of([] { nordig_echo_preset(-1); }) == Error::Code::BadConfig);
}

TEST_CASE("echo profile validation") {
  EchoProfile profile;
  CHECK(code_of([&] { validate_profile(profile); }) == Error::Code::BadConfig);

  profile.taps = {{0.5, 0.0}};
  CHECK(code_of([&] { validate_profile(profile); }) == Error::Code::BadConfig);

  profile.taps = {{1.0, 0.0}, {0.3, 2e-7}, {0.2, 1e-7}};  // delays go backwards
  CHECK(code_of([&] { validate_profile(profile); }) == Error::Code::BadConfig);

  profile.taps = {{1.0, 0.0}, {0.3, 0.0}};  // zero-delay echo (preset 0 shape)
  CHECK_NOTHROW(validate_profile(profile));
}

TEST_CASE("estimator config validation") {
  EstimatorConfig cfg;
  CHECK_NOTHROW(validate_config(cfg));

  cfg.points_before = 2;
  cfg.points_after = 1;
  CHECK(code_of([&] { validate_config(cfg); }) == Error::Code::BadConfig);
  cfg.interpolator = Interpolator::Linear;
  CHECK_NOTHROW(validate_config(cfg));  // linear needs only the bracket

  cfg = EstimatorConfig{};
  cfg.points_before = 3;
  cfg.points_after = 2;  // the alternative selection stays supported
  CHECK_NOTHROW(validate_config(cfg));

  cfg = EstimatorConfig{};
  cfg.single_crossing = 6;
  CHECK(code_of([&] { validate_config(cfg); }) == Error::Code::BadConfig);

  cfg = EstimatorConfig{};
  cfg.combine_weights = WeightsMode::SlopeAnalytic;
  CHECK(code_of([&] { validate_config(cfg); }) == Error::Code::BadConfig);
  cfg.rolloff_hint = 1.5;
  CHECK(code_of([&] { validate_config(cfg); }) == Error::Code::BadRolloff);
  cfg.rolloff_hint = 0.15;
  CHECK_NOTHROW(validate_config(cfg));
}
