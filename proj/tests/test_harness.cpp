// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "baudscope/harness.hpp"
#include "baudscope/io.hpp"
#include "baudscope/metrics.hpp"
#include "baudscope/synth.hpp"
#include "test_util.hpp"

using namespace baudscope;
using testutil::make_spec;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("nmse metric") {
  CHECK(metric_nmse(8.0, {8.0, 8.0, 8.0}) == 0.0);
  CHECK(metric_nmse(8.0, {8.08}) == doctest::Approx(1e-4).epsilon(1e-10));
  CHECK(metric_nmse(8.0, {8.08, 7.92}) == doctest::Approx(1e-4).epsilon(1e-10));
  CHECK(metric_nrmse(8.0, {8.08}) == doctest::Approx(1e-2).epsilon(1e-10));
  CHECK(metric_ppm(8.0, 8.08) == doctest::Approx(1e4).epsilon(1e-10));
  CHECK(metric_ppm(8.0, 7.92) == doctest::Approx(-1e4).epsilon(1e-10));
  CHECK_THROWS_AS(metric_nmse(8.0, {}), Error);
}

TEST_CASE("iq files round-trip through the float32 interleaved format") {
  SignalSpec spec = make_spec(7e6, 500);
  spec.esno_db = 15.0;
  const IqBuffer buf = synth_received(spec, -1, false);
  const std::string path = "/tmp/baudscope_test_roundtrip.iq";
  write_iq(buf, path);
  const IqBuffer back = ingest_iq(path, 56e6);
  REQUIRE(back.samples.size() == buf.samples.size());
  for (Eigen::Index i = 0; i < buf.samples.size(); ++i) {
    CHECK(float(buf.samples[i].real()) == float(back.samples[i].real()));
    CHECK(float(buf.samples[i].imag()) == float(back.samples[i].imag()));
  }
  CHECK(back.sample_rate_hz == 56e6);
  std::remove(path.c_str());
}

TEST_CASE("iq ingestion rejects empty and ragged files") {
  const std::string empty_path = "/tmp/baudscope_test_empty.iq";
  std::ofstream(empty_path, std::ios::binary).close();
  CHECK_THROWS_AS(ingest_iq(empty_path, 56e6), Error);
  try {
    ingest_iq(empty_path, 56e6);
  } catch (const Error& e) {
    CHECK(e.code() == Error::Code::EmptyFile);
  }
  std::remove(empty_path.c_str());

  const std::string ragged_path = "/tmp/baudscope_test_ragged.iq";
  {
    std::ofstream out(ragged_path, std::ios::binary);
    const char bytes[12] = {0};
    out.write(bytes, 12);
  }
  CHECK_THROWS_AS(ingest_iq(ragged_path, 56e6), Error);
  try {
    ingest_iq(ragged_path, 56e6);
  } catch (const Error& e) {
    CHECK(e.code() == Error::Code::MalformedFile);
  }
  std::remove(ragged_path.c_str());
}

TEST_CASE("sweeps are byte-identical across runs") {
  SweepConfig cfg = find_preset("zc-sweep-limit").config;
  cfg.out_path = "/tmp/baudscope_test_sweep_a.csv";
  run_sweep(cfg);
  cfg.out_path = "/tmp/baudscope_test_sweep_b.csv";
  run_sweep(cfg);
  CHECK(slurp("/tmp/baudscope_test_sweep_a.csv") ==
        slurp("/tmp/baudscope_test_sweep_b.csv"));
  std::remove("/tmp/baudscope_test_sweep_a.csv");
  std::remove("/tmp/baudscope_test_sweep_b.csv");

  // and with Monte Carlo trials in play
  SweepConfig mc = find_preset("corr-length-awgn").config;
  mc.grid = {50000};
  mc.trials = 3;
  const auto rows_a = run_sweep(mc);
  const auto rows_b = run_sweep(mc);
  REQUIRE(rows_a.size() == rows_b.size());
  for (std::size_t i = 0; i < rows_a.size(); ++i) {
    CHECK(to_csv(rows_a[i]) == to_csv(rows_b[i]));
  }
}

TEST_CASE("experiment presets cover every recipe") {
  const auto& presets = experiment_presets();
  REQUIRE(!presets.empty());
  std::set<std::string> names;
  std::set<std::string> kinds;
  for (const auto& preset : presets) {
    CHECK(names.insert(preset.name).second);  // unique names
    CHECK(!preset.description.empty());
    CHECK(!preset.config.grid.empty());
    kinds.insert(to_string(preset.config.experiment));
  }
  // every experiment recipe appears in at least one preset
  for (const char* kind :
       {"corr-length", "filter-span", "roll-off", "rate-sweep", "esno-sweep",
        "freq-offset", "echo-channels", "zc-sweep", "truncation-only",
        "interpolation-only", "combine-compare"}) {
    CHECK(kinds.count(kind) == 1);
  }
  CHECK_THROWS_AS(find_preset("no-such-preset"), Error);
}

TEST_CASE("config files parse into sweep configs") {
  std::istringstream in(
      "# comment line\n"
      "experiment = roll-off\n"
      "grid = 0.05, 0.15 0.25\n"
      "trials = 4\n"
      "out_path = /tmp/out.csv\n"
      "echo_preset = 3\n"
      "single_pulse = true\n"
      "corr_samples = 5e5\n"
      "symbol_rate_hz = 5e6\n"
      "qam_order = 64\n"
      "rolloff = 0.25\n"
      "span_symbols = 8\n"
      "n_symbols = 1e4\n"
      "freq_offset_hz = 150e3\n"
      "esno_db = inf\n"
      "seed = 99\n"
      "sample_rate_hz = 56e6\n"
      "interpolator = linear\n"
      "max_zero_crossing = 5\n"
      "points_before = 3\n"
      "points_after = 2\n"
      "combine_weights = slope-zc\n"
      "single_crossing = 2\n"
      "rolloff_hint = 0.25\n");
  const SweepConfig cfg = parse_sweep_config(in);
  CHECK(cfg.experiment == Experiment::RollOff);
  REQUIRE(cfg.grid.size() == 3);
  CHECK(cfg.grid[1] == 0.15);
  CHECK(cfg.trials == 4);
  CHECK(cfg.out_path == "/tmp/out.csv");
  CHECK(cfg.echo_preset == 3);
  CHECK(cfg.single_pulse);
  CHECK(cfg.corr_samples == 500000);
  CHECK(cfg.base.symbol_rate_hz == 5e6);
  CHECK(cfg.base.qam_order == 64);
  CHECK(cfg.base.span_symbols == 8);
  CHECK(cfg.base.n_symbols == 10000);
  CHECK(cfg.base.freq_offset_hz == 150e3);
  CHECK(std::isinf(cfg.base.esno_db));
  CHECK(cfg.base.seed == 99);
  CHECK(cfg.estimator.interpolator == Interpolator::Linear);
  CHECK(cfg.estimator.points_before == 3);
  CHECK(cfg.estimator.points_after == 2);
  CHECK(cfg.estimator.combine_weights == WeightsMode::SlopeAndZc);
  CHECK(cfg.estimator.single_crossing == 2);
  CHECK(cfg.estimator.rolloff_hint == 0.25);

  std::istringstream bad("no_such_key = 1\n");
  CHECK_THROWS_AS(parse_sweep_config(bad), Error);
  std::istringstream ragged("experiment roll-off\n");
  CHECK_THROWS_AS(parse_sweep_config(ragged), Error);
}

TEST_CASE("failed trials surface as ERR sentinel rows") {
  SweepConfig cfg;
  cfg.experiment = Experiment::CorrLength;
  cfg.grid = {10};  // far too short for any lag horizon
  cfg.trials = 2;
  cfg.base = make_spec(7e6, 100);
  const auto rows = run_sweep(cfg);
  REQUIRE(!rows.empty());
  for (const auto& row : rows) {
    CHECK(row.errors == 2);
    CHECK(to_csv(row).find("ERR") != std::string::npos);
  }
}

TEST_CASE("zero-crossing sweep through the worst echo improves with m") {
  SweepConfig cfg = find_preset("zc-sweep-limit-echo3").config;
  const auto rows = run_sweep(cfg);
  std::vector<double> spline_ppm;
  for (const auto& row : rows) {
    if (row.interpolator == "spline") spline_ppm.push_back(std::abs(row.mean_ppm));
  }
  REQUIRE(spline_ppm.size() == 5);
  for (int m = 1; m < 5; ++m) {
    CHECK(spline_ppm[m] < spline_ppm[m - 1]);
  }
}

TEST_CASE("averaging law shows up in the correlation-length sweep") {
  SweepConfig cfg = find_preset("corr-length-awgn").config;
  cfg.grid = {5e4, 5e5};
  cfg.trials = 4;
  const auto rows = run_sweep(cfg);
  double short_nmse = 0.0;
  double long_nmse = 0.0;
  for (const auto& row : rows) {
    if (row.interpolator != "spline") continue;
    if (row.grid_value == 5e4) short_nmse = row.nmse;
    if (row.grid_value == 5e5) long_nmse = row.nmse;
  }
  CHECK(short_nmse > long_nmse);
}

TEST_CASE("frequency-offset sweep emits compensated and raw rows") {
  SweepConfig cfg = find_preset("freq-offset").config;
  cfg.grid = {1e6};
  cfg.trials = 2;
  cfg.corr_samples = 100000;
  const auto rows = run_sweep(cfg);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].experiment == "freq-offset/comp");
  CHECK(rows[1].experiment == "freq-offset/raw");
  CHECK(rows[0].nrmse <= rows[1].nrmse);
}

TEST_CASE("synthesized buffers reach the requested correlation length") {
  SignalSpec spec = make_spec(6.5882e6, 1);
  spec.n_symbols = symbols_for_samples(spec, 250000);
  const IqBuffer buf = synth_received(spec, -1, false);
  CHECK(buf.samples.size() >= 250000);
}
