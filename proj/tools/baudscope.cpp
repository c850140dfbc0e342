// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "baudscope/acf.hpp"
#include "baudscope/combine.hpp"
#include "baudscope/estimator.hpp"
#include "baudscope/foc.hpp"
#include "baudscope/harness.hpp"
#include "baudscope/io.hpp"
#include "baudscope/synth.hpp"
#include "baudscope/zcd.hpp"

namespace {

using namespace baudscope;

Interpolator parse_interp(const std::string& name) {
  if (name == "linear") return Interpolator::Linear;
  if (name == "spline") return Interpolator::SplineNotAKnot;
  throw Error(Error::Code::BadConfig, "interpolator must be linear or spline");
}

WeightsMode parse_weights(const std::string& name) {
  if (name == "single") return WeightsMode::SingleCrossing;
  if (name == "slope-analytic") return WeightsMode::SlopeAnalytic;
  if (name == "slope-online") return WeightsMode::SlopeOnline;
  if (name == "slope-zc") return WeightsMode::SlopeAndZc;
  throw Error(Error::Code::BadConfig, "unknown weights mode '" + name + "'");
}

int run_synth(const SignalSpec& spec, int echo_preset, bool pulse_only,
              const std::string& out) {
  const IqBuffer buf = synth_received(spec, echo_preset, pulse_only);
  write_iq(buf, out);
  std::printf("wrote %lld samples at %.10g Hz to %s\n",
              (long long)buf.samples.size(), buf.sample_rate_hz, out.c_str());
  return 0;
}

int run_estimate(const std::string& in, double fs, const EstimatorConfig& cfg,
                 double min_rate, const std::string& dump_acf) {
  const IqBuffer buf = ingest_iq(in, fs);
  if (!dump_acf.empty()) {
    const int max_lag = max_lag_for(min_rate, fs, cfg.max_zero_crossing);
    write_acf_csv(estimate_acf(buf, max_lag), dump_acf);
  }
  const RateEstimate est = estimate_symbol_rate(buf, cfg, min_rate);

  std::printf("symbol_rate_hz=%.10g\n", est.symbol_rate_hz);
  std::printf("combined_period_samples=%.12g\n", est.combined_period_samples);
  std::printf("freq_offset_hz=%.10g\n", est.freq_offset_hz);
  for (Eigen::Index i = 0; i < est.per_zc_period_samples.size(); ++i) {
    std::printf("zc%lld_period_samples=%.12g\n", (long long)(i + 1),
                est.per_zc_period_samples[i]);
  }
  for (Eigen::Index i = 0; i < est.weights.size(); ++i) {
    std::printf("zc%lld_weight=%.12g\n", (long long)(i + 1), est.weights[i]);
  }

  std::string header = "symbol_rate_hz,combined_period_samples,freq_offset_hz";
  char row[160];
  std::snprintf(row, sizeof(row), "%.10g,%.12g,%.10g", est.symbol_rate_hz,
                est.combined_period_samples, est.freq_offset_hz);
  std::string values = row;
  for (Eigen::Index i = 0; i < est.per_zc_period_samples.size(); ++i) {
    header += ",zc" + std::to_string(i + 1) + "_period";
    std::snprintf(row, sizeof(row), ",%.12g", est.per_zc_period_samples[i]);
    values += row;
  }
  std::printf("%s\n%s\n", header.c_str(), values.c_str());
  return 0;
}

int run_weights(const std::string& mode, double rolloff, int count, double rate,
                double fs) {
  Eigen::ArrayXd w;
  if (mode == "a" || mode == "slope-analytic") {
    w = weights_slope_analytic(rolloff, count);
  } else if (mode == "c" || mode == "slope-zc") {
    w = weights_slope_zc(rolloff, count);
  } else if (mode == "b" || mode == "slope-online") {
    SignalSpec spec;
    spec.symbol_rate_hz = rate;
    spec.sample_rate_hz = fs;
    spec.rolloff = rolloff;
    const IqBuffer buf = single_pulse(spec);
    const int max_lag = max_lag_for(rate, fs, count);
    const AcfEstimate acf = estimate_acf(buf, max_lag);
    EstimatorConfig cfg;
    cfg.max_zero_crossing = count;
    cfg.interpolator = Interpolator::Linear;
    w = weights_slope_online(locate_crossings(acf, cfg));
  } else {
    throw Error(Error::Code::BadConfig, "weights mode must be a, b or c");
  }
  std::printf("zc,weight\n");
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    std::printf("%lld,%.6f\n", (long long)(i + 1), w[i]);
  }
  return 0;
}

int run_sweep_cmd(const std::string& config_path, const std::string& preset_name,
                  const std::vector<std::string>& overrides, bool print_rows) {
  SweepConfig cfg;
  if (!preset_name.empty()) {
    cfg = find_preset(preset_name).config;
  } else if (!config_path.empty()) {
    cfg = load_sweep_config(config_path);
  } else {
    throw Error(Error::Code::BadConfig, "sweep needs a config file or --preset");
  }
  for (const std::string& kv : overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw Error(Error::Code::BadConfig, "--set expects key=value, got '" + kv + "'");
    }
    apply_config_key(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  const auto rows = run_sweep(cfg);
  if (print_rows || cfg.out_path.empty()) {
    std::printf("%s\n", kSweepCsvHeader);
    for (const SweepRow& row : rows) {
      std::printf("%s\n", to_csv(row).c_str());
    }
  }
  if (!cfg.out_path.empty()) {
    std::printf("wrote %zu rows to %s\n", rows.size(), cfg.out_path.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blind symbol-rate estimation from the time-averaged autocorrelation"};
  app.require_subcommand(1);

  // synth
  SignalSpec spec;
  int echo_preset = -1;
  bool pulse_only = false;
  std::string out_file = "signal.iq";
  std::string esno_text = "inf";
  double symbols_opt = double(spec.n_symbols);
  auto* synth_cmd = app.add_subcommand("synth", "synthesize a test signal and write raw IQ");
  synth_cmd->add_option("--rate", spec.symbol_rate_hz, "symbol rate [Hz]");
  synth_cmd->add_option("--fs", spec.sample_rate_hz, "sample rate [Hz]");
  synth_cmd->add_option("--order", spec.qam_order, "QAM order (4/16/64/256)");
  synth_cmd->add_option("--rolloff", spec.rolloff, "SRRC roll-off [0,1]");
  synth_cmd->add_option("--span", spec.span_symbols, "one-sided SRRC span [symbols]");
  synth_cmd->add_option("--symbols", symbols_opt, "number of symbols");
  synth_cmd->add_option("--offset", spec.freq_offset_hz, "carrier offset [Hz]");
  synth_cmd->add_option("--esno", esno_text, "Es/No [dB] or 'inf'");
  synth_cmd->add_option("--seed", spec.seed, "RNG seed");
  synth_cmd->add_option("--echo-preset", echo_preset, "NorDig echo path 0..9, -1 = none");
  synth_cmd->add_flag("--single-pulse", pulse_only, "emit one isolated pulse");
  synth_cmd->add_option("--out", out_file, "output IQ file");

  // estimate
  std::string in_file;
  double est_fs = 56e6;
  double min_rate = 1e6;
  std::string interp_text = "spline";
  std::string weights_text = "single";
  std::string dump_acf;
  EstimatorConfig est_cfg;
  double rolloff_hint = -1.0;
  auto* est_cmd = app.add_subcommand("estimate", "estimate the symbol rate of an IQ file");
  est_cmd->add_option("file", in_file, "raw IQ file (float32 interleaved)")->required();
  est_cmd->add_option("--fs", est_fs, "sample rate [Hz]");
  est_cmd->add_option("--min-rate", min_rate, "smallest expected symbol rate [Hz]");
  est_cmd->add_option("--interp", interp_text, "linear | spline");
  est_cmd->add_option("--crossings", est_cfg.max_zero_crossing, "crossings to locate");
  est_cmd->add_option("--weights", weights_text,
                      "single | slope-analytic | slope-online | slope-zc");
  est_cmd->add_option("--crossing", est_cfg.single_crossing,
                      "crossing used in single mode");
  est_cmd->add_option("--rolloff-hint", rolloff_hint,
                      "known roll-off for slope-based weights");
  est_cmd->add_option("--dump-acf", dump_acf, "write the raw ACF as CSV");

  // weights
  std::string wmode = "a";
  double wrolloff = 0.15;
  int wcount = 5;
  double wrate = 7e6;
  double wfs = 56e6;
  auto* weights_cmd = app.add_subcommand("weights", "print a combining weight table as CSV");
  weights_cmd->add_option("--mode", wmode, "a (analytic), b (online), c (slope+zc)");
  weights_cmd->add_option("--rolloff", wrolloff, "roll-off for modes a/c");
  weights_cmd->add_option("--crossings", wcount, "number of crossings");
  weights_cmd->add_option("--rate", wrate, "symbol rate for mode b");
  weights_cmd->add_option("--fs", wfs, "sample rate for mode b");

  // sweep
  std::string config_path;
  std::string preset_name;
  std::vector<std::string> overrides;
  bool print_rows = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "run an experiment sweep, emit CSV");
  sweep_cmd->add_option("config", config_path, "key = value sweep config file");
  sweep_cmd->add_option("--preset", preset_name, "named experiment preset");
  sweep_cmd->add_option("--set", overrides, "override a config key (key=value)");
  sweep_cmd->add_flag("--print", print_rows, "print rows to stdout as well");

  auto* list_cmd = app.add_subcommand("list-experiments", "list preset experiment recipes");

  CLI11_PARSE(app, argc, argv);

  try {
    if (synth_cmd->parsed()) {
      spec.n_symbols = std::llround(symbols_opt);
      spec.esno_db = (esno_text == "inf") ? std::numeric_limits<double>::infinity()
                                          : std::stod(esno_text);
      return run_synth(spec, echo_preset, pulse_only, out_file);
    }
    if (est_cmd->parsed()) {
      est_cfg.interpolator = parse_interp(interp_text);
      est_cfg.combine_weights = parse_weights(weights_text);
      if (rolloff_hint >= 0.0) est_cfg.rolloff_hint = rolloff_hint;
      return run_estimate(in_file, est_fs, est_cfg, min_rate, dump_acf);
    }
    if (weights_cmd->parsed()) {
      return run_weights(wmode, wrolloff, wcount, wrate, wfs);
    }
    if (sweep_cmd->parsed()) {
      return run_sweep_cmd(config_path, preset_name, overrides, print_rows);
    }
    if (list_cmd->parsed()) {
      for (const ExperimentPreset& preset : experiment_presets()) {
        std::printf("%-24s %s\n", preset.name.c_str(), preset.description.c_str());
      }
      return 0;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error [%s]: %s\n", to_string(e.code()), e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
