// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "baudscope/types.hpp"

namespace baudscope {

enum class Experiment {
  CorrLength,
  FilterSpan,
  RollOff,
  RateSweep,
  EsNoSweep,
  FreqOffset,
  EchoChannels,
  ZcSweep,
  TruncationOnly,
  InterpolationOnly,
  CombineCompare,
};

const char* to_string(Experiment experiment);
Experiment experiment_from_string(const std::string& name);

/// One experiment run: grid of swept values, Monte Carlo trial count and the
/// base signal/estimator configuration. Trial k uses seed base.seed + k so
/// any trial is reproducible in isolation.
struct SweepConfig {
  Experiment experiment = Experiment::CorrLength;
  std::vector<double> grid;
  int trials = 1;
  SignalSpec base;
  EstimatorConfig estimator;
  std::string out_path;
  int echo_preset = -1;             // NorDig preset index, -1 = no channel
  bool single_pulse = false;        // use the one-symbol limit case
  std::int64_t corr_samples = 0;    // correlation length in samples; 0 = from n_symbols
};

/// One aggregated CSV row. Failed trials are excluded from the aggregates
/// and counted in `errors`; when every trial failed the metric fields render
/// as the sentinel token ERR.
struct SweepRow {
  std::string experiment;
  double grid_value = 0.0;
  std::string interpolator;
  int zc_index = 0;
  std::string weights_mode;
  int trials = 0;
  int errors = 0;
  double nmse = 0.0;
  double nrmse = 0.0;
  double mean_ppm = 0.0;
  double max_ppm = 0.0;
};

extern const char* const kSweepCsvHeader;
std::string to_csv(const SweepRow& row);

/// Runs the experiment recipe over grid x trials and returns the rows in a
/// fixed order; also writes the CSV when out_path is set. Byte-identical
/// output for identical configs. Trials run concurrently (capped by
/// BAUDSCOPE_THREADS); aggregation order is fixed by trial index.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

/// Flat `key = value` config file ('#' comments). Keys match the
/// SweepConfig / SignalSpec / EstimatorConfig field names.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig load_sweep_config(const std::string& path);

/// Applies a single `key = value` pair (same keys as the config file).
void apply_config_key(SweepConfig& cfg, const std::string& key, const std::string& value);

/// Named recipes for the standard experiment sweeps at desk scale.
struct ExperimentPreset {
  std::string name;
  std::string description;
  SweepConfig config;
};

const std::vector<ExperimentPreset>& experiment_presets();
const ExperimentPreset& find_preset(const std::string& name);

/// Synthesis driver used by every recipe: baseband (or single pulse), echo
/// channel, frequency offset, then AWGN.
IqBuffer synth_received(const SignalSpec& spec, int echo_preset, bool single_pulse_mode);

/// Symbol count so a synthesized buffer holds at least n_samples after edge
/// trimming.
std::int64_t symbols_for_samples(const SignalSpec& spec, std::int64_t n_samples);

}  // namespace baudscope
