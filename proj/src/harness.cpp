// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#include "baudscope/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "baudscope/acf.hpp"
#include "baudscope/combine.hpp"
#include "baudscope/foc.hpp"
#include "baudscope/metrics.hpp"
#include "baudscope/synth.hpp"
#include "baudscope/threading.hpp"
#include "baudscope/zcd.hpp"

namespace baudscope {

namespace {

constexpr std::uint64_t kNoiseSeedSalt = 0x9e3779b97f4a7c15ull;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const char* interp_name(Interpolator interp) {
  return interp == Interpolator::Linear ? "linear" : "spline";
}

}  // namespace

const char* to_string(Experiment experiment) {
  switch (experiment) {
    case Experiment::CorrLength: return "corr-length";
    case Experiment::FilterSpan: return "filter-span";
    case Experiment::RollOff: return "roll-off";
    case Experiment::RateSweep: return "rate-sweep";
    case Experiment::EsNoSweep: return "esno-sweep";
    case Experiment::FreqOffset: return "freq-offset";
    case Experiment::EchoChannels: return "echo-channels";
    case Experiment::ZcSweep: return "zc-sweep";
    case Experiment::TruncationOnly: return "truncation-only";
    case Experiment::InterpolationOnly: return "interpolation-only";
    case Experiment::CombineCompare: return "combine-compare";
  }
  return "unknown";
}

Experiment experiment_from_string(const std::string& name) {
  static const std::pair<const char*, Experiment> table[] = {
      {"corr-length", Experiment::CorrLength},
      {"filter-span", Experiment::FilterSpan},
      {"roll-off", Experiment::RollOff},
      {"rate-sweep", Experiment::RateSweep},
      {"esno-sweep", Experiment::EsNoSweep},
      {"freq-offset", Experiment::FreqOffset},
      {"echo-channels", Experiment::EchoChannels},
      {"zc-sweep", Experiment::ZcSweep},
      {"truncation-only", Experiment::TruncationOnly},
      {"interpolation-only", Experiment::InterpolationOnly},
      {"combine-compare", Experiment::CombineCompare},
  };
  for (const auto& [key, value] : table) {
    if (name == key) return value;
  }
  throw Error(Error::Code::BadConfig, "unknown experiment '" + name + "'");
}

const char* const kSweepCsvHeader =
    "experiment,grid_value,interpolator,zc_index,weights_mode,trials,errors,"
    "nmse,nrmse,mean_ppm,max_ppm";

std::string to_csv(const SweepRow& row) {
  char buf[288];
  if (row.errors >= row.trials) {
    std::snprintf(buf, sizeof(buf), "%s,%.10g,%s,%d,%s,%d,%d,ERR,ERR,ERR,ERR",
                  row.experiment.c_str(), row.grid_value, row.interpolator.c_str(),
                  row.zc_index, row.weights_mode.c_str(), row.trials, row.errors);
  } else {
    std::snprintf(buf, sizeof(buf), "%s,%.10g,%s,%d,%s,%d,%d,%.6e,%.6e,%.4f,%.4f",
                  row.experiment.c_str(), row.grid_value, row.interpolator.c_str(),
                  row.zc_index, row.weights_mode.c_str(), row.trials, row.errors,
                  row.nmse, row.nrmse, row.mean_ppm, row.max_ppm);
  }
  return buf;
}

IqBuffer synth_received(const SignalSpec& spec, int echo_preset, bool single_pulse_mode) {
  validate_spec(spec);
  IqBuffer buf = single_pulse_mode ? single_pulse(spec) : synth_baseband(spec);
  if (echo_preset >= 0) {
    buf = apply_echo(buf, nordig_echo_preset(echo_preset));
  }
  if (spec.freq_offset_hz != 0.0) {
    buf = apply_freq_offset(buf, spec.freq_offset_hz);
  }
  if (!(std::isinf(spec.esno_db) && spec.esno_db > 0.0)) {
    buf = add_awgn(buf, spec.esno_db, oversampling_ratio(spec),
                   spec.seed ^ kNoiseSeedSalt);
  }
  return buf;
}

std::int64_t symbols_for_samples(const SignalSpec& spec, std::int64_t n_samples) {
  const double per_symbol = spec.sample_rate_hz / spec.symbol_rate_hz;
  return std::int64_t(std::ceil(double(n_samples) / per_symbol)) +
         2 * spec.span_symbols + 2;
}

namespace {

struct CellDef {
  std::string experiment_label;
  double grid_value = 0.0;
  Interpolator interp = Interpolator::SplineNotAKnot;
  int zc_index = 1;
  std::string weights_mode = "single";
  bool compensate = true;
};

SweepRow aggregate_cell(const SweepConfig& cfg, const CellDef& cell,
                        const std::vector<double>& estimates, double true_period) {
  SweepRow row;
  row.experiment = cell.experiment_label;
  row.grid_value = cell.grid_value;
  row.interpolator = interp_name(cell.interp);
  row.zc_index = cell.zc_index;
  row.weights_mode = cell.weights_mode;
  row.trials = cfg.trials;

  std::vector<double> valid;
  valid.reserve(estimates.size());
  for (double e : estimates) {
    if (std::isnan(e)) {
      ++row.errors;
    } else {
      valid.push_back(e);
    }
  }
  if (valid.empty()) {
    row.nmse = row.nrmse = row.mean_ppm = row.max_ppm = kNaN;
    return row;
  }
  row.nmse = metric_nmse(true_period, valid);
  row.nrmse = metric_nrmse(true_period, valid);
  double sum_ppm = 0.0;
  double max_abs_ppm = 0.0;
  for (double e : valid) {
    const double ppm = metric_ppm(true_period, e);
    sum_ppm += ppm;
    max_abs_ppm = std::max(max_abs_ppm, std::abs(ppm));
  }
  row.mean_ppm = sum_ppm / double(valid.size());
  row.max_ppm = max_abs_ppm;
  return row;
}

// Grid-parameterized recipes: one synthesis per (grid value, trial), the grid
// value reshaping the signal itself.
bool grid_shapes_signal(Experiment e) {
  return e == Experiment::CorrLength || e == Experiment::FilterSpan ||
         e == Experiment::RollOff || e == Experiment::RateSweep ||
         e == Experiment::EsNoSweep || e == Experiment::FreqOffset ||
         e == Experiment::EchoChannels;
}

SignalSpec spec_for_grid_value(const SweepConfig& cfg, double g) {
  SignalSpec spec = cfg.base;
  switch (cfg.experiment) {
    case Experiment::CorrLength: break;  // handled via target length below
    case Experiment::FilterSpan: spec.span_symbols = int(std::llround(g)); break;
    case Experiment::RollOff: spec.rolloff = g; break;
    case Experiment::RateSweep: spec.symbol_rate_hz = g; break;
    case Experiment::EsNoSweep: spec.esno_db = g; break;
    case Experiment::FreqOffset: spec.symbol_rate_hz = g; break;
    case Experiment::EchoChannels: break;  // grid selects the preset
    default: break;
  }
  return spec;
}

std::int64_t target_samples_for(const SweepConfig& cfg, double g) {
  if (cfg.experiment == Experiment::CorrLength) return std::int64_t(std::llround(g));
  return cfg.corr_samples;
}

int echo_preset_for(const SweepConfig& cfg, double g) {
  if (cfg.experiment == Experiment::EchoChannels) return int(std::llround(g));
  return cfg.echo_preset;
}

void truncate_to(IqBuffer& buf, std::int64_t n_samples) {
  if (n_samples > 0 && buf.samples.size() > n_samples) {
    buf.samples.conservativeResize(n_samples);
  }
}

std::vector<SweepRow> run_grid_shaped(const SweepConfig& cfg) {
  std::vector<SweepRow> rows;
  const bool freq_offset_study = cfg.experiment == Experiment::FreqOffset;
  const int zc = cfg.estimator.single_crossing;

  for (double g : cfg.grid) {
    std::vector<CellDef> cells;
    if (freq_offset_study) {
      const std::string base_label = to_string(cfg.experiment);
      cells.push_back({base_label + "/comp", g, cfg.estimator.interpolator, zc, "single", true});
      cells.push_back({base_label + "/raw", g, cfg.estimator.interpolator, zc, "single", false});
    } else {
      cells.push_back({to_string(cfg.experiment), g, Interpolator::SplineNotAKnot, zc, "single", true});
      cells.push_back({to_string(cfg.experiment), g, Interpolator::Linear, zc, "single", true});
    }

    std::vector<std::vector<double>> estimates(cells.size(),
                                               std::vector<double>(cfg.trials, kNaN));
    const SignalSpec shaped = spec_for_grid_value(cfg, g);
    const double true_period = shaped.sample_rate_hz / shaped.symbol_rate_hz;

    parallel_for(cfg.trials, [&](std::int64_t trial) {
      SignalSpec spec = shaped;
      spec.seed = cfg.base.seed + std::uint64_t(trial);
      const std::int64_t target = target_samples_for(cfg, g);
      if (!cfg.single_pulse && target > 0) {
        spec.n_symbols = symbols_for_samples(spec, target);
      }
      IqBuffer buf;
      AcfEstimate acf;
      try {
        buf = synth_received(spec, echo_preset_for(cfg, g), cfg.single_pulse);
        if (!cfg.single_pulse) truncate_to(buf, target);
        const int max_lag = max_lag_for(spec.symbol_rate_hz, spec.sample_rate_hz, zc);
        acf = estimate_acf(buf, max_lag);
      } catch (const Error&) {
        return;  // whole trial fails; sentinel stays in place
      }
      for (std::size_t c = 0; c < cells.size(); ++c) {
        try {
          AcfEstimate ready = acf;
          if (cells[c].compensate) {
            ready = compensate_acf(acf, estimate_freq_offset(acf));
          }
          EstimatorConfig zcfg = cfg.estimator;
          zcfg.interpolator = cells[c].interp;
          zcfg.max_zero_crossing = zc;
          zcfg.combine_weights = WeightsMode::SingleCrossing;
          zcfg.single_crossing = zc;
          const auto crossings = locate_crossings(ready, zcfg);
          estimates[c][trial] = period_from_crossing(crossings[zc - 1]);
        } catch (const Error&) {
          // cell stays NaN
        }
      }
    });

    for (std::size_t c = 0; c < cells.size(); ++c) {
      rows.push_back(aggregate_cell(cfg, cells[c], estimates[c], true_period));
    }
  }
  return rows;
}

// Crossing-indexed recipes: one synthesis per trial, the grid indexing into
// the located crossings (and, for combine-compare, the combining modes).
std::vector<SweepRow> run_crossing_indexed(const SweepConfig& cfg) {
  SignalSpec base = cfg.base;
  bool single_pulse_mode = cfg.single_pulse;
  int echo = cfg.echo_preset;
  switch (cfg.experiment) {
    case Experiment::TruncationOnly:
      base.sample_rate_hz *= 10.0;  // push interpolation error below truncation error
      base.freq_offset_hz = 0.0;
      base.esno_db = std::numeric_limits<double>::infinity();
      single_pulse_mode = true;
      echo = -1;
      break;
    case Experiment::InterpolationOnly:
      base.span_symbols = 12000;  // pulse long enough to make truncation negligible
      base.freq_offset_hz = 0.0;
      base.esno_db = std::numeric_limits<double>::infinity();
      single_pulse_mode = true;
      echo = -1;
      break;
    default:
      break;
  }

  int max_crossing = 1;
  for (double g : cfg.grid) {
    max_crossing = std::max(max_crossing, int(std::llround(g)));
  }
  const bool combine_study = cfg.experiment == Experiment::CombineCompare;
  const double true_period = base.sample_rate_hz / base.symbol_rate_hz;

  std::vector<CellDef> cells;
  if (combine_study) {
    const Interpolator interp = cfg.estimator.interpolator;
    for (double g : cfg.grid) {
      cells.push_back({to_string(cfg.experiment), g, interp, int(std::llround(g)), "single", true});
    }
    cells.push_back({to_string(cfg.experiment), 0.0, interp, max_crossing, "slope_analytic", true});
    cells.push_back({to_string(cfg.experiment), 0.0, interp, max_crossing, "slope_online", true});
    cells.push_back({to_string(cfg.experiment), 0.0, interp, max_crossing, "slope_zc", true});
  } else {
    for (double g : cfg.grid) {
      const int m = int(std::llround(g));
      cells.push_back({to_string(cfg.experiment), g, Interpolator::SplineNotAKnot, m, "single", true});
      cells.push_back({to_string(cfg.experiment), g, Interpolator::Linear, m, "single", true});
    }
  }

  std::vector<std::vector<double>> estimates(cells.size(),
                                             std::vector<double>(cfg.trials, kNaN));

  parallel_for(cfg.trials, [&](std::int64_t trial) {
    SignalSpec spec = base;
    spec.seed = cfg.base.seed + std::uint64_t(trial);
    if (!single_pulse_mode && cfg.corr_samples > 0) {
      spec.n_symbols = symbols_for_samples(spec, cfg.corr_samples);
    }
    AcfEstimate ready;
    try {
      IqBuffer buf = synth_received(spec, echo, single_pulse_mode);
      if (!single_pulse_mode) truncate_to(buf, cfg.corr_samples);
      const int max_lag =
          max_lag_for(spec.symbol_rate_hz, spec.sample_rate_hz, max_crossing);
      const AcfEstimate acf = estimate_acf(buf, max_lag);
      ready = compensate_acf(acf, estimate_freq_offset(acf));
    } catch (const Error&) {
      return;
    }

    auto locate = [&](Interpolator interp) {
      EstimatorConfig zcfg = cfg.estimator;
      zcfg.interpolator = interp;
      zcfg.max_zero_crossing = max_crossing;
      zcfg.combine_weights = WeightsMode::SingleCrossing;
      zcfg.single_crossing = 1;
      return locate_crossings(ready, zcfg);
    };

    if (combine_study) {
      try {
        const auto crossings = locate(cfg.estimator.interpolator);
        Eigen::ArrayXd periods(max_crossing);
        for (int m = 1; m <= max_crossing; ++m) {
          periods[m - 1] = period_from_crossing(crossings[m - 1]);
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
          const CellDef& cell = cells[c];
          try {
            if (cell.weights_mode == "single") {
              estimates[c][trial] = periods[cell.zc_index - 1];
            } else if (cell.weights_mode == "slope_analytic") {
              estimates[c][trial] = combine_estimates(
                  periods, weights_slope_analytic(base.rolloff, max_crossing));
            } else if (cell.weights_mode == "slope_online") {
              estimates[c][trial] =
                  combine_estimates(periods, weights_slope_online(crossings));
            } else {
              estimates[c][trial] = combine_estimates(
                  periods, weights_slope_zc(base.rolloff, max_crossing));
            }
          } catch (const Error&) {
          }
        }
      } catch (const Error&) {
      }
    } else {
      for (Interpolator interp : {Interpolator::SplineNotAKnot, Interpolator::Linear}) {
        try {
          const auto crossings = locate(interp);
          for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].interp != interp) continue;
            estimates[c][trial] = period_from_crossing(crossings[cells[c].zc_index - 1]);
          }
        } catch (const Error&) {
        }
      }
    }
  });

  std::vector<SweepRow> rows;
  rows.reserve(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    rows.push_back(aggregate_cell(cfg, cells[c], estimates[c], true_period));
  }
  return rows;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  if (cfg.grid.empty()) {
    throw Error(Error::Code::BadConfig, "sweep grid must be non-empty");
  }
  if (cfg.trials < 1) {
    throw Error(Error::Code::BadConfig, "trials must be >= 1");
  }
  validate_config(cfg.estimator);

  std::vector<SweepRow> rows = grid_shapes_signal(cfg.experiment)
                                   ? run_grid_shaped(cfg)
                                   : run_crossing_indexed(cfg);

  if (!cfg.out_path.empty()) {
    std::ofstream out(cfg.out_path);
    if (!out) {
      throw Error(Error::Code::MalformedFile,
                  "cannot open " + cfg.out_path + " for writing");
    }
    out << kSweepCsvHeader << '\n';
    for (const SweepRow& row : rows) {
      out << to_csv(row) << '\n';
    }
  }
  return rows;
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<double> parse_grid(const std::string& value) {
  std::string cleaned = value;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<double> grid;
  double v;
  while (in >> v) grid.push_back(v);
  return grid;
}

bool parse_bool(const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw Error(Error::Code::BadConfig, "expected boolean, got '" + value + "'");
}

double parse_esno(const std::string& value) {
  if (value == "inf" || value == "+inf" || value == "infinity") {
    return std::numeric_limits<double>::infinity();
  }
  return std::stod(value);
}

}  // namespace

void apply_config_key(SweepConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "experiment") {
    cfg.experiment = experiment_from_string(value);
  } else if (key == "grid") {
    cfg.grid = parse_grid(value);
  } else if (key == "trials") {
    cfg.trials = std::stoi(value);
  } else if (key == "out_path") {
    cfg.out_path = value;
  } else if (key == "echo_preset") {
    cfg.echo_preset = std::stoi(value);
  } else if (key == "single_pulse") {
    cfg.single_pulse = parse_bool(value);
  } else if (key == "corr_samples") {
    cfg.corr_samples = std::llround(std::stod(value));
  } else if (key == "symbol_rate_hz") {
    cfg.base.symbol_rate_hz = std::stod(value);
  } else if (key == "qam_order") {
    cfg.base.qam_order = std::stoi(value);
  } else if (key == "rolloff") {
    cfg.base.rolloff = std::stod(value);
  } else if (key == "span_symbols") {
    cfg.base.span_symbols = std::stoi(value);
  } else if (key == "n_symbols") {
    cfg.base.n_symbols = std::llround(std::stod(value));
  } else if (key == "freq_offset_hz") {
    cfg.base.freq_offset_hz = std::stod(value);
  } else if (key == "esno_db") {
    cfg.base.esno_db = parse_esno(value);
  } else if (key == "seed") {
    cfg.base.seed = std::stoull(value);
  } else if (key == "sample_rate_hz") {
    cfg.base.sample_rate_hz = std::stod(value);
  } else if (key == "interpolator") {
    if (value == "linear") {
      cfg.estimator.interpolator = Interpolator::Linear;
    } else if (value == "spline") {
      cfg.estimator.interpolator = Interpolator::SplineNotAKnot;
    } else {
      throw Error(Error::Code::BadConfig, "unknown interpolator '" + value + "'");
    }
  } else if (key == "max_zero_crossing") {
    cfg.estimator.max_zero_crossing = std::stoi(value);
  } else if (key == "points_before") {
    cfg.estimator.points_before = std::stoi(value);
  } else if (key == "points_after") {
    cfg.estimator.points_after = std::stoi(value);
  } else if (key == "combine_weights") {
    if (value == "single") {
      cfg.estimator.combine_weights = WeightsMode::SingleCrossing;
    } else if (value == "slope-analytic") {
      cfg.estimator.combine_weights = WeightsMode::SlopeAnalytic;
    } else if (value == "slope-online") {
      cfg.estimator.combine_weights = WeightsMode::SlopeOnline;
    } else if (value == "slope-zc") {
      cfg.estimator.combine_weights = WeightsMode::SlopeAndZc;
    } else {
      throw Error(Error::Code::BadConfig, "unknown combine_weights '" + value + "'");
    }
  } else if (key == "single_crossing") {
    cfg.estimator.single_crossing = std::stoi(value);
  } else if (key == "rolloff_hint") {
    cfg.estimator.rolloff_hint = std::stod(value);
  } else {
    throw Error(Error::Code::BadConfig, "unknown config key '" + key + "'");
  }
}

SweepConfig parse_sweep_config(std::istream& in) {
  SweepConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(Error::Code::BadConfig,
                  "line " + std::to_string(line_no) + ": expected key = value");
    }
    apply_config_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Error::Code::MalformedFile, "cannot open config " + path);
  }
  return parse_sweep_config(in);
}

namespace {

std::vector<ExperimentPreset> build_presets() {
  std::vector<ExperimentPreset> presets;
  auto add = [&presets](const std::string& name, const std::string& description,
                        auto&& customize) {
    SweepConfig cfg;
    cfg.base.symbol_rate_hz = 7e6;
    cfg.base.sample_rate_hz = 56e6;
    cfg.base.rolloff = 0.15;
    cfg.base.qam_order = 256;
    cfg.base.span_symbols = 12;
    cfg.base.esno_db = 15.0;
    cfg.base.seed = 1;
    customize(cfg);
    presets.push_back({name, description, cfg});
  };
  const double inf = std::numeric_limits<double>::infinity();

  add("corr-length-awgn",
      "NRMSE vs correlation length {5e4,5e5,5e6}, 7 MSym/s, Es/No 15 dB, AWGN only",
      [](SweepConfig& c) {
        c.experiment = Experiment::CorrLength;
        c.grid = {5e4, 5e5, 5e6};
        c.trials = 8;
      });
  add("corr-length-echo3",
      "Same correlation-length sweep through the worst-case NorDig echo path 3",
      [](SweepConfig& c) {
        c.experiment = Experiment::CorrLength;
        c.grid = {5e4, 5e5, 5e6};
        c.trials = 8;
        c.echo_preset = 3;
      });
  add("filter-span",
      "NRMSE vs one-sided SRRC span {4..12} at 5 MSym/s, 5e5-sample correlation",
      [](SweepConfig& c) {
        c.experiment = Experiment::FilterSpan;
        c.grid = {4, 6, 8, 10, 12};
        c.trials = 8;
        c.base.symbol_rate_hz = 5e6;
        c.corr_samples = 500000;
      });
  add("roll-off",
      "NRMSE vs roll-off {0.05..0.5}, 5 MSym/s noiseless, 5e5-sample correlation",
      [inf](SweepConfig& c) {
        c.experiment = Experiment::RollOff;
        c.grid = {0.05, 0.15, 0.25, 0.35, 0.5};
        c.trials = 8;
        c.base.symbol_rate_hz = 5e6;
        c.base.esno_db = inf;
        c.corr_samples = 500000;
      });
  add("rate-sweep-rx",
      "NRMSE vs symbol rate {1.5,2.5,4.5,6.5} MSym/s on received data, Es/No 15 dB",
      [](SweepConfig& c) {
        c.experiment = Experiment::RateSweep;
        c.grid = {1.5e6, 2.5e6, 4.5e6, 6.5e6};
        c.trials = 8;
        c.corr_samples = 500000;
      });
  add("rate-sweep-limit",
      "Error in ppm vs symbol rate for the noiseless single-pulse limit case",
      [inf](SweepConfig& c) {
        c.experiment = Experiment::RateSweep;
        c.grid = {1e6, 2e6, 3e6, 5e6, 6e6, 6.5882e6, 7e6};
        c.trials = 1;
        c.single_pulse = true;
        c.base.esno_db = inf;
      });
  add("rate-sweep-limit-echo3",
      "Single-pulse rate sweep through NorDig echo path 3 (distortion-dominated)",
      [inf](SweepConfig& c) {
        c.experiment = Experiment::RateSweep;
        c.grid = {1e6, 3e6, 5e6, 6e6, 6.58e6};
        c.trials = 1;
        c.single_pulse = true;
        c.base.esno_db = inf;
        c.echo_preset = 3;
      });
  add("esno-sweep",
      "NMSE vs Es/No {0..25} dB, QPSK at 7 MSym/s, 5e4-sample correlation",
      [](SweepConfig& c) {
        c.experiment = Experiment::EsNoSweep;
        c.grid = {0, 5, 10, 15, 20, 25};
        c.trials = 16;
        c.base.qam_order = 4;
        c.corr_samples = 50000;
      });
  add("freq-offset",
      "NRMSE vs rate {1,2,7} MSym/s with a 150 kHz carrier offset, with and "
      "without compensation",
      [](SweepConfig& c) {
        c.experiment = Experiment::FreqOffset;
        c.grid = {1e6, 2e6, 7e6};
        c.trials = 8;
        c.base.freq_offset_hz = 150e3;
        c.corr_samples = 500000;
      });
  add("echo-channels",
      "Single-pulse error in ppm across NorDig echo paths 0..9",
      [inf](SweepConfig& c) {
        c.experiment = Experiment::EchoChannels;
        c.grid = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
        c.trials = 1;
        c.single_pulse = true;
        c.base.esno_db = inf;
      });
  add("zc-sweep-limit",
      "Single-pulse error in ppm per zero crossing 1..5, no channel",
      [inf](SweepConfig& c) {
        c.experiment = Experiment::ZcSweep;
        c.grid = {1, 2, 3, 4, 5};
        c.trials = 1;
        c.single_pulse = true;
        c.base.esno_db = inf;
      });
  add("zc-sweep-limit-echo3",
      "Single-pulse error in ppm per zero crossing through NorDig echo path 3",
      [inf](SweepConfig& c) {
        c.experiment = Experiment::ZcSweep;
        c.grid = {1, 2, 3, 4, 5};
        c.trials = 1;
        c.single_pulse = true;
        c.base.esno_db = inf;
        c.echo_preset = 3;
      });
  add("zc-sweep-rx-awgn",
      "MSE per zero crossing on received data, 7 MSym/s, Es/No 15 dB, 5e6 samples",
      [](SweepConfig& c) {
        c.experiment = Experiment::ZcSweep;
        c.grid = {1, 2, 3, 4, 5};
        c.trials = 8;
        c.corr_samples = 5000000;
      });
  add("zc-sweep-rx-echo3",
      "MSE per zero crossing on received data through NorDig echo path 3",
      [](SweepConfig& c) {
        c.experiment = Experiment::ZcSweep;
        c.grid = {1, 2, 3, 4, 5};
        c.trials = 8;
        c.corr_samples = 5000000;
        c.echo_preset = 3;
      });
  add("truncation-only",
      "Signed truncation error in ppm per zero crossing, single pulse sampled "
      "10x faster so interpolation error vanishes",
      [inf](SweepConfig& c) {
        c.experiment = Experiment::TruncationOnly;
        c.grid = {1, 2, 3, 4, 5, 6, 7};
        c.trials = 1;
        c.base.span_symbols = 8;
        c.base.esno_db = inf;
      });
  add("interpolation-only",
      "Interpolation error in ppm per zero crossing, single pulse with a "
      "12000-symbol span so truncation error vanishes",
      [inf](SweepConfig& c) {
        c.experiment = Experiment::InterpolationOnly;
        c.grid = {1, 2, 3, 4, 5, 6, 7};
        c.trials = 1;
        c.base.symbol_rate_hz = 5e6;
        c.base.esno_db = inf;
      });
  add("combine-awgn",
      "MSE of single crossings 1..5 vs weighted combining (analytic slope, "
      "online slope, slope+crossing), AWGN at 7 MSym/s, 5e6 samples",
      [](SweepConfig& c) {
        c.experiment = Experiment::CombineCompare;
        c.grid = {1, 2, 3, 4, 5};
        c.trials = 8;
        c.corr_samples = 5000000;
      });
  add("combine-echo3",
      "Same combining comparison through NorDig echo path 3",
      [](SweepConfig& c) {
        c.experiment = Experiment::CombineCompare;
        c.grid = {1, 2, 3, 4, 5};
        c.trials = 8;
        c.corr_samples = 5000000;
        c.echo_preset = 3;
      });
  return presets;
}

}  // namespace

const std::vector<ExperimentPreset>& experiment_presets() {
  static const std::vector<ExperimentPreset> presets = build_presets();
  return presets;
}

const ExperimentPreset& find_preset(const std::string& name) {
  for (const ExperimentPreset& preset : experiment_presets()) {
    if (preset.name == name) return preset;
  }
  throw Error(Error::Code::BadConfig, "unknown experiment preset '" + name + "'");
}

}  // namespace baudscope
