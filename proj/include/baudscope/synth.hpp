// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "baudscope/types.hpp"

namespace baudscope {

/// Uniform i.i.d. draws from a square QAM grid, normalized to unit average
/// symbol energy. Deterministic for a fixed seed.
Eigen::VectorXcd gen_qam_symbols(int order, std::int64_t n, std::uint64_t seed);

/// Shapes a QAM symbol stream with the SRRC pulse at the exact rational
/// ratio between symbol rate and sample rate (rates rounded to 1 Hz): the
/// pulse is laid out on the common grid of both clocks and only the output
/// phases are evaluated. Filter edge transients (span_symbols each side) are
/// trimmed. Output power is ~1 regardless of symbol rate.
IqBuffer synth_baseband(const SignalSpec& spec);

/// One isolated unit symbol shaped by the SRRC, sampled at the spec's rates
/// over the full pulse support (untrimmed), with a short zero tail so a
/// downstream channel can delay it without clipping. The noiseless limit
/// input of the truncation/interpolation error studies.
IqBuffer single_pulse(const SignalSpec& spec);

/// Multiplies sample n by e^{-j 2 pi f_o n / fs}.
IqBuffer apply_freq_offset(const IqBuffer& buf, double freq_offset_hz);

/// Sum of delayed, scaled copies per the profile. Fractional delays are
/// realized with a 64-tap Kaiser-windowed (beta = 8) sinc interpolator;
/// integer delays are exact shifts.
IqBuffer apply_echo(const IqBuffer& buf, const EchoProfile& profile);

/// Adds circular complex Gaussian noise scaled so the symbol-level Es/No
/// equals esno_db: per-sample variance = power * samples_per_symbol *
/// 10^(-esno_db/10), with power measured from the buffer. +inf returns the
/// buffer unchanged. Deterministic for a fixed seed.
IqBuffer add_awgn(const IqBuffer& buf, double esno_db, double samples_per_symbol,
                  std::uint64_t seed);

}  // namespace baudscope
