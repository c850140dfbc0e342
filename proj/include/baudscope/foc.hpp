// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#pragma once

#include "baudscope/acf.hpp"

namespace baudscope {

/// Carrier offset from the lag-1 autocorrelation phase:
/// angle(values[1]) / (2 pi * lag_spacing_s), range +-fs/2.
double estimate_freq_offset(const AcfEstimate& acf);

/// Undoes the per-lag rotation the offset induces: values[tau] multiplied by
/// e^{-j 2 pi f_o tau * lag_spacing_s}. O(max_lag), equivalent to derotating
/// the raw samples since the rotation factors out of the time average.
AcfEstimate compensate_acf(const AcfEstimate& acf, double freq_offset_hz);

}  // namespace baudscope
