// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#pragma once

#include "baudscope/types.hpp"

namespace baudscope {

/// Full blind pipeline: time-averaged ACF to the lag horizon implied by
/// min_rate_hz, frequency-offset estimation and compensation, zero-crossing
/// location on the real part, weighted combining. min_rate_hz only sizes the
/// lag horizon; the estimate itself is drawn from a continuum.
RateEstimate estimate_symbol_rate(const IqBuffer& buf, const EstimatorConfig& cfg,
                                  double min_rate_hz);

}  // namespace baudscope
