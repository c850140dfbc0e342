// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#include "baudscope/foc.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace baudscope {

double estimate_freq_offset(const AcfEstimate& acf) {
  if (acf.values.size() < 2) {
    throw Error(Error::Code::BadConfig, "ACF needs lag >= 1 for offset estimation");
  }
  const std::complex<double> r1 = acf.values[1];
  const double r0 = std::abs(acf.values[0]);
  if (r0 == 0.0 || !(std::abs(r1) >= 1e-12 * r0)) {
    throw Error(Error::Code::DegenerateAcf, "lag-1 autocorrelation is vanishingly small");
  }
  return std::arg(r1) / (2.0 * std::numbers::pi * acf.lag_spacing_s);
}

AcfEstimate compensate_acf(const AcfEstimate& acf, double freq_offset_hz) {
  AcfEstimate out = acf;
  const double phase_per_lag =
      -2.0 * std::numbers::pi * freq_offset_hz * acf.lag_spacing_s;
  for (Eigen::Index tau = 0; tau < out.values.size(); ++tau) {
    out.values[tau] *= std::polar(1.0, phase_per_lag * double(tau));
  }
  return out;
}

}  // namespace baudscope
