// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#include "baudscope/acf.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "baudscope/threading.hpp"

namespace baudscope {

AcfEstimate estimate_acf(const IqBuffer& buf, int max_lag) {
  const std::int64_t n = buf.samples.size();
  if (max_lag < 1) {
    throw Error(Error::Code::BadConfig, "max_lag must be >= 1");
  }
  if (n <= std::int64_t(max_lag) + 1) {
    throw Error(Error::Code::BufferTooShort,
                "buffer of " + std::to_string(n) + " samples cannot support lag " +
                    std::to_string(max_lag));
  }
  if (!(buf.sample_rate_hz > 0.0)) {
    throw Error(Error::Code::BadConfig, "sample rate must be positive");
  }

  AcfEstimate acf;
  acf.values.resize(max_lag + 1);
  acf.lag_spacing_s = 1.0 / buf.sample_rate_hz;
  acf.n_samples_used = n;

  const auto& y = buf.samples;
  parallel_for(max_lag + 1, [&](std::int64_t tau) {
    const std::int64_t len = n - tau;
    // Eigen's dot conjugates its first argument; Eq-style y[n] conj(y[n+tau])
    // is the conjugate of that.
    const std::complex<double> s = y.head(len).dot(y.segment(tau, len));
    acf.values[tau] = std::conj(s) / double(len);
  });
  return acf;
}

int max_lag_for(double min_symbol_rate_hz, double sample_rate_hz, int max_zero_crossing) {
  if (!(min_symbol_rate_hz > 0.0) || !(sample_rate_hz > 0.0) || max_zero_crossing < 1) {
    throw Error(Error::Code::BadConfig, "rates must be positive and crossings >= 1");
  }
  if (sample_rate_hz / min_symbol_rate_hz < 8.0) {
    throw Error(Error::Code::OversamplingTooLow,
                "minimum symbol rate implies oversampling below 8");
  }
  return int(std::ceil(max_zero_crossing * sample_rate_hz / min_symbol_rate_hz)) + 4;
}

void write_acf_csv(const AcfEstimate& acf, std::ostream& out) {
  out << "lag,re,im\n";
  char line[96];
  for (Eigen::Index tau = 0; tau < acf.values.size(); ++tau) {
    std::snprintf(line, sizeof(line), "%lld,%.17g,%.17g\n", (long long)tau,
                  acf.values[tau].real(), acf.values[tau].imag());
    out << line;
  }
}

void write_acf_csv(const AcfEstimate& acf, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(Error::Code::MalformedFile, "cannot open " + path + " for writing");
  }
  write_acf_csv(acf, out);
}

}  // namespace baudscope
