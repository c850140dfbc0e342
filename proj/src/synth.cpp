// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#include "baudscope/synth.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <random>
#include <tuple>

#include "baudscope/pulse.hpp"
#include "baudscope/threading.hpp"

namespace baudscope {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc_pi(double x) {
  if (std::abs(x) < 1e-9) return 1.0;
  const double px = kPi * x;
  return std::sin(px) / px;
}

// Hard bound on the common-grid rate. Within it, 64-bit grid arithmetic and
// the double representation of grid indices stay exact.
constexpr double kGridRateCapHz = 1e15;

// Largest SRRC grid table kept in memory (~128 MB of doubles). Beyond it the
// taps are evaluated from the closed form on demand, which is exact too.
constexpr std::int64_t kMaxTableTaps = std::int64_t(1) << 24;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

void require_samples(const IqBuffer& buf) {
  if (buf.samples.size() == 0) {
    throw Error(Error::Code::EmptyInput, "buffer has no samples");
  }
  if (!(buf.sample_rate_hz > 0.0)) {
    throw Error(Error::Code::BadConfig, "sample rate must be positive");
  }
}

// Symbol clock and sample clock reduced to the common grid: grid_per_symbol
// ticks per symbol, grid_per_sample ticks per output sample. Rates are
// rounded to 1 Hz before reduction.
struct GridRatio {
  std::int64_t grid_per_symbol;  // U = fs / gcd
  std::int64_t grid_per_sample;  // D = baud / gcd
};

GridRatio reduce_clocks(double symbol_rate_hz, double sample_rate_hz) {
  const std::int64_t baud = std::llround(symbol_rate_hz);
  const std::int64_t fs = std::llround(sample_rate_hz);
  if (baud < 1 || fs < 1) {
    throw Error(Error::Code::BadConfig, "rates below 1 Hz are not representable");
  }
  const std::int64_t g = std::gcd(baud, fs);
  const std::int64_t u = fs / g;
  if (double(u) * double(baud) > kGridRateCapHz) {
    throw Error(Error::Code::ResamplingOverflow,
                "common grid rate exceeds " + std::to_string(kGridRateCapHz) + " Hz");
  }
  return {u, baud / g};
}

// SRRC on the common grid, organized as a polyphase bank: one contiguous row
// of 2*span+1 taps per grid phase, so shaping one output sample streams a
// single row. Falls back to closed-form evaluation per tap when the bank
// would be unreasonably large; the two paths produce identical values.
class PulseShaper {
 public:
  PulseShaper(double rolloff, int span_symbols, std::int64_t grid_per_symbol)
      : rolloff_(rolloff),
        span_(span_symbols),
        u_(grid_per_symbol),
        row_(2 * span_symbols + 1) {
    if (row_ * grid_per_symbol <= kMaxTableTaps) {
      bank_ = cached_bank(rolloff, span_symbols, grid_per_symbol);
    }
  }

  int span() const { return span_; }

  // Taps for grid phase in [0, u): entry j+span covers symbol offset j,
  // i.e. srrc((phase + j*u)/u). Only valid on the bank path.
  const double* row(std::int64_t phase) const { return bank_->data() + phase * row_; }

  bool has_bank() const { return bank_ != nullptr; }

  double tap(std::int64_t phase, std::int64_t j) const {
    const double t = (double(phase) / double(u_)) + double(j);
    return std::abs(t) > double(span_) ? 0.0 : srrc_analytic(rolloff_, t);
  }

 private:
  using BankKey = std::tuple<double, int, std::int64_t>;

  static std::shared_ptr<const Eigen::ArrayXd> cached_bank(double rolloff, int span,
                                                           std::int64_t u) {
    static std::mutex mutex;
    static std::map<BankKey, std::shared_ptr<const Eigen::ArrayXd>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    const BankKey key{rolloff, span, u};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const std::int64_t row = 2 * span + 1;
    auto bank = std::make_shared<Eigen::ArrayXd>(row * u);
    for (std::int64_t phase = 0; phase < u; ++phase) {
      for (std::int64_t j = -span; j <= span; ++j) {
        const double t = (double(phase) / double(u)) + double(j);
        (*bank)[phase * row + j + span] =
            std::abs(t) > double(span) ? 0.0 : srrc_analytic(rolloff, t);
      }
    }
    // Keep the cache from growing without bound across long sweeps.
    if (cache.size() > 12) cache.clear();
    cache.emplace(key, bank);
    return bank;
  }

  double rolloff_;
  int span_;
  std::int64_t u_;
  std::int64_t row_;
  std::shared_ptr<const Eigen::ArrayXd> bank_;
};

}  // namespace

Eigen::VectorXcd gen_qam_symbols(int order, std::int64_t n, std::uint64_t seed) {
  if (order != 4 && order != 16 && order != 64 && order != 256) {
    throw Error(Error::Code::BadOrder, "unsupported QAM order " + std::to_string(order));
  }
  if (n < 0) {
    throw Error(Error::Code::BadConfig, "symbol count must be non-negative");
  }
  int side = 2;
  int axis_bits = 1;
  while (side * side < order) {
    side *= 2;
    ++axis_bits;
  }
  const double scale = std::sqrt(3.0 / (2.0 * (double(side) * side - 1.0)));

  Eigen::VectorXcd symbols(n);
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = std::uint64_t(order) - 1;
  for (std::int64_t i = 0; i < n; ++i) {
    const std::uint64_t bits = rng() & mask;
    const int ii = int(bits & (side - 1));
    const int qi = int((bits >> axis_bits) & (side - 1));
    symbols[i] = std::complex<double>((2 * ii - (side - 1)) * scale,
                                      (2 * qi - (side - 1)) * scale);
  }
  return symbols;
}

IqBuffer synth_baseband(const SignalSpec& spec) {
  validate_spec(spec);
  const auto [u, d] = reduce_clocks(spec.symbol_rate_hz, spec.sample_rate_hz);
  const std::int64_t span = spec.span_symbols;
  const PulseShaper pulse(spec.rolloff, spec.span_symbols, u);

  const Eigen::VectorXcd symbols =
      gen_qam_symbols(spec.qam_order, spec.n_symbols, spec.seed);

  const std::int64_t n_full = floor_div(spec.n_symbols * u, d);
  const std::int64_t trim = ceil_div(span * u, d);
  const std::int64_t n_out = n_full - 2 * trim;
  if (n_out < 1) {
    throw Error(Error::Code::BadConfig,
                "n_symbols too small to survive edge trimming at this span");
  }

  IqBuffer out;
  out.sample_rate_hz = spec.sample_rate_hz;
  out.samples.resize(n_out);

  const std::int64_t n_symbols = spec.n_symbols;
  const bool banked = pulse.has_bank();
  parallel_for(n_out, [&](std::int64_t i) {
    // Sample i sits at grid index base*u + phase; symbol base-j contributes
    // the bank row entry for symbol offset j.
    const std::int64_t grid = (i + trim) * d;
    const std::int64_t base = grid / u;
    const std::int64_t phase = grid % u;
    const std::int64_t j_lo = std::max<std::int64_t>(-span, base - (n_symbols - 1));
    const std::int64_t j_hi = std::min<std::int64_t>(span, base);
    std::complex<double> acc{0.0, 0.0};
    if (banked) {
      const double* row = pulse.row(phase);
      for (std::int64_t j = j_lo; j <= j_hi; ++j) {
        acc += symbols[base - j] * row[j + span];
      }
    } else {
      for (std::int64_t j = j_lo; j <= j_hi; ++j) {
        acc += symbols[base - j] * pulse.tap(phase, j);
      }
    }
    out.samples[i] = acc;
  });
  return out;
}

IqBuffer single_pulse(const SignalSpec& spec) {
  validate_spec(spec);
  const auto [u, d] = reduce_clocks(spec.symbol_rate_hz, spec.sample_rate_hz);
  const std::int64_t half_samples = floor_div(std::int64_t(spec.span_symbols) * u, d);
  // Zero tail so echo models can delay the pulse without clipping it.
  const std::int64_t pad = 64 + std::int64_t(std::ceil(spec.sample_rate_hz * 400e-9));

  IqBuffer out;
  out.sample_rate_hz = spec.sample_rate_hz;
  out.samples = Eigen::VectorXcd::Zero(2 * half_samples + 1 + pad);
  for (std::int64_t n = -half_samples; n <= half_samples; ++n) {
    out.samples[n + half_samples] =
        srrc_analytic(spec.rolloff, double(n * d) / double(u));
  }
  return out;
}

IqBuffer apply_freq_offset(const IqBuffer& buf, double freq_offset_hz) {
  require_samples(buf);
  if (freq_offset_hz == 0.0) return buf;
  IqBuffer out;
  out.sample_rate_hz = buf.sample_rate_hz;
  out.samples.resize(buf.samples.size());
  const double step = -2.0 * kPi * freq_offset_hz / buf.sample_rate_hz;
  parallel_for(buf.samples.size(), [&](std::int64_t n) {
    out.samples[n] = buf.samples[n] * std::polar(1.0, step * double(n));
  });
  return out;
}

IqBuffer apply_echo(const IqBuffer& buf, const EchoProfile& profile) {
  require_samples(buf);
  validate_profile(profile);
  const std::int64_t n = buf.samples.size();
  IqBuffer out;
  out.sample_rate_hz = buf.sample_rate_hz;
  out.samples = Eigen::VectorXcd::Zero(n);

  constexpr int kHalf = 31;  // kernel covers j in [-31, 32]
  constexpr double kBeta = 8.0;
  const double i0_beta = std::cyl_bessel_i(0.0, kBeta);

  for (const EchoTap& tap : profile.taps) {
    const double delay_samples = tap.delay_s * buf.sample_rate_hz;
    const std::int64_t nearest = std::llround(delay_samples);
    if (std::abs(delay_samples - double(nearest)) < 1e-9) {
      if (nearest < n) {
        out.samples.tail(n - nearest) += tap.amplitude * buf.samples.head(n - nearest);
      }
      continue;
    }
    const std::int64_t base = std::int64_t(std::floor(delay_samples));
    const double mu = delay_samples - double(base);
    for (int j = -kHalf; j <= kHalf + 1; ++j) {
      const double s = double(j) - mu;
      const double x = s / double(kHalf + 1);
      const double window = std::cyl_bessel_i(0.0, kBeta * std::sqrt(1.0 - x * x)) / i0_beta;
      const double k = tap.amplitude * sinc_pi(s) * window;
      const std::int64_t shift = base + j;
      if (shift >= n || -shift >= n) continue;
      if (shift >= 0) {
        out.samples.tail(n - shift) += k * buf.samples.head(n - shift);
      } else {
        out.samples.head(n + shift) += k * buf.samples.tail(n + shift);
      }
    }
  }
  return out;
}

IqBuffer add_awgn(const IqBuffer& buf, double esno_db, double samples_per_symbol,
                  std::uint64_t seed) {
  require_samples(buf);
  if (std::isinf(esno_db) && esno_db > 0.0) return buf;
  if (!(samples_per_symbol > 0.0)) {
    throw Error(Error::Code::BadConfig, "samples_per_symbol must be positive");
  }
  const std::int64_t n = buf.samples.size();
  const double power = buf.samples.squaredNorm() / double(n);
  const double sigma2 = power * samples_per_symbol * std::pow(10.0, -esno_db / 10.0);
  const double scale = std::sqrt(sigma2 / 2.0);

  IqBuffer out;
  out.sample_rate_hz = buf.sample_rate_hz;
  out.samples.resize(n);
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return double(rng() >> 11) * 0x1.0p-53; };
  for (std::int64_t i = 0; i < n; ++i) {
    // Box-Muller keeps the stream portable across standard libraries.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1)) * scale;
    out.samples[i] = buf.samples[i] +
                     std::complex<double>(r * std::cos(2.0 * kPi * u2),
                                          r * std::sin(2.0 * kPi * u2));
  }
  return out;
}

}  // namespace baudscope
