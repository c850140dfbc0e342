// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#include "baudscope/zcd.hpp"

#include <cmath>

#include "baudscope/spline.hpp"

namespace baudscope {

std::vector<SignChange> find_sign_changes(const Eigen::ArrayXd& acf_real, int count) {
  if (count < 1) {
    throw Error(Error::Code::BadConfig, "crossing count must be >= 1");
  }
  if (acf_real.size() < 2 || !(acf_real[0] > 0.0)) {
    throw Error(Error::Code::DegenerateAcf, "sequence must start with a positive peak");
  }

  std::vector<SignChange> changes;
  changes.reserve(count);
  int sign = 1;
  Eigen::Index pending_zero = -1;
  for (Eigen::Index tau = 1; tau < acf_real.size() && int(changes.size()) < count; ++tau) {
    const double v = acf_real[tau];
    if (v == 0.0) {
      pending_zero = tau;
      continue;
    }
    const int sv = v > 0.0 ? 1 : -1;
    if (sv != sign) {
      SignChange change;
      if (pending_zero >= 0) {
        // The sample sits exactly on the crossing; bracket its neighbours.
        change = {int(pending_zero) - 1, int(pending_zero) + 1, true, int(pending_zero)};
      } else {
        change = {int(tau) - 1, int(tau), false, -1};
      }
      changes.push_back(change);
      sign = sv;
    }
    pending_zero = -1;
  }
  if (int(changes.size()) < count) {
    throw Error(Error::Code::NotEnoughCrossings,
                "found " + std::to_string(changes.size()) + " sign changes, need " +
                    std::to_string(count) + " (max_lag too small or degenerate signal)");
  }
  return changes;
}

double interpolate_linear(double x0, double y0, double x1, double y1) {
  if (y0 * y1 > 0.0) {
    throw Error(Error::Code::NoRootInBracket, "chord endpoints have the same sign");
  }
  if (y0 == y1) {
    throw Error(Error::Code::DegenerateSlope, "chord is flat");
  }
  return x0 + y0 * (x1 - x0) / (y0 - y1);
}

double interpolate_spline(const Eigen::ArrayXd& xs, const Eigen::ArrayXd& ys,
                          double bracket_lo, double bracket_hi) {
  const NotAKnotSpline spline(xs, ys);
  double lo = bracket_lo;
  double hi = bracket_hi;
  double f_lo = spline(lo);
  const double f_hi = spline(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (f_lo * f_hi > 0.0) {
    throw Error(Error::Code::NoRootInBracket, "spline does not change sign in bracket");
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = spline(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<ZeroCrossing> locate_crossings(const AcfEstimate& acf,
                                           const EstimatorConfig& cfg) {
  validate_config(cfg);
  const Eigen::ArrayXd xr = acf.values.real().array();
  const auto changes = find_sign_changes(xr, cfg.max_zero_crossing);

  std::vector<ZeroCrossing> crossings;
  crossings.reserve(changes.size());
  for (std::size_t idx = 0; idx < changes.size(); ++idx) {
    const SignChange& change = changes[idx];
    ZeroCrossing zc;
    zc.index_m = int(idx) + 1;
    zc.bracket = {change.lower, change.upper};

    if (change.exact) {
      // Crossing sits exactly on a sample; the chord degenerates to the
      // lower-adjacent pair, matching the bracket chord's limit.
      zc.location_samples = double(change.exact_lag);
      zc.slope = xr[change.exact_lag] - xr[change.exact_lag - 1];
    } else {
      const int upper = change.upper;
      const int first = upper - cfg.points_before;
      const int last = upper + cfg.points_after - 1;
      if (first < 0 || last >= int(xr.size())) {
        throw Error(Error::Code::NotEnoughCrossings,
                    "interpolation window for crossing " + std::to_string(zc.index_m) +
                        " falls outside the computed lags");
      }
      zc.slope = xr[upper] - xr[upper - 1];
      if (cfg.interpolator == Interpolator::Linear) {
        zc.location_samples =
            interpolate_linear(upper - 1, xr[upper - 1], upper, xr[upper]);
      } else {
        const int count = cfg.points_before + cfg.points_after;
        Eigen::ArrayXd px(count);
        Eigen::ArrayXd py(count);
        for (int i = 0; i < count; ++i) {
          px[i] = first + i;
          py[i] = xr[first + i];
        }
        zc.location_samples = interpolate_spline(px, py, upper - 1, upper);
      }
    }
    crossings.push_back(zc);
  }
  return crossings;
}

double period_from_crossing(const ZeroCrossing& zc) {
  return zc.location_samples / double(zc.index_m);
}

}  // namespace baudscope
