// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 baudscope contributors

#include "baudscope/spline.hpp"

#include <algorithm>

#include "baudscope/errors.hpp"

namespace baudscope {

NotAKnotSpline::NotAKnotSpline(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y)
    : x_(x), y_(y) {
  const Eigen::Index n = x.size();
  if (n < 4 || y.size() != n) {
    throw Error(Error::Code::BadConfig, "not-a-knot spline needs >= 4 knots");
  }
  for (Eigen::Index i = 1; i < n; ++i) {
    if (!(x[i] > x[i - 1])) {
      throw Error(Error::Code::BadConfig, "spline knots must be strictly increasing");
    }
  }

  const Eigen::ArrayXd h = x.tail(n - 1) - x.head(n - 1);

  // Solve for the second derivatives M. Interior rows are the usual
  // continuity conditions; the end rows enforce third-derivative continuity
  // at the second and penultimate knots.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);

  A(0, 0) = -h[1];
  A(0, 1) = h[0] + h[1];
  A(0, 2) = -h[0];
  for (Eigen::Index i = 1; i < n - 1; ++i) {
    A(i, i - 1) = h[i - 1] / 6.0;
    A(i, i) = (h[i - 1] + h[i]) / 3.0;
    A(i, i + 1) = h[i] / 6.0;
    b[i] = (y[i + 1] - y[i]) / h[i] - (y[i] - y[i - 1]) / h[i - 1];
  }
  A(n - 1, n - 3) = -h[n - 2];
  A(n - 1, n - 2) = h[n - 3] + h[n - 2];
  A(n - 1, n - 1) = -h[n - 3];

  m_ = A.partialPivLu().solve(b).array();
}

double NotAKnotSpline::operator()(double x) const {
  const Eigen::Index n = x_.size();
  Eigen::Index i = std::upper_bound(x_.data(), x_.data() + n, x) - x_.data() - 1;
  i = std::clamp<Eigen::Index>(i, 0, n - 2);

  const double h = x_[i + 1] - x_[i];
  const double lo = x_[i + 1] - x;
  const double hi = x - x_[i];
  return m_[i] * lo * lo * lo / (6.0 * h) + m_[i + 1] * hi * hi * hi / (6.0 * h) +
         (y_[i] - m_[i] * h * h / 6.0) * lo / h +
         (y_[i + 1] - m_[i + 1] * h * h / 6.0) * hi / h;
}

}  // namespace baudscope
