#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>

#include "microrover/errors.hpp"

namespace microrover {

enum class AxisScale { linear, log };

// Piecewise-linear table over (optionally) logarithmic axes. Knot abscissae
// must be strictly increasing. Evaluation is exact at knots and throws
// DomainError outside [front, back].
class KnotTable {
public:
  KnotTable() = default;

  KnotTable(Eigen::ArrayXd x, Eigen::ArrayXd y, AxisScale x_scale, AxisScale y_scale)
      : x_(std::move(x)), y_(std::move(y)), x_scale_(x_scale), y_scale_(y_scale) {
    validate();
  }

  KnotTable(std::initializer_list<std::pair<double, double>> knots, AxisScale x_scale,
            AxisScale y_scale)
      : x_(static_cast<Eigen::Index>(knots.size())),
        y_(static_cast<Eigen::Index>(knots.size())),
        x_scale_(x_scale),
        y_scale_(y_scale) {
    Eigen::Index i = 0;
    for (const auto& [kx, ky] : knots) {
      x_(i) = kx;
      y_(i) = ky;
      ++i;
    }
    validate();
  }

  const Eigen::ArrayXd& x() const { return x_; }
  const Eigen::ArrayXd& y() const { return y_; }
  Eigen::Index size() const { return x_.size(); }
  double front() const { return x_(0); }
  double back() const { return x_(x_.size() - 1); }

  bool contains(double xq) const { return xq >= front() && xq <= back(); }

  double operator()(double xq) const {
    if (!contains(xq)) {
      throw DomainError("abscissa " + std::to_string(xq) + " outside [" +
                        std::to_string(front()) + ", " + std::to_string(back()) + "]");
    }
    if (x_.size() == 1) return y_(0);
    Eigen::Index hi = 1;
    while (hi < x_.size() - 1 && x_(hi) < xq) ++hi;
    const Eigen::Index lo = hi - 1;
    if (xq == x_(lo)) return y_(lo);
    if (xq == x_(hi)) return y_(hi);

    const double t = (fx(xq) - fx(x_(lo))) / (fx(x_(hi)) - fx(x_(lo)));
    const double v = fy(y_(lo)) + t * (fy(y_(hi)) - fy(y_(lo)));
    return y_scale_ == AxisScale::log ? std::exp(v) : v;
  }

private:
  double fx(double v) const { return x_scale_ == AxisScale::log ? std::log(v) : v; }
  double fy(double v) const { return y_scale_ == AxisScale::log ? std::log(v) : v; }

  void validate() const {
    if (x_.size() < 1 || x_.size() != y_.size()) {
      throw std::invalid_argument("knot table needs matching, non-empty columns");
    }
    for (Eigen::Index i = 1; i < x_.size(); ++i) {
      if (!(x_(i) > x_(i - 1))) throw std::invalid_argument("knots must be strictly increasing");
    }
    if (x_scale_ == AxisScale::log && !(x_(0) > 0.0)) {
      throw std::invalid_argument("log axis requires positive abscissae");
    }
    if (y_scale_ == AxisScale::log && !(y_ > 0.0).all()) {
      throw std::invalid_argument("log axis requires positive ordinates");
    }
  }

  Eigen::ArrayXd x_;
  Eigen::ArrayXd y_;
  AxisScale x_scale_ = AxisScale::linear;
  AxisScale y_scale_ = AxisScale::linear;
};

// Geometric or arithmetic grid of n points spanning [lo, hi].
inline Eigen::ArrayXd make_grid(double lo, double hi, Eigen::Index n, AxisScale scale) {
  if (n < 1) throw std::invalid_argument("grid needs at least one point");
  if (n == 1) return Eigen::ArrayXd::Constant(1, lo);
  if (scale == AxisScale::log) {
    if (!(lo > 0.0 && hi > 0.0)) throw std::invalid_argument("log grid needs positive bounds");
    Eigen::ArrayXd g = Eigen::ArrayXd::LinSpaced(n, std::log(lo), std::log(hi)).exp();
    g(0) = lo;
    g(n - 1) = hi;
    return g;
  }
  return Eigen::ArrayXd::LinSpaced(n, lo, hi);
}

// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("slope fit needs at least two matching points");
  }
  const Eigen::ArrayXd lx = x.log();
  const Eigen::ArrayXd ly = y.log();
  const Eigen::ArrayXd dx = lx - lx.mean();
  return (dx * (ly - ly.mean())).sum() / dx.square().sum();
}

// Bisection in log space for the boundary of a predicate that is false at
// `lo` and true at `hi`. Returns the smallest argument found to satisfy the
// predicate once the bracket is narrower than rel_tol (relative).
template <typename Predicate>
double bisect_boundary_log(Predicate&& pred, double lo, double hi, double rel_tol = 1e-3) {
  if (!(lo > 0.0 && hi > lo)) throw std::invalid_argument("invalid bisection bracket");
  while (hi / lo - 1.0 > rel_tol) {
    const double mid = std::sqrt(lo * hi);
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

// Same, linear space, absolute tolerance.
template <typename Predicate>
double bisect_boundary(Predicate&& pred, double lo, double hi, double abs_tol) {
  if (!(hi > lo)) throw std::invalid_argument("invalid bisection bracket");
  while (hi - lo > abs_tol) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

} // namespace microrover
