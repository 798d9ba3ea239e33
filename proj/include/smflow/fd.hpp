#pragma once

#include "smflow/grid.hpp"

namespace smflow {

/// d/dr on a log-uniform grid: 4th-order centered stencils in log r,
/// one-sided at the boundaries.
std::vector<double> deriv_r(const RadialGrid& g, const std::vector<double>& f);
std::vector<cplx> deriv_r(const RadialGrid& g, const std::vector<cplx>& f);

/// Second derivative d^2/dr^2 (same stencil family).
std::vector<double> deriv2_r(const RadialGrid& g, const std::vector<double>& f);
std::vector<cplx> deriv2_r(const RadialGrid& g, const std::vector<cplx>& f);

/// Cumulative integral F(r_i) = int_{r_0}^{r_i} f dr, 4th-order (local cubic
/// per cell, computed in log coordinates).
std::vector<double> cumint_r(const RadialGrid& g, const std::vector<double>& f);
std::vector<cplx> cumint_r(const RadialGrid& g, const std::vector<cplx>& f);

/// Uniform-x table with high-order local Lagrange interpolation (8-point).
/// Intended for smooth functions; evaluates value and first derivative.
class SmoothTable {
 public:
  SmoothTable() = default;
  SmoothTable(double x0, double dx, std::vector<double> y);

  double x_min() const { return x0_; }
  double x_max() const { return x0_ + dx_ * double(y_.size() - 1); }
  bool empty() const { return y_.empty(); }
  const std::vector<double>& data() const { return y_; }

  double eval(double x) const;
  /// value and d/dx
  void eval(double x, double& v, double& dv) const;

 private:
  double x0_ = 0, dx_ = 1;
  std::vector<double> y_;
};

/// Natural cubic spline on arbitrary increasing nodes (used for resampling
/// smooth fields; extrapolates with zero beyond the ends after a taper).
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(const std::vector<double>& x, const std::vector<double>& y);
  double eval(double x) const;

 private:
  std::vector<double> x_, y_, m_;  // m_ = second derivatives
};

}  // namespace smflow
