#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "smflow/grid.hpp"

namespace smtest {

using namespace smflow;

/// Adaptive Simpson quadrature (independent oracle for grid quadratures).
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol = 1e-12, int depth = 28) {
  std::function<double(double, double, double, double, double, int)> rec =
      [&](double x0, double x2, double f0, double f1, double f2, int d) {
        const double xm1 = 0.5 * (x0 + 0.5 * (x0 + x2));
        const double xm2 = 0.5 * (0.5 * (x0 + x2) + x2);
        const double fa = f(xm1), fb = f(xm2);
        const double h = x2 - x0;
        const double whole = h / 6.0 * (f0 + 4.0 * f1 + f2);
        const double left = h / 12.0 * (f0 + 4.0 * fa + f1);
        const double right = h / 12.0 * (f1 + 4.0 * fb + f2);
        if (d <= 0 || std::abs(left + right - whole) < 15.0 * tol)
          return left + right + (left + right - whole) / 15.0;
        return rec(x0, 0.5 * (x0 + x2), f0, fa, f1, d - 1) +
               rec(0.5 * (x0 + x2), x2, f1, fb, f2, d - 1);
      };
  const double m = 0.5 * (a + b);
  return rec(a, b, f(a), f(m), f(b), depth);
}

/// Oracle for int_0^inf f(r) r dr via adaptive Simpson in log r.
inline double rdr_integral_oracle(const std::function<double(double)>& f,
                                  double r_min = 1e-7, double r_max = 1e5,
                                  double tol = 1e-12) {
  auto g = [&](double s) {
    const double r = std::exp(s);
    return f(r) * r * r;
  };
  return adaptive_simpson(g, std::log(r_min), std::log(r_max), tol);
}

/// Smooth compactly supported bump centered at c with half-width w.
inline double bump(double r, double c, double w) {
  const double x = (r - c) / w;
  if (x <= -1.0 || x >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - x * x)) * std::exp(1.0);
}

inline double dbump(double r, double c, double w) {
  const double x = (r - c) / w;
  if (x <= -1.0 || x >= 1.0) return 0.0;
  const double q = 1.0 - x * x;
  return bump(r, c, w) * (-2.0 * x / (q * q)) / w;
}

/// Deterministic corpus of smooth bumps in [0.3, 6].
inline std::vector<std::pair<double, double>> bump_corpus(std::size_t n,
                                                          unsigned seed = 42) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uc(std::log(0.5), std::log(4.0));
  std::uniform_real_distribution<double> uw(std::log(0.25), std::log(0.5));
  std::vector<std::pair<double, double>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double c = std::exp(uc(rng));
    out.emplace_back(c, c * std::exp(uw(rng)));
  }
  return out;
}

inline RadialField bump_field(GridPtr g, double c, double w) {
  RadialField f(g);
  for (std::size_t i = 0; i < g->size(); ++i)
    f.values[i] = bump(g->r(i), c, w);
  return f;
}

/// Analytic gaussian bump vanishing like r^2 at the origin; tame derivatives,
/// suitable for transform corpora.
inline double gauss_bump(double r, double c, double w) {
  const double x = (r - c) / w;
  return std::exp(-0.5 * x * x) * r * r / (c * c + r * r);
}

inline RadialField gauss_field(GridPtr g, double c, double w) {
  RadialField f(g);
  for (std::size_t i = 0; i < g->size(); ++i)
    f.values[i] = gauss_bump(g->r(i), c, w);
  return f;
}

}  // namespace smtest
