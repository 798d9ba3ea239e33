#include "smflow/fd.hpp"

#include <array>
#include <cmath>

namespace smflow {
namespace {

// 4th-order first-derivative stencils on a uniform grid, offsets relative to i.
// centered: (-2,-1,1,2); boundary rows use one-sided 5-point stencils.
template <typename T>
std::vector<T> d1_uniform(const std::vector<T>& f, double h) {
  const std::size_t n = f.size();
  std::vector<T> d(n);
  for (std::size_t i = 2; i + 2 < n; ++i)
    d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
  auto one_sided = [&](std::size_t i, int dir) {
    // 5-point one-sided, error O(h^4)
    const double c0 = -25.0 / 12, c1 = 4.0, c2 = -3.0, c3 = 4.0 / 3, c4 = -1.0 / 4;
    T v = c0 * f[i] + c1 * f[i + dir] + c2 * f[i + 2 * dir] + c3 * f[i + 3 * dir] +
          c4 * f[i + 4 * dir];
    return v * (double(dir) / h);
  };
  d[0] = one_sided(0, +1);
  d[1] = one_sided(1, +1);
  d[n - 2] = one_sided(n - 2, -1);
  d[n - 1] = one_sided(n - 1, -1);
  return d;
}

template <typename T>
std::vector<T> d2_uniform(const std::vector<T>& f, double h) {
  const std::size_t n = f.size();
  std::vector<T> d(n);
  for (std::size_t i = 2; i + 2 < n; ++i)
    d[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) /
           (12.0 * h * h);
  auto one_sided = [&](std::size_t i, int dir) {
    // 6-point one-sided second derivative, O(h^4)
    const double c[6] = {15.0 / 4, -77.0 / 6, 107.0 / 6, -13.0, 61.0 / 12, -5.0 / 6};
    T v = 0;
    for (int k = 0; k < 6; ++k) v += c[k] * f[i + k * dir];
    return v / (h * h);
  };
  d[0] = one_sided(0, +1);
  d[1] = one_sided(1, +1);
  d[n - 2] = one_sided(n - 2, -1);
  d[n - 1] = one_sided(n - 1, -1);
  return d;
}

template <typename T>
std::vector<T> deriv_r_impl(const RadialGrid& g, const std::vector<T>& f) {
  if (!g.log_uniform()) throw SmflowError("deriv_r: grid must be log-uniform");
  auto ds = d1_uniform(f, g.hlog());
  for (std::size_t i = 0; i < ds.size(); ++i) ds[i] /= g.r(i);
  return ds;
}

template <typename T>
std::vector<T> deriv2_r_impl(const RadialGrid& g, const std::vector<T>& f) {
  // f'' = (f_ss - f_s)/r^2 in s = log r
  if (!g.log_uniform()) throw SmflowError("deriv2_r: grid must be log-uniform");
  auto d1 = d1_uniform(f, g.hlog());
  auto d2 = d2_uniform(f, g.hlog());
  std::vector<T> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    out[i] = (d2[i] - d1[i]) / (g.r(i) * g.r(i));
  return out;
}

// cumulative integral of g(s) ds on a uniform grid, 4th order:
// per cell integrate the cubic through the 4 nearest samples.
template <typename T>
std::vector<T> cum_uniform(const std::vector<T>& f, double h) {
  const std::size_t n = f.size();
  std::vector<T> F(n);
  F[0] = T(0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t j = (i == 0) ? 0 : (i + 2 < n ? i - 1 : n - 4);
    const T a = f[j], b = f[j + 1], c = f[j + 2], d = f[j + 3];
    // integral over [x_i, x_{i+1}] of the cubic through points j..j+3
    double t0 = double(i - j);  // cell start in units of h relative to x_j
    auto cellint = [&](double t1, double t2) {
      // Lagrange basis integrals on [t1,t2] for nodes 0,1,2,3
      auto I = [&](int k) {
        // integrate prod_{m != k} (t - m)/(k - m) dt
        // expand cubic: do it numerically exactly via coefficients
        double denom = 1;
        std::array<double, 4> roots{};
        int idx = 0;
        for (int m = 0; m < 4; ++m)
          if (m != k) {
            denom *= (k - m);
            roots[idx++] = m;
          }
        // p(t) = (t-r0)(t-r1)(t-r2) = t^3 - e1 t^2 + e2 t - e3
        double r0 = roots[0], r1 = roots[1], r2 = roots[2];
        double e1 = r0 + r1 + r2, e2 = r0 * r1 + r0 * r2 + r1 * r2, e3 = r0 * r1 * r2;
        auto P = [&](double t) {
          return t * t * t * t / 4 - e1 * t * t * t / 3 + e2 * t * t / 2 - e3 * t;
        };
        return (P(t2) - P(t1)) / denom;
      };
      return I(0) * a + I(1) * b + I(2) * c + I(3) * d;
    };
    F[i + 1] = F[i] + cellint(t0, t0 + 1.0) * h;
  }
  return F;
}

}  // namespace

std::vector<double> deriv_r(const RadialGrid& g, const std::vector<double>& f) {
  return deriv_r_impl(g, f);
}
std::vector<cplx> deriv_r(const RadialGrid& g, const std::vector<cplx>& f) {
  return deriv_r_impl(g, f);
}
std::vector<double> deriv2_r(const RadialGrid& g, const std::vector<double>& f) {
  return deriv2_r_impl(g, f);
}
std::vector<cplx> deriv2_r(const RadialGrid& g, const std::vector<cplx>& f) {
  return deriv2_r_impl(g, f);
}

std::vector<double> cumint_r(const RadialGrid& g, const std::vector<double>& f) {
  if (!g.log_uniform()) throw SmflowError("cumint_r: grid must be log-uniform");
  std::vector<double> gs(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) gs[i] = f[i] * g.r(i);  // dr = r ds
  return cum_uniform(gs, g.hlog());
}
std::vector<cplx> cumint_r(const RadialGrid& g, const std::vector<cplx>& f) {
  if (!g.log_uniform()) throw SmflowError("cumint_r: grid must be log-uniform");
  std::vector<cplx> gs(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) gs[i] = f[i] * g.r(i);
  return cum_uniform(gs, g.hlog());
}

SmoothTable::SmoothTable(double x0, double dx, std::vector<double> y)
    : x0_(x0), dx_(dx), y_(std::move(y)) {
  if (y_.size() < 8) throw SmflowError("SmoothTable: need >= 8 samples");
}

namespace {
// 8-point Lagrange value and derivative at local coordinate t in [0, 7]
void lagrange8(const double* y, double t, double& v, double& dv) {
  double L[8], dL[8];
  for (int k = 0; k < 8; ++k) {
    double num = 1, den = 1, dnum = 0;
    for (int m = 0; m < 8; ++m) {
      if (m == k) continue;
      den *= (k - m);
    }
    // num(t) = prod (t - m); dnum via sum of leave-one-out products
    for (int m = 0; m < 8; ++m) {
      if (m == k) continue;
      double prod = 1;
      for (int mm = 0; mm < 8; ++mm) {
        if (mm == k || mm == m) continue;
        prod *= (t - mm);
      }
      dnum += prod;
      num *= (t - m);
    }
    L[k] = num / den;
    dL[k] = dnum / den;
  }
  v = 0;
  dv = 0;
  for (int k = 0; k < 8; ++k) {
    v += L[k] * y[k];
    dv += dL[k] * y[k];
  }
}
}  // namespace

double SmoothTable::eval(double x) const {
  double v, dv;
  eval(x, v, dv);
  return v;
}

void SmoothTable::eval(double x, double& v, double& dv) const {
  const std::size_t n = y_.size();
  double u = (x - x0_) / dx_;
  if (u < 0) u = 0;
  if (u > double(n - 1)) u = double(n - 1);
  long j = long(u) - 3;
  if (j < 0) j = 0;
  if (j > long(n) - 8) j = long(n) - 8;
  lagrange8(&y_[std::size_t(j)], u - double(j), v, dv);
  dv /= dx_;
}

CubicSpline::CubicSpline(const std::vector<double>& x, const std::vector<double>& y)
    : x_(x), y_(y) {
  const std::size_t n = x.size();
  if (n < 3 || y.size() != n) throw SmflowError("CubicSpline: bad input");
  m_.assign(n, 0.0);
  std::vector<double> a(n, 0), b(n, 0), c(n, 0), d(n, 0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    double hi = x[i] - x[i - 1], hi1 = x[i + 1] - x[i];
    a[i] = hi / 6;
    b[i] = (hi + hi1) / 3;
    c[i] = hi1 / 6;
    d[i] = (y[i + 1] - y[i]) / hi1 - (y[i] - y[i - 1]) / hi;
  }
  b[0] = b[n - 1] = 1;  // natural
  // Thomas
  for (std::size_t i = 1; i < n; ++i) {
    double w = a[i] / b[i - 1];
    b[i] -= w * c[i - 1];
    d[i] -= w * d[i - 1];
  }
  m_[n - 1] = d[n - 1] / b[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) m_[i] = (d[i] - c[i] * m_[i + 1]) / b[i];
}

double CubicSpline::eval(double x) const {
  const std::size_t n = x_.size();
  if (x <= x_.front() || x >= x_.back()) {
    if (x == x_.front()) return y_.front();
    if (x == x_.back()) return y_.back();
    return 0.0;  // fields decay; extrapolate by zero
  }
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t i = std::size_t(it - x_.begin());
  double h = x_[i] - x_[i - 1];
  double A = (x_[i] - x) / h, B = (x - x_[i - 1]) / h;
  return A * y_[i - 1] + B * y_[i] +
         ((A * A * A - A) * m_[i - 1] + (B * B * B - B) * m_[i]) * h * h / 6;
}

}  // namespace smflow
