#include "smflow/ops.hpp"

#include <cmath>

#include "smflow/fd.hpp"

namespace smflow {

TailFit fit_tail(const RadialGrid& g, const std::vector<double>& f,
                 double rel_floor) {
  TailFit out;
  const std::size_t n = g.size();
  double fmax = 0;
  for (double v : f) fmax = std::max(fmax, std::abs(v));
  if (fmax == 0) return out;

  // last decade of nodes
  std::size_t i0 = g.locate(g.r_max() / 10.0);
  if (i0 + 8 > n) i0 = n - 8;
  double tmax = 0;
  for (std::size_t i = i0; i < n; ++i) tmax = std::max(tmax, std::abs(f[i]));
  if (tmax <= rel_floor * fmax) return out;  // effectively compactly supported

  // sign must be constant for a log-log fit
  const double sgn = f[n - 1] >= 0 ? 1.0 : -1.0;
  std::size_t cnt = 0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = i0; i < n; ++i) {
    if (sgn * f[i] <= 0) continue;
    const double x = std::log(g.r(i)), y = std::log(sgn * f[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++cnt;
  }
  if (cnt < 6) {
    out.negligible = false;
    out.residual = 1e9;  // sign changes in the tail: no power model
    return out;
  }
  const double det = cnt * sxx - sx * sx;
  const double slope = (cnt * sxy - sx * sy) / det;
  const double inter = (sy - slope * sx) / cnt;
  double rss = 0;
  for (std::size_t i = i0; i < n; ++i) {
    if (sgn * f[i] <= 0) continue;
    const double x = std::log(g.r(i)), y = std::log(sgn * f[i]);
    const double e = y - (slope * x + inter);
    rss += e * e;
  }
  out.negligible = false;
  out.power = -slope;
  out.coeff = sgn * std::exp(inter);
  out.residual = std::sqrt(rss / double(cnt));
  return out;
}

namespace {

// shared implementation: result(r) = -(int_r^rmax f q ds + tail), q(s)=1 or 1/s
template <typename T>
std::vector<T> inv_impl(const RadialGrid& g, const std::vector<T>& f,
                        bool over_s, double tail_tol) {
  const std::size_t n = g.size();
  // tail model from |parts|
  auto tail_of = [&](const std::vector<double>& part) -> double {
    TailFit tf = fit_tail(g, part);
    if (tf.negligible) return 0.0;
    if (tf.residual > tail_tol)
      throw RegimeError("dr_inv: non-convergent tail (power-law fit residual " +
                        std::to_string(tf.residual) + ")");
    const double pmin = over_s ? 1e-6 : 1.0 + 1e-6;
    if (tf.power < pmin)
      throw RegimeError("dr_inv: tail decays too slowly for convergence");
    const double R = g.r_max();
    // int_R^inf c s^{-p} q(s) ds
    return over_s ? tf.coeff * std::pow(R, -tf.power) / tf.power
                  : tf.coeff * std::pow(R, 1.0 - tf.power) / (tf.power - 1.0);
  };

  std::vector<T> integrand(f);
  if (over_s)
    for (std::size_t i = 0; i < n; ++i) integrand[i] /= g.r(i);

  T tail;
  if constexpr (std::is_same_v<T, cplx>) {
    std::vector<double> re(n), im(n);
    for (std::size_t i = 0; i < n; ++i) { re[i] = f[i].real(); im[i] = f[i].imag(); }
    tail = cplx(tail_of(re), tail_of(im));
  } else {
    tail = tail_of(f);
  }

  auto F = cumint_r(g, integrand);  // F(r_i) = int_{rmin}^{r_i}
  const T total = F[n - 1];
  std::vector<T> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = -((total - F[i]) + tail);
  return out;
}

}  // namespace

RadialField dr_inv(const RadialField& f, double tail_tol) {
  return {f.grid, inv_impl(*f.grid, f.values, false, tail_tol)};
}
RealField dr_inv(const RealField& f, double tail_tol) {
  return {f.grid, inv_impl(*f.grid, f.values, false, tail_tol)};
}
RadialField int_rdr_inv(const RadialField& f, double tail_tol) {
  return {f.grid, inv_impl(*f.grid, f.values, true, tail_tol)};
}
RealField int_rdr_inv(const RealField& f, double tail_tol) {
  return {f.grid, inv_impl(*f.grid, f.values, true, tail_tol)};
}

}  // namespace smflow
