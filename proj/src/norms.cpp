#include "smflow/norms.hpp"

#include <cmath>

#include "smflow/fd.hpp"
#include "smflow/multipliers.hpp"

namespace smflow {

namespace {
template <typename F>
double h1e_impl(const F& f) {
  const auto& g = *f.grid;
  auto df = deriv_r(g, f.values);
  double s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double m2 = std::norm(cplx(df[i]));
    const double v2 = std::norm(cplx(f.values[i]));
    s += g.w(i) * (m2 + 4.0 * v2 / (g.r(i) * g.r(i)));
  }
  return std::sqrt(s);
}
}  // namespace

double norm_h1e(const RadialField& f) { return h1e_impl(f); }
double norm_h1e(const RealField& f) { return h1e_impl(f); }

double norm_h2e(const RadialField& f) {
  const auto& g = *f.grid;
  auto d1 = deriv_r(g, f.values);
  auto d2 = deriv2_r(g, f.values);
  double s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = g.r(i);
    s += g.w(i) * (std::norm(d2[i]) + std::norm(d1[i]) / (r * r) +
                   std::norm(f.values[i]) / (r * r * r * r));
  }
  return std::sqrt(s);
}

namespace {
BesovResult besov_impl(const Hankel2& ht, const RadialField& f, int k_min,
                       int k_max, double weight_exp) {
  auto g = ht.forward(f);
  const auto& xg = *ht.xi_grid();
  BesovResult out;
  double lo_edge = 0, hi_edge = 0;
  for (int k = k_min; k <= k_max; ++k) {
    double blk = 0;
    for (std::size_t m = 0; m < xg.size(); ++m) {
      const double mk = lpmult::mk(k, xg.r(m));
      if (mk == 0) continue;
      // Plancherel: ||P_k f||_{L2(rdr)}^2 = int |m_k F2 f|^2 xi dxi
      blk += xg.w(m) * mk * mk * std::norm(g.values[m]);
    }
    const double term = std::pow(2.0, weight_exp * k) * std::sqrt(blk);
    out.value += term;
    if (k <= k_min + 1) lo_edge += term;
    if (k >= k_max - 1) hi_edge += term;
  }
  out.boundary_fraction = out.value > 0 ? (lo_edge + hi_edge) / out.value : 0.0;
  out.range_ok = out.boundary_fraction <= 0.01;
  return out;
}
}  // namespace

BesovResult norm_LX(const Hankel2& ht, const RadialField& f, int k_min, int k_max) {
  return besov_impl(ht, f, k_min, k_max, 0.0);
}
BesovResult norm_X(const Hankel2& ht, const RadialField& f, int k_min, int k_max) {
  return besov_impl(ht, f, k_min, k_max, 1.0);
}

RadialField bessel_block(const Hankel2& ht, const RadialField& f, int k) {
  auto g = ht.forward(f);
  const auto& xg = *ht.xi_grid();
  for (std::size_t m = 0; m < xg.size(); ++m)
    g.values[m] *= lpmult::mk(k, xg.r(m));
  return ht.inverse(g);
}

}  // namespace smflow
