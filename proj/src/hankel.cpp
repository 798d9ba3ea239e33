#include "smflow/hankel.hpp"

#include <cmath>
#include <utility>

#include "smflow/fd.hpp"
#include "smflow/oscquad2.hpp"
#include "smflow/threads.hpp"

namespace smflow {

namespace {
constexpr double kYSplit = 10.0;  // J2 asymptotics are ~1e-10 beyond this
constexpr int kRefine = 4;        // input resampling factor

double j2(double x) { return std::cyl_bessel_j(2.0, x); }

// J2(x) = Re[ amp(x) e^{i x} ] for x >~ 10 (Hankel's asymptotic P/Q series).
cplx asym_amp(double x) {
  const double mu = 16.0;
  double P = 0, Q = 0, a = 1.0;
  const double ix = 1.0 / (8.0 * x);
  double prev = 1e300;
  for (int n = 0; n < 24; ++n) {
    if (std::abs(a) > prev) break;
    prev = std::abs(a);
    const int q = n / 2;
    const double sgn = (q % 2 == 0) ? 1.0 : -1.0;
    if (n % 2 == 0) P += sgn * a; else Q += sgn * a;
    a *= (mu - double((2 * n + 1) * (2 * n + 1))) * ix / double(n + 1);
  }
  return std::sqrt(2.0 / (M_PI * x)) * cplx(P, Q) *
         std::exp(cplx(0, -5.0 * M_PI / 4.0));
}

// One direction of the transform: out(y_j) = int in(x) J2(x y_j) x dx.
// in lives on the log-uniform axis `src`; the integral is evaluated on a
// kRefine-times finer axis with spline-resampled input.
std::vector<cplx> apply_j2(const RadialGrid& src, const std::vector<cplx>& in,
                           const RadialGrid& dst) {
  const std::size_t n = src.size();
  const std::size_t nf = (n - 1) * kRefine + 1;
  const double hf = src.hlog() / kRefine;
  const double s0 = std::log(src.r_min());

  // resample input onto the fine axis (cubic spline in log x)
  std::vector<double> sx(n), re(n), im(n);
  for (std::size_t i = 0; i < n; ++i) {
    sx[i] = std::log(src.r(i));
    re[i] = in[i].real();
    im[i] = in[i].imag();
  }
  CubicSpline sre(sx, re), sim(sx, im);
  std::vector<double> xf(nf);
  std::vector<cplx> vf(nf);
  for (std::size_t k = 0; k < nf; ++k) {
    const double s = s0 + hf * double(k);
    xf[k] = std::exp(s);
    vf[k] = (k % kRefine == 0) ? in[k / kRefine]
                               : cplx(sre.eval(s), sim.eval(s));
  }

  std::vector<cplx> out(dst.size());
  parallel_for(dst.size(), [&](std::size_t j) {
    const double y = dst.r(j);
    const double xsplit = kYSplit / y;
    // --- smooth region: Simpson in log x of in * J2 * x^2 over xf <= xsplit
    std::size_t L = 0;
    while (L < nf && xf[L] <= xsplit) ++L;
    cplx acc = 0;
    if (L >= 3) {
      const std::size_t nlast = L - 1;
      const std::size_t m = (nlast % 2 == 0) ? nlast : nlast - 1;
      for (std::size_t i = 0; i + 2 <= m; i += 2) {
        const cplx v0 = vf[i] * j2(xf[i] * y) * xf[i] * xf[i];
        const cplx v1 = vf[i + 1] * j2(xf[i + 1] * y) * xf[i + 1] * xf[i + 1];
        const cplx v2 = vf[i + 2] * j2(xf[i + 2] * y) * xf[i + 2] * xf[i + 2];
        acc += (v0 + 4.0 * v1 + v2) * (hf / 3.0);
      }
      if (nlast % 2 == 1) {
        const cplx va = vf[nlast - 1] * j2(xf[nlast - 1] * y) * xf[nlast - 1] * xf[nlast - 1];
        const cplx vb = vf[nlast] * j2(xf[nlast] * y) * xf[nlast] * xf[nlast];
        acc += 0.5 * hf * (va + vb);
      }
    } else if (L > 0) {
      for (std::size_t i = 0; i + 1 < L; ++i) {
        const cplx va = vf[i] * j2(xf[i] * y) * xf[i] * xf[i];
        const cplx vb = vf[i + 1] * j2(xf[i + 1] * y) * xf[i + 1] * xf[i + 1];
        acc += 0.5 * hf * (va + vb);
      }
    }
    // partial smooth cell [x_{L-1}, min(xsplit, x_max)] in plain x
    if (L > 0 && L < nf) {
      const double b = std::min(xsplit, xf[nf - 1]);
      const double a = xf[L - 1];
      if (b > a) {
        const double t = (b - a) / (xf[L] - a);
        const cplx fb = vf[L - 1] + (vf[L] - vf[L - 1]) * t;
        acc += 0.5 * (b - a) *
               (vf[L - 1] * j2(a * y) * a + fb * j2(b * y) * b);
      }
    }
    // --- oscillatory region: cubic-amplitude Filon over fine cells
    if (xsplit < xf[nf - 1]) {
      std::size_t c0 = (L == 0) ? 0 : L - 1;
      for (std::size_t c = c0; c + 1 < nf; ++c) {
        double x1 = xf[c], x2 = xf[c + 1];
        if (x2 <= xsplit) continue;
        // stencil nodes c-1..c+2 clamped
        std::size_t b0 = (c == 0) ? 0 : c - 1;
        if (b0 + 3 >= nf) b0 = nf - 4;
        double nodes[4];
        cplx Ap[4], Am[4];
        for (int k = 0; k < 4; ++k) {
          const std::size_t idx = b0 + std::size_t(k);
          nodes[k] = xf[idx];
          const double xval = std::max(xf[idx] * y, 1.0);  // amp arg guard
          const cplx amp = asym_amp(xval);
          const cplx base = 0.5 * vf[idx] * xf[idx];
          Ap[k] = amp * base;
          Am[k] = std::conj(amp) * base;
        }
        const double lo = std::max(x1, xsplit);
        acc += filon_cubic(nodes, Ap, lo, x2, y) +
               filon_cubic(nodes, Am, lo, x2, -y);
      }
    }
    out[j] = acc;
  });
  return out;
}
}  // namespace

Hankel2::Hankel2(GridPtr r_grid, GridPtr xi_grid) : rg_(std::move(r_grid)) {
  if (xi_grid) {
    xg_ = std::move(xi_grid);
  } else {
    const std::size_t n = 28 * 64 + 1;
    xg_ = RadialGrid::make_log(std::pow(2.0, -14), std::pow(2.0, 14), n);
  }
  if (!rg_->log_uniform() || !xg_->log_uniform())
    throw SmflowError("Hankel2: log-uniform grids required");
}

SpectralField Hankel2::forward(const RadialField& f) const {
  if (f.grid != rg_) throw SmflowError("Hankel2::forward: wrong grid");
  SpectralField g(xg_);
  g.values = apply_j2(*rg_, f.values, *xg_);
  return g;
}

RadialField Hankel2::inverse(const SpectralField& g) const {
  if (g.grid != xg_) throw SmflowError("Hankel2::inverse: wrong grid");
  RadialField f(rg_);
  f.values = apply_j2(*xg_, g.values, *rg_);
  return f;
}

double Hankel2::band_edge_fraction(const SpectralField& g) const {
  double total = 0, top = 0;
  const double edge = xg_->r_max() / 2.0;
  for (std::size_t m = 0; m < g.size(); ++m) {
    const double c = xg_->w(m) * std::norm(g.values[m]);  // xi dxi weights
    total += c;
    if (xg_->r(m) >= edge) top += c;
  }
  return total > 0 ? top / total : 0.0;
}

}  // namespace smflow
