#include "smflow/special.hpp"

#include <cmath>

#include "smflow/fd.hpp"

namespace smflow {

double h1(double r) {
  const double r2 = r * r;
  if (r > 1e4) {
    const double ir2 = 1.0 / r2;
    return 2.0 * ir2 / (1.0 + ir2 * ir2);
  }
  return 2.0 * r2 / (r2 * r2 + 1.0);
}

double h3(double r) {
  const double r4 = r * r * r * r;
  if (r > 1e4) {
    const double ir4 = 1.0 / r4;
    return (1.0 - ir4) / (1.0 + ir4);
  }
  return (r4 - 1.0) / (r4 + 1.0);
}

double dh1(double r) { return r > 0 ? -2.0 * h1(r) * h3(r) / r : 0.0; }
double dh3(double r) {
  if (r == 0) return 0.0;
  const double h = h1(r);
  return 2.0 * h * h / r;
}

double V_H(double r) {
  const double h = h1(r);
  return 4.0 * (1.0 - 2.0 * h * h) / (r * r);
}

double V_Ht(double r) { return (5.0 - 4.0 * h3(r)) / (r * r); }

double V_L(double r) {
  const double r2 = r * r, q = 1.0 + r2 * r2;
  return 15.0 / (4.0 * r2) - 32.0 * r2 / (q * q);
}

double theta0(double r) {
  const double r2 = r * r, r4 = r2 * r2;
  return (-r4 * r4 + r4 - 8.0 * r4 * std::log(r) + 1.0) / (8.0 * (r4 * r2 + r2));
}

double dtheta0(double r) {
  const double r2 = r * r, r4 = r2 * r2;
  const double num = -r4 * r4 + r4 - 8.0 * r4 * std::log(r) + 1.0;
  const double dnum = -8.0 * r4 * r2 * r + 4.0 * r2 * r - 8.0 * (4.0 * r2 * r * std::log(r) + r2 * r);
  const double den = 8.0 * (r4 * r2 + r2);
  const double dden = 8.0 * (6.0 * r4 * r + 2.0 * r);
  return (dnum * den - num * dden) / (den * den);
}

double psi0(double r) {
  if (r < 0.7) {
    // psi0 = sum_{k>=1} (-1)^k r^{4k-1} / (4k^2 - 1)
    double s = 0.0, r4 = r * r * r * r, p = r * r * r;
    double sign = -1.0;
    for (int k = 1; k <= 40; ++k) {
      const double term = sign * p / (4.0 * k * k - 1.0);
      s += term;
      if (std::abs(term) < 1e-18 * (std::abs(s) + 1e-300)) break;
      p *= r4;
      sign = -sign;
    }
    return s;
  }
  const double r2 = r * r, r3 = r2 * r, r4 = r2 * r2;
  return (r2 - (1.0 + r4) * std::atan(r2)) / (2.0 * r3);
}

double phi1_closed(double u) {
  // -(2u^2 Ti(u) + (u^4-1) arctan u - 3u^3 + u) / (8(u^4+u^2)),
  // Ti(u) = int_0^u 2 arctan(x)/x dx, by series for u<=1 and the inversion
  // Ti(u) = Ti(1/u)... use adaptive Simpson otherwise (test-grade accuracy).
  auto Ti = [](double u) {
    if (u <= 1.0) {
      // 2*sum (-1)^k u^{2k+1}/(2k+1)^2
      double s = 0, p = u;
      for (int k = 0; k < 200; ++k) {
        const double t = (k % 2 ? -2.0 : 2.0) * p / ((2 * k + 1.0) * (2 * k + 1.0));
        s += t;
        if (std::abs(t) < 1e-18) break;
        p *= u * u;
      }
      return s;
    }
    // Ti2(u) - Ti2(1/u) = (pi/2) log u for the inverse tangent integral Ti2;
    // here Ti(u) = 2 Ti2(u).
    double s = 0, p = 1.0 / u;
    for (int k = 0; k < 200; ++k) {
      const double t = (k % 2 ? -2.0 : 2.0) * p / ((2 * k + 1.0) * (2 * k + 1.0));
      s += t;
      if (std::abs(t) < 1e-18) break;
      p /= u * u;
    }
    return s + M_PI * std::log(u);
  };
  if (u < 1e-8) return -u / 6.0;
  const double u2 = u * u, u4 = u2 * u2;
  return -(2.0 * u2 * Ti(u) + (u4 - 1.0) * std::atan(u) - 3.0 * u2 * u + u) /
         (8.0 * (u4 + u2));
}

S2Profile soliton_profile(const SolitonParams& p, GridPtr grid) {
  if (!(p.lambda > 0)) throw SmflowError("soliton_profile: lambda must be > 0");
  S2Profile u(std::move(grid));
  const double c = std::cos(2.0 * p.alpha), s = std::sin(2.0 * p.alpha);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double lr = p.lambda * u.grid->r(i);
    const double a = h1(lr), b = h3(lr);
    u.values[i] = Vec3{a * c, a * s, b};
  }
  return u;
}

double energy(const S2Profile& u) {
  if (u.unit_defect() > 1e-6)
    throw RegimeError("energy: profile is not unit-norm");
  const auto& g = *u.grid;
  std::vector<double> ux(g.size()), uy(g.size()), uz(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    ux[i] = u.values[i].x;
    uy[i] = u.values[i].y;
    uz[i] = u.values[i].z;
  }
  auto dx = deriv_r(g, ux), dy = deriv_r(g, uy), dz = deriv_r(g, uz);
  double s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double grad2 = dx[i] * dx[i] + dy[i] * dy[i] + dz[i] * dz[i];
    const double ang = 4.0 * (ux[i] * ux[i] + uy[i] * uy[i]) / (g.r(i) * g.r(i));
    s += g.w(i) * (grad2 + ang);
  }
  return M_PI * s;
}

namespace {
double bump01(double x) {
  // exp(-1/(1-x^2)) on (-1,1), zero outside
  if (x <= -1.0 || x >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - x * x));
}
}  // namespace

double kappa_default(double r) {
  if (r <= 0) return 0.0;
  return bump01(2.0 * std::log2(r) - 1.0);
}

double phi_bump(double r) {
  if (r <= 0) return 0.0;
  return bump01(std::log2(r));
}

}  // namespace smflow
