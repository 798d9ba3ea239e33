#pragma once

#include <complex>

namespace smflow {

/// Moments M_k = int_0^L t^k e^{i w t} dt, k = 0..3, via stable recursion or
/// Taylor series for small |w L|.
struct FilonMoments {
  std::complex<double> I[4];
  FilonMoments(double L, double w) {
    using C = std::complex<double>;
    const double th = w * L;
    if (std::abs(th) < 0.5) {
      // Taylor: I_k = L^{k+1} sum_n (i th)^n / (n! (k+n+1))
      for (int k = 0; k < 4; ++k) {
        C sum = 0, term = 1;
        for (int n = 0; n < 24; ++n) {
          sum += term / double(k + n + 1);
          term *= C(0, th) / double(n + 1);
          if (std::abs(term) < 1e-20) break;
        }
        double Lk = L;
        for (int j = 0; j < k; ++j) Lk *= L;
        I[k] = Lk * sum;
      }
      return;
    }
    const C iw{0, w};
    const C eL = std::exp(C(0, th));
    I[0] = (eL - 1.0) / iw;
    double Lk = 1.0;
    for (int k = 1; k < 4; ++k) {
      Lk *= L;
      I[k] = (Lk * eL - double(k) * I[k - 1]) / iw;
    }
  }
};

/// Integral over [x1, x2] of A(x) e^{i w x} where A is the cubic through the
/// four samples A(n0), A(n1), A(n2), A(n3) at nodes n0<n1<n2<n3 (the cell
/// [x1,x2] need not coincide with [n1,n2]).
inline std::complex<double> filon_cubic(const double nodes[4],
                                        const std::complex<double> A[4],
                                        double x1, double x2, double w) {
  using C = std::complex<double>;
  // cubic coefficients in t = x - x1 by Lagrange expansion
  C c[4] = {0, 0, 0, 0};
  for (int k = 0; k < 4; ++k) {
    double den = 1;
    double roots[3];
    int idx = 0;
    for (int m = 0; m < 4; ++m)
      if (m != k) {
        den *= (nodes[k] - nodes[m]);
        roots[idx++] = nodes[m] - x1;  // shifted roots
      }
    // basis poly (t-r0)(t-r1)(t-r2)/den
    const double r0 = roots[0], r1 = roots[1], r2 = roots[2];
    const double e1 = r0 + r1 + r2;
    const double e2 = r0 * r1 + r0 * r2 + r1 * r2;
    const double e3 = r0 * r1 * r2;
    const C a = A[k] / den;
    c[3] += a;
    c[2] -= a * e1;
    c[1] += a * e2;
    c[0] -= a * e3;
  }
  FilonMoments M(x2 - x1, w);
  const C phase = std::exp(C(0, w * x1));
  return phase * (c[0] * M.I[0] + c[1] * M.I[1] + c[2] * M.I[2] + c[3] * M.I[3]);
}

}  // namespace smflow
