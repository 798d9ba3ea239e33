#pragma once

#include <complex>

namespace smflow {

/// Integral of a linearly interpolated amplitude against e^{i w x} over
/// [x1, x2]:  int (A1 + (A2-A1)(x-x1)/(x2-x1)) e^{i w x} dx.
inline std::complex<double> filon_cell(std::complex<double> A1,
                                       std::complex<double> A2, double x1,
                                       double x2, double w) {
  using C = std::complex<double>;
  const double L = x2 - x1;
  const C e1 = std::exp(C(0, w * x1));
  const double th = w * L;
  if (std::abs(th) < 1e-4) {
    // 3-term Taylor in th, stable for small phase increments
    const C i{0, 1};
    return e1 * L *
           ((A1 + A2) * 0.5 + i * th * (A1 + 2.0 * A2) / 6.0 -
            th * th * (A1 + 3.0 * A2) / 24.0);
  }
  const C iw{0, w};
  const C eL = std::exp(C(0, th));
  const C I0 = (eL - 1.0) / iw;
  const C I1 = L * eL / iw - (eL - 1.0) / (iw * iw);
  return e1 * (A1 * I0 + (A2 - A1) / L * I1);
}

}  // namespace smflow
