#pragma once

#include <cmath>

namespace smflow {

/// Smooth dyadic partition of unity on (0, inf):
///   m_k(xi) = step(xi / 2^k) - step(xi / 2^{k-1}),  sum_k m_k = 1,
/// where step rises smoothly from 0 to 1 across [1, sqrt 2] in xi (so m_k is
/// supported in (2^{k-1}, 2^{k+1/2}) with a plateau).
namespace lpmult {

inline double smooth01(double y) {
  // C^inf monotone 0->1 on [0,1]
  if (y <= 0) return 0.0;
  if (y >= 1) return 1.0;
  const double a = std::exp(-1.0 / y), b = std::exp(-1.0 / (1.0 - y));
  return a / (a + b);
}

inline double step(double x) {
  if (x <= 1.0) return 0.0;
  return smooth01(std::log2(x) / 0.5);
}

/// m_k(xi): localized at xi ~ 2^k, supported in (2^{k-1}, 2^{k+1/2})
inline double mk(int k, double xi) {
  const double x = xi / std::pow(2.0, double(k));
  return step(2.0 * x) - step(x);
}

/// fattened multiplier with mk_tilde * mk = mk
inline double mk_tilde(int k, double xi) {
  const double x = xi / std::pow(2.0, double(k));
  return step(4.0 * x) - step(x / 2.0);
}

/// low-pass: sum_{j <= k} m_j = step(2 xi / 2^k) ... telescoping
inline double m_le(int k, double xi) {
  const double x = xi / std::pow(2.0, double(k));
  return 1.0 - step(x);
}

}  // namespace lpmult
}  // namespace smflow
