#pragma once

#include "smflow/hankel.hpp"

namespace smflow {

/// || f ||_{H1e}^2 = ||d_r f||^2 + 4 ||f/r||^2 (L2(r dr)).
double norm_h1e(const RadialField& f);
double norm_h1e(const RealField& f);

/// || f ||_{H2e}^2 = ||d_r^2 f||^2 + ||d_r f / r||^2 + ||f/r^2||^2.
double norm_h2e(const RadialField& f);

struct BesovResult {
  double value = 0.0;
  double boundary_fraction = 0.0;  // share of the sum in the edge blocks
  bool range_ok = true;            // boundary blocks carry <= 1% of the sum
};

/// l^1 Besov norms in the order-2 Hankel (Bessel) frame over dyadic blocks
/// k in [k_min, k_max]:
///   norm_LX: sum_k ||P_k^e f||_{L2}      (B^0_{2,1,e})
///   norm_X : sum_k 2^k ||P_k^e f||_{L2}  (B^1_{2,1,e})
BesovResult norm_LX(const Hankel2& ht, const RadialField& f, int k_min = -12,
                    int k_max = 12);
BesovResult norm_X(const Hankel2& ht, const RadialField& f, int k_min = -12,
                   int k_max = 12);

/// Bessel-frame dyadic block P_k^e f = F2^{-1}(m_k F2 f).
RadialField bessel_block(const Hankel2& ht, const RadialField& f, int k);

}  // namespace smflow
