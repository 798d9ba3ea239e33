#pragma once

#include "smflow/grid.hpp"

namespace smflow {

/// Power-law tail model for integration beyond r_max: f ~ coeff * r^{-power}
/// fitted on the last decade of nodes.
struct TailFit {
  double coeff = 0.0;
  double power = 0.0;
  double residual = 0.0;  // rms log-log fit residual
  bool negligible = true; // tail below relative floor; no model used
};

TailFit fit_tail(const RadialGrid& g, const std::vector<double>& f,
                 double rel_floor = 1e-13);

/// [d_r]^{-1} f = -int_r^inf f ds. Tail beyond r_max from the fitted power law
/// (requires power > 1 there). Throws RegimeError when the tail model is
/// unusable (fit residual > tol or non-integrable power).
RadialField dr_inv(const RadialField& f, double tail_tol = 1e-3);
RealField dr_inv(const RealField& f, double tail_tol = 1e-3);

/// [r d_r]^{-1} f = -int_r^inf f(s)/s ds (requires tail power > 0).
RadialField int_rdr_inv(const RadialField& f, double tail_tol = 1e-3);
RealField int_rdr_inv(const RealField& f, double tail_tol = 1e-3);

}  // namespace smflow
