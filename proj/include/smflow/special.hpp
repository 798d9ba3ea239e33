#pragma once

#include "smflow/grid.hpp"

namespace smflow {

// Ground-state profile components for equivariance class m = 2 and friends.
// h1(r) = 2r^2/(r^4+1), h3(r) = (r^4-1)/(r^4+1); h1^2 + h3^2 = 1.

double h1(double r);
double h3(double r);
double dh1(double r);  // -2 h1 h3 / r
double dh3(double r);  // 2 h1^2 / r

/// Potentials of the linearized operators (lambda = 1):
///   H = -Delta + V,  V = (4/r^2)(1 - 2 h1^2)
///   Htilde = -Delta + Vt,  Vt = (5 - 4 h3)/r^2
/// and the sqrt(r)-conjugated potential used by the WKB layer,
///   VL = 15/(4 r^2) - 32 r^2/(1+r^4)^2.
double V_H(double r);
double V_Ht(double r);
double V_L(double r);

/// Zero modes of H and their partner:
///   phi0 = h1,  theta0 = (-r^8 + r^4 - 8 r^4 log r + 1) / (8 (r^6 + r^2)).
double theta0(double r);
double dtheta0(double r);

/// psi0(r) = (r^2 - (1+r^4) arctan(r^2)) / (2 r^3), series-evaluated near 0.
double psi0(double r);

/// phi1(u), the first inner-series coefficient, closed form (test oracle).
double phi1_closed(double u);

S2Profile soliton_profile(const SolitonParams& p, GridPtr grid);

/// Equivariant energy E(u) = pi * int (|u'|^2 + (4/r^2)(u1^2+u2^2)) r dr.
/// Throws RegimeError if the profile is not unit-norm to 1e-6.
double energy(const S2Profile& u);

/// Bump kappa for the orthogonality condition: exp(-1/(1-x^2)) with
/// x = 2 log2(r) - 1, supported in (1, 2).
double kappa_default(double r);

/// Inversion weight family member: same bump shape with x = log2(r),
/// supported in (1/2, 2); *not* normalized (see gauge::phi_weight).
double phi_bump(double r);

}  // namespace smflow
