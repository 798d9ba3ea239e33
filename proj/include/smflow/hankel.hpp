#pragma once

#include "smflow/grid.hpp"

namespace smflow {

/// Spectral field: samples on a frequency grid (measure xi dxi for Hankel).
struct SpectralField {
  GridPtr grid;  // xi grid
  std::vector<cplx> values;

  SpectralField() = default;
  explicit SpectralField(GridPtr g) : grid(std::move(g)), values(grid->size()) {}
  std::size_t size() const { return values.size(); }
};

/// Order-2 Hankel transform pair on log grids,
///   F2 f(xi) = int f(r) J2(r xi) r dr,   f(r) = int F2f(xi) J2(r xi) xi dxi,
/// with Filon handling of the oscillatory region r*xi > y*.
class Hankel2 {
 public:
  /// r grid of the physical fields; frequency grid defaults to 64 points per
  /// octave over [2^-10, 2^10].
  explicit Hankel2(GridPtr r_grid, GridPtr xi_grid = nullptr);

  const GridPtr& r_grid() const { return rg_; }
  const GridPtr& xi_grid() const { return xg_; }

  SpectralField forward(const RadialField& f) const;
  RadialField inverse(const SpectralField& g) const;

  /// Estimated aliasing level for the finest requested frequency: fraction of
  /// transform mass carried by the top octave. Large values mean the r grid
  /// cannot support xi_max.
  double band_edge_fraction(const SpectralField& g) const;

 private:
  GridPtr rg_, xg_;
  // J2 asymptotic amplitude: J2(x) ~ Re[ sqrt(2/(pi x)) (P + iQ) e^{i(x - 5pi/4)} ]
};

}  // namespace smflow
