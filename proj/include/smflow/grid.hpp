#pragma once

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace smflow {

using cplx = std::complex<double>;

/// Radial grid for the r dr measure. Nodes are log-uniform on [r_min, r_max];
/// weights are trapezoid-in-log, so integrate(f) ~ int f(r) r dr.
class RadialGrid {
 public:
  RadialGrid(std::vector<double> nodes, std::vector<double> weights);

  static std::shared_ptr<const RadialGrid> make_log(double r_min = 1e-4,
                                                    double r_max = 2e3,
                                                    std::size_t n = 4096);

  std::size_t size() const { return r_.size(); }
  const std::vector<double>& nodes() const { return r_; }
  const std::vector<double>& weights() const { return w_; }
  double r(std::size_t i) const { return r_[i]; }
  double w(std::size_t i) const { return w_[i]; }
  double r_min() const { return r_.front(); }
  double r_max() const { return r_.back(); }
  /// log-spacing (log-uniform grids only)
  double hlog() const { return hlog_; }
  bool log_uniform() const { return log_uniform_; }

  /// largest index with r[i] <= x (clamped)
  std::size_t locate(double x) const;

  double integrate(const std::vector<double>& f) const;
  cplx integrate(const std::vector<cplx>& f) const;

 private:
  std::vector<double> r_, w_;
  double hlog_ = 0.0;
  bool log_uniform_ = false;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

/// Complex field sampled on a radial grid.
struct RadialField {
  GridPtr grid;
  std::vector<cplx> values;

  RadialField() = default;
  explicit RadialField(GridPtr g) : grid(std::move(g)), values(grid->size()) {}
  RadialField(GridPtr g, std::vector<cplx> v);

  std::size_t size() const { return values.size(); }
  cplx& operator[](std::size_t i) { return values[i]; }
  const cplx& operator[](std::size_t i) const { return values[i]; }

  double norm_l2() const;  // sqrt(int |f|^2 r dr)
};

/// Real field on a radial grid.
struct RealField {
  GridPtr grid;
  std::vector<double> values;

  RealField() = default;
  explicit RealField(GridPtr g) : grid(std::move(g)), values(grid->size()) {}
  RealField(GridPtr g, std::vector<double> v);

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  const double& operator[](std::size_t i) const { return values[i]; }

  double norm_l2() const;
};

struct Vec3 {
  double x = 0, y = 0, z = 0;
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const;
  Vec3 normalized() const;
  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

/// Radial profile of a 2-equivariant sphere-valued map; unit 3-vectors per node.
struct S2Profile {
  GridPtr grid;
  std::vector<Vec3> values;

  S2Profile() = default;
  explicit S2Profile(GridPtr g) : grid(std::move(g)), values(grid->size()) {}

  std::size_t size() const { return values.size(); }
  void renormalize();
  /// max_i | |u_i| - 1 |
  double unit_defect() const;
};

struct SolitonParams {
  double alpha = 0.0;   // rotation angle in [0, 2pi)
  double lambda = 1.0;  // scale, > 0
};

class SmflowError : public std::runtime_error {
 public:
  explicit SmflowError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Out-of-regime / validation failures (CLI exit code 2).
class RegimeError : public SmflowError {
 public:
  explicit RegimeError(const std::string& msg) : SmflowError(msg) {}
};

}  // namespace smflow
