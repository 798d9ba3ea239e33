#include "smflow/grid.hpp"

#include <algorithm>
#include <cmath>

namespace smflow {

RadialGrid::RadialGrid(std::vector<double> nodes, std::vector<double> weights)
    : r_(std::move(nodes)), w_(std::move(weights)) {
  if (r_.size() < 8 || r_.size() != w_.size())
    throw SmflowError("RadialGrid: bad sizes");
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (!(r_[i] > 0) || !(w_[i] > 0))
      throw SmflowError("RadialGrid: nodes and weights must be positive");
    if (i > 0 && !(r_[i] > r_[i - 1]))
      throw SmflowError("RadialGrid: nodes must be strictly increasing");
  }
  const double h0 = std::log(r_[1] / r_[0]);
  log_uniform_ = true;
  for (std::size_t i = 1; i + 1 < r_.size(); ++i) {
    if (std::abs(std::log(r_[i + 1] / r_[i]) - h0) > 1e-12 * std::abs(h0)) {
      log_uniform_ = false;
      break;
    }
  }
  hlog_ = log_uniform_ ? h0 : 0.0;
}

std::shared_ptr<const RadialGrid> RadialGrid::make_log(double r_min,
                                                       double r_max,
                                                       std::size_t n) {
  if (!(r_min > 0) || !(r_max > r_min) || n < 8)
    throw SmflowError("make_log: invalid grid parameters");
  std::vector<double> r(n), w(n);
  const double h = std::log(r_max / r_min) / double(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = r_min * std::exp(h * double(i));
    w[i] = h * r[i] * r[i];  // r dr = r^2 d(log r)
  }
  w.front() *= 0.5;
  w.back() *= 0.5;
  return std::make_shared<RadialGrid>(std::move(r), std::move(w));
}

std::size_t RadialGrid::locate(double x) const {
  if (x <= r_.front()) return 0;
  if (x >= r_.back()) return r_.size() - 1;
  if (log_uniform_) {
    auto i = std::size_t(std::log(x / r_.front()) / hlog_);
    while (i + 1 < r_.size() && r_[i + 1] <= x) ++i;
    while (i > 0 && r_[i] > x) --i;
    return i;
  }
  auto it = std::upper_bound(r_.begin(), r_.end(), x);
  return std::size_t(it - r_.begin()) - 1;
}

double RadialGrid::integrate(const std::vector<double>& f) const {
  if (f.size() != r_.size()) throw SmflowError("integrate: size mismatch");
  double s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += w_[i] * f[i];
  return s;
}

cplx RadialGrid::integrate(const std::vector<cplx>& f) const {
  if (f.size() != r_.size()) throw SmflowError("integrate: size mismatch");
  cplx s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += w_[i] * f[i];
  return s;
}

RadialField::RadialField(GridPtr g, std::vector<cplx> v)
    : grid(std::move(g)), values(std::move(v)) {
  if (values.size() != grid->size()) throw SmflowError("RadialField: size mismatch");
}

double RadialField::norm_l2() const {
  double s = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    s += grid->w(i) * std::norm(values[i]);
  return std::sqrt(s);
}

RealField::RealField(GridPtr g, std::vector<double> v)
    : grid(std::move(g)), values(std::move(v)) {
  if (values.size() != grid->size()) throw SmflowError("RealField: size mismatch");
}

double RealField::norm_l2() const {
  double s = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    s += grid->w(i) * values[i] * values[i];
  return std::sqrt(s);
}

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Vec3 Vec3::normalized() const {
  const double n = norm();
  if (n == 0) throw SmflowError("Vec3: cannot normalize zero vector");
  return {x / n, y / n, z / n};
}

void S2Profile::renormalize() {
  for (auto& v : values) v = v.normalized();
}

double S2Profile::unit_defect() const {
  double d = 0;
  for (const auto& v : values) d = std::max(d, std::abs(v.norm() - 1.0));
  return d;
}

}  // namespace smflow
