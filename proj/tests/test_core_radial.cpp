#include <cmath>

#include "doctest.h"
#include "smflow/fd.hpp"
#include "smflow/hankel.hpp"
#include "smflow/norms.hpp"
#include "smflow/ops.hpp"
#include "smflow/special.hpp"
#include "test_support.hpp"

using namespace smflow;
using namespace smtest;

namespace {
GridPtr grid() {
  static GridPtr g = RadialGrid::make_log();
  return g;
}
}  // namespace

TEST_CASE("h1/h3 pointwise and identities") {
  CHECK(h1(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(h3(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(h1(0.0) == doctest::Approx(0.0));
  CHECK(h3(0.0) == doctest::Approx(-1.0));
  CHECK(h3(1e9) == doctest::Approx(1.0).epsilon(1e-15));
  for (double r : {1e-3, 0.3, 1.0, 2.7, 15.0, 900.0, 1e6}) {
    CHECK(std::abs(h1(r) * h1(r) + h3(r) * h3(r) - 1.0) < 1e-14);
  }
  for (double r : {0.5, 2.0}) {
    const double e = 1e-5;
    const double d1 = (h1(r + e) - h1(r - e)) / (2 * e);
    const double d3 = (h3(r + e) - h3(r - e)) / (2 * e);
    CHECK(d1 == doctest::Approx(-2.0 * h1(r) * h3(r) / r).epsilon(1e-8));
    CHECK(d3 == doctest::Approx(2.0 * h1(r) * h1(r) / r).epsilon(1e-8));
    CHECK(dh1(r) == doctest::Approx(d1).epsilon(1e-8));
    CHECK(dh3(r) == doctest::Approx(d3).epsilon(1e-8));
  }
}

TEST_CASE("grid quadrature exactness") {
  auto g = grid();
  std::vector<double> f(g->size());
  for (std::size_t i = 0; i < g->size(); ++i)
    f[i] = std::exp(-g->r(i) * g->r(i));
  CHECK(std::abs(g->integrate(f) - 0.5) < 1e-8);  // r_min^2/2 truncation
  for (int p = 1; p <= 5; ++p) {
    for (std::size_t i = 0; i < g->size(); ++i)
      f[i] = std::pow(g->r(i), p) * std::exp(-g->r(i));
    double exact = 1.0;
    for (int k = 2; k <= p + 1; ++k) exact *= k;
    CHECK(std::abs(g->integrate(f) - exact) < 1e-8 * exact);
  }
}

TEST_CASE("soliton profile and energy") {
  auto g = grid();
  SUBCASE("unit norm and energy of the ground state") {
    for (double alpha : {0.0, 0.7, M_PI / 2}) {
      for (double lambda : {0.5, 1.0, 2.0}) {
        auto u = soliton_profile({alpha, lambda}, g);
        CHECK(u.unit_defect() < 1e-12);
        CHECK(energy(u) == doctest::Approx(8.0 * M_PI).epsilon(1e-6));
      }
    }
  }
  SUBCASE("constant north pole profile has zero energy") {
    S2Profile u(g);
    for (auto& v : u.values) v = Vec3{0, 0, 1};
    CHECK(std::abs(energy(u)) < 1e-12);
  }
  SUBCASE("perturbed soliton against refined-quadrature oracle") {
    auto mk = [&](GridPtr gg) {
      auto u = soliton_profile({0.0, 1.0}, gg);
      for (std::size_t i = 0; i < gg->size(); ++i) {
        u.values[i].x += 0.05 * bump(gg->r(i), 1.5, 0.5);
        u.values[i] = u.values[i].normalized();
      }
      return u;
    };
    const double e1 = energy(mk(g));
    auto gfine = RadialGrid::make_log(1e-4, 2e3, 40960);
    const double e2 = energy(mk(gfine));
    CHECK(e1 == doctest::Approx(e2).epsilon(1e-8));
  }
}

TEST_CASE("integration operators") {
  auto g = grid();
  SUBCASE("int_rdr_inv of s^-2") {
    RealField f(g);
    for (std::size_t i = 0; i < g->size(); ++i)
      f[i] = 1.0 / (g->r(i) * g->r(i));
    auto F = int_rdr_inv(f);
    for (double r : {0.01, 0.5, 3.0, 100.0}) {
      const auto i = g->locate(r);
      CHECK(F[i] == doctest::Approx(-0.5 / (g->r(i) * g->r(i))).epsilon(1e-6));
    }
  }
  SUBCASE("int_rdr_inv of compactly supported f vanishes beyond support") {
    RealField f(g);
    for (std::size_t i = 0; i < g->size(); ++i) f[i] = bump(g->r(i), 1.5, 0.4);
    auto F = int_rdr_inv(f);
    CHECK(std::abs(F[g->locate(2.5)]) < 1e-14);
    CHECK(std::abs(F[g->size() - 1]) < 1e-14);
  }
  SUBCASE("int_rdr_inv of e^{-s} against refined quadrature oracle") {
    RealField f(g);
    for (std::size_t i = 0; i < g->size(); ++i) f[i] = std::exp(-g->r(i));
    auto F = int_rdr_inv(f);
    for (double r : {0.5, 1.0, 2.0}) {
      const auto i = g->locate(r);
      const double want = -adaptive_simpson(
          [](double s) { return std::exp(-s) / s; }, g->r(i), 60.0, 1e-14);
      CHECK(F[i] == doctest::Approx(want).epsilon(1e-9));
    }
  }
  SUBCASE("dr_inv of exponential") {
    RealField f(g);
    for (std::size_t i = 0; i < g->size(); ++i) f[i] = std::exp(-g->r(i));
    auto F = dr_inv(f);
    for (double r : {0.3, 1.0, 5.0}) {
      const auto i = g->locate(r);
      CHECK(F[i] == doctest::Approx(-std::exp(-g->r(i))).epsilon(1e-9));
    }
  }
  SUBCASE("dr_inv is a right inverse of d_r") {
    // gaussian bump: smooth, vanishes identically (in doubles) inside the grid
    RealField f(g);
    for (std::size_t i = 0; i < g->size(); ++i)
      f[i] = std::exp(-0.5 * std::pow((g->r(i) - 2.0) / 0.5, 2));
    auto F = dr_inv(f);
    auto dF = deriv_r(*g, F.values);
    double err = 0;
    for (std::size_t i = 0; i < g->size(); ++i)
      if (g->r(i) > 0.5 && g->r(i) < 10)
        err = std::max(err, std::abs(dF[i] - f[i]));
    CHECK(err < 1e-8);
  }
  SUBCASE("slowly decaying tail is rejected") {
    RealField f(g);
    for (std::size_t i = 0; i < g->size(); ++i)
      f[i] = 1.0 / std::sqrt(1.0 + g->r(i));
    CHECK_THROWS_AS((void)dr_inv(f), RegimeError);
  }
}

TEST_CASE("hankel transform") {
  auto g = grid();
  Hankel2 ht(g);
  SUBCASE("plancherel and roundtrip on a bump corpus") {
    double worstP = 0, worstR = 0;
    for (auto [c, w] : bump_corpus(20)) {
      auto f = gauss_field(g, c, w);
      const double nf = f.norm_l2();
      auto gf = ht.forward(f);
      double ng2 = 0;
      for (std::size_t m = 0; m < gf.size(); ++m)
        ng2 += ht.xi_grid()->w(m) * std::norm(gf.values[m]);
      worstP = std::max(worstP, std::abs(std::sqrt(ng2) - nf) / nf);
      auto fr = ht.inverse(gf);
      double e2 = 0;
      for (std::size_t i = 0; i < g->size(); ++i)
        e2 += g->w(i) * std::norm(fr.values[i] - f.values[i]);
      worstR = std::max(worstR, std::sqrt(e2) / nf);
    }
    CHECK(worstP < 1e-3);
    CHECK(worstR < 1e-6);
  }
  SUBCASE("transform values against refined quadrature oracle") {
    RadialField f(g);
    for (std::size_t i = 0; i < g->size(); ++i) {
      const double r = g->r(i);
      f.values[i] = r * r * std::exp(-r * r);
    }
    auto gf = ht.forward(f);
    for (double xi : {0.5, 1.0, 2.0}) {
      const auto m = ht.xi_grid()->locate(xi);
      const double xm = ht.xi_grid()->r(m);
      const double want = rdr_integral_oracle(
          [xm](double r) {
            return r * r * std::exp(-r * r) * std::cyl_bessel_j(2.0, r * xm);
          },
          1e-6, 60.0);
      CHECK(gf.values[m].real() == doctest::Approx(want).epsilon(1e-6));
    }
  }
}

TEST_CASE("besov norms") {
  auto g = grid();
  Hankel2 ht(g);
  SUBCASE("l2 norm of h1 is sqrt(pi/2)") {
    auto gw = RadialGrid::make_log(1e-5, 1e5, 8192);
    RealField f(gw);
    for (std::size_t i = 0; i < gw->size(); ++i) f[i] = h1(gw->r(i));
    CHECK(f.norm_l2() * f.norm_l2() == doctest::Approx(M_PI / 2).epsilon(1e-8));
  }
  SUBCASE("norm_h1e of h1 against refined quadrature") {
    RealField f(g);
    for (std::size_t i = 0; i < g->size(); ++i) f[i] = h1(g->r(i));
    const double want2 =
        rdr_integral_oracle([](double r) { return dh1(r) * dh1(r); }) +
        4.0 * rdr_integral_oracle([](double r) { return h1(r) * h1(r) / (r * r); });
    CHECK(norm_h1e(f) == doctest::Approx(std::sqrt(want2)).epsilon(1e-6));
  }
  SUBCASE("single-block field: LX norm matches its L2 norm") {
    auto f = gauss_field(g, 2.0, 0.7);
    auto blk = bessel_block(ht, f, 0);
    auto res = norm_LX(ht, blk, -8, 8);
    CHECK(res.value == doctest::Approx(blk.norm_l2()).epsilon(0.02));
  }
  SUBCASE("littlewood-paley blocks sum back to band-limited f") {
    auto f = gauss_field(g, 2.0, 0.7);
    RadialField fb(g);
    for (int k = -6; k <= 6; ++k) {
      auto blk = bessel_block(ht, f, k);
      for (std::size_t i = 0; i < g->size(); ++i) fb.values[i] += blk.values[i];
    }
    RadialField sum(g);
    for (int k = -9; k <= 9; ++k) {
      auto blk = bessel_block(ht, fb, k);
      for (std::size_t i = 0; i < g->size(); ++i) sum.values[i] += blk.values[i];
    }
    double e2 = 0;
    for (std::size_t i = 0; i < g->size(); ++i)
      e2 += g->w(i) * std::norm(sum.values[i] - fb.values[i]);
    CHECK(std::sqrt(e2) / fb.norm_l2() < 1e-6);
  }
}
