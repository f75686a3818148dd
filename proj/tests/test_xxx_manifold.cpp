#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "symcat/ed_oracle.hpp"
#include "symcat/error.hpp"
#include "symcat/quadrature.hpp"
#include "symcat/xxx_manifold.hpp"

using namespace symcat;
using cplx = std::complex<double>;
using std::numbers::pi;

TEST_CASE("overlap kernel examples") {
  CHECK(std::abs(overlap_kernel({0.4, 1.1, 7}, {0.4, 1.1, 7}) - 1.0) < 1e-15);
  CHECK(std::abs(overlap_kernel({0.4, 0.2, 7}, {0.4 + pi / 2, 0.2, 7})) < 1e-15);
  const auto k = overlap_kernel({0.3, 0.0, 10}, {0.7, 0.0, 10});
  CHECK(k.real() == doctest::Approx(std::pow(std::cos(0.4), 10)).epsilon(1e-14));

  const auto a = ed::build_product_state(10, {0.3, 0.0});
  const auto b = ed::build_product_state(10, {0.7, 0.0});
  CHECK(std::abs(k - a.amplitudes.dot(b.amplitudes)) < 1e-13);
}

TEST_CASE("overlap kernel magnitude and phase against explicit states") {
  for (double t1 : {0.1, 1.3, 2.9}) {
    for (double p2 : {0.0, 0.8, 4.0}) {
      const BlochProductState s1{t1, 0.5, 6};
      const BlochProductState s2{0.9, p2, 6};
      const auto k = overlap_kernel(s1, s2);
      CHECK(std::abs(k) <= 1.0 + 1e-15);
      const auto a = ed::build_product_state(6, {t1, 0.5});
      const auto b = ed::build_product_state(6, {0.9, p2});
      CHECK(std::abs(k - a.amplitudes.dot(b.amplitudes)) < 1e-13);
    }
  }
}

TEST_CASE("symmetric state norm") {
  CHECK(xxx_norm_sq(2) == doctest::Approx(2 * pi * pi).epsilon(1e-14));
  CHECK(xxx_norm_sq(4) == doctest::Approx(4 * pi * pi * 3.0 / 8).epsilon(1e-14));
  CHECK(std::abs(xxx_norm_sq(40) - xxx_norm_sq_closed_form(40)) / xxx_norm_sq_closed_form(40) < 1e-12);
  CHECK_THROWS_AS(xxx_norm_sq(5), InvalidArgument);
  CHECK_THROWS_AS(xxx_norm_sq(8, 8), InvalidArgument);
  CHECK(default_quadrature_points(10) == 28);
}

TEST_CASE("symmetric state concurrence is 1/(2(N-1))") {
  CHECK(xxx_concurrence(4).c_direct == doctest::Approx(1.0 / 6).epsilon(1e-12));
  CHECK(xxx_concurrence(10).c_direct == doctest::Approx(1.0 / 18).epsilon(1e-12));
  for (int n = 4; n <= 40; n += 2) {
    const auto c = xxx_concurrence(n);
    CHECK(std::abs(c.c_direct - 1.0 / (2.0 * (n - 1))) < 1e-12);
    CHECK(*c.c_closed_form == 1.0 / (2.0 * (n - 1)));
  }
  const double c40 = xxx_concurrence(40).c_direct;
  CHECK(c40 == doctest::Approx(1.0 / 78).epsilon(1e-12));
  CHECK(std::abs(xxx_concurrence_asymptotic(40) - c40) / c40 < 0.026);
  CHECK_THROWS_AS(xxx_concurrence(7), InvalidArgument);
  CHECK_THROWS_AS(xxx_concurrence(2), InvalidArgument);
}

TEST_CASE("asymptotic concurrence") {
  CHECK(xxx_concurrence_asymptotic(100) == doctest::Approx(0.005).epsilon(1e-15));
  CHECK(xxx_concurrence_asymptotic(4) == 0.125);
  double prev = 1.0;
  for (int n = 4; n <= 60; n += 2) {
    const double exact = xxx_concurrence(n).c_direct;
    const double err = std::abs(xxx_concurrence_asymptotic(n) - exact) / exact;
    CHECK(err < prev);
    prev = err;
  }
  const double e200 = xxx_concurrence(200).c_direct;
  CHECK(std::abs(xxx_concurrence_asymptotic(200) / e200 - 1.0) < 0.01);
  CHECK(std::abs(gaussian_ratio_asymptote(200) / e200 - 1.0) < 0.01);
}

TEST_CASE("member generating function") {
  const auto g = xxx_genfun_member(0.5, 12, {0.0, 2.0});
  CHECK(g.values[0] == cplx(1.0));
  const auto s = ed::build_product_state(12, {0.5, 0.0});
  CHECK(std::abs(g.values[1] - ed::genfun_matrix_element(s, s, 2.0)) < 1e-12);

  // sin 2θ = 1 makes the per-site factor e^{iλ/N}
  for (int n : {10, 100, 1000, 10000}) {
    CHECK(std::abs(xxx_genfun_member(pi / 4, n, {1.5}).values[0] - std::polar(1.0, 1.5)) < 1e-12);
  }
  // a generic member tends to e^{iλ sin 2θ}
  double prev = 1.0;
  for (int n : {10, 100, 1000, 10000}) {
    const double err = std::abs(xxx_genfun_member(0.3, n, {1.5}).values[0] - std::polar(1.0, 1.5 * std::sin(0.6)));
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("symmetric generating function basics") {
  const auto grid = lambda_grid(5.0, 21);
  const auto r = xxx_genfun_symmetric(8, grid);
  CHECK(std::abs(r.g.values[10] - 1.0) < 1e-14);
  CHECK(std::abs(r.delta.values[10]) < 1e-14);
  CHECK(std::abs(r.delta_saddle.values[10]) < 1e-14);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(r.g.values[i] - std::conj(r.g.values[20 - i])) < 1e-13);
  }
  CHECK_THROWS_AS(xxx_genfun_symmetric(7, grid), InvalidArgument);
  CHECK_THROWS_AS(xxx_genfun_symmetric(8, grid, 16), InvalidArgument);
}

TEST_CASE("symmetric generating function against the explicit superposition") {
  for (int n : {4, 6, 8}) {
    const PeriodicGrid grid(default_quadrature_points(n));
    std::vector<ed::DenseState> members;
    std::vector<cplx> weights;
    for (double t : grid.nodes()) {
      members.push_back(ed::build_product_state(n, {t, 0.0}));
      weights.emplace_back(1.0);
    }
    const auto phi = ed::symmetrize_state(members, weights);
    const auto lam = lambda_grid(5.0, 11);
    const auto r = xxx_genfun_symmetric(n, lam);
    for (std::size_t i = 0; i < lam.size(); ++i) {
      CHECK(std::abs(r.g.values[i] - ed::genfun_matrix_element(phi, phi, lam[i])) < 1e-12);
    }
  }
}

TEST_CASE("symmetric generating function is independent of the worker count") {
  const auto lam = lambda_grid(4.0, 9);
  const auto a = xxx_genfun_symmetric(40, lam, 88, 1);
  const auto b = xxx_genfun_symmetric(40, lam, 88, 4);
  for (std::size_t i = 0; i < lam.size(); ++i) {
    CHECK(a.g.values[i] == b.g.values[i]);
    CHECK(a.delta.values[i] == b.delta.values[i]);
  }
}

TEST_CASE("symmetric-state interference decays like 1/N") {
  const auto d200 = xxx_genfun_symmetric(200, {1.0}, default_quadrature_points(200), 4);
  const auto d400 = xxx_genfun_symmetric(400, {1.0}, default_quadrature_points(400), 4);
  const double a = 200 * std::abs(d200.delta.values[0]);
  const double b = 400 * std::abs(d400.delta.values[0]);
  CHECK(std::abs(a / b - 1.0) < 0.05);
  const double saddle = std::abs(d400.delta_saddle.values[0]);
  CHECK(std::abs(std::abs(d400.delta.values[0]) / saddle - 1.0) < 0.05);
}

TEST_CASE("power-law fit") {
  const std::vector<int> ns{10, 20, 40, 80};
  std::vector<double> mags;
  for (int n : ns) mags.push_back(3.0 * std::pow(n, -1.0));
  const auto fit = fit_power_law(ns, mags);
  CHECK(fit.exponent == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(fit.amplitude == doctest::Approx(3.0).epsilon(1e-12));
  CHECK_THROWS_AS(fit_power_law({10}, {1.0}), InvalidArgument);
}
