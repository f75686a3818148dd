#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

#include "symcat/ed_oracle.hpp"
#include "symcat/error.hpp"
#include "symcat/quadrature.hpp"
#include "symcat/xxx_manifold.hpp"
#include "symcat/xy_observables.hpp"
#include "symcat/xy_solver.hpp"

using namespace symcat;
using cplx = std::complex<double>;
using std::numbers::pi;

namespace {

ed::DenseState xxx_symmetric(int n) {
  const PeriodicGrid grid(default_quadrature_points(n));
  std::vector<ed::DenseState> members;
  std::vector<cplx> weights;
  for (double t : grid.nodes()) {
    members.push_back(ed::build_product_state(n, {t, 0.0}));
    weights.emplace_back(1.0);
  }
  return ed::symmetrize_state(members, weights);
}

ed::TwoSpinRDM rdm_of(const Eigen::Vector4cd& psi) {
  return {psi * psi.adjoint(), 0, 1};
}

}  // namespace

TEST_CASE("XY ground energy is minus half the sum of even-sector energies") {
  const auto p = ChainParams::xy(4, 0.6, 0.8);
  const auto s = sector_spectrum(p, Parity::Even);
  const double expected = -0.5 * std::accumulate(s.lambda.begin(), s.lambda.end(), 0.0);
  CHECK(ed::ground_level(ed::build_hamiltonian(p)).energy == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("XXX ground manifold") {
  for (int n : {4, 6, 8}) {
    const auto gl = ed::ground_level(ed::build_hamiltonian(ChainParams::xxx(n)));
    CHECK(gl.energy == doctest::Approx(-n).epsilon(1e-12));
    CHECK(gl.degeneracy == n + 1);
  }
}

TEST_CASE("strong field polarizes the chain") {
  const double h = 1e3;
  const int n = 6;
  const double e = ed::ground_level(ed::build_hamiltonian(ChainParams::xy(n, 0.5, h))).energy;
  CHECK(std::abs(e + n * h) < 1.0);
}

TEST_CASE("symmetries of the dense Hamiltonians") {
  const int n = 6;
  const auto h = ed::build_hamiltonian(ChainParams::xy(n, 0.7, 0.4));
  CHECK((h - h.transpose()).norm() == 0.0);
  const Eigen::MatrixXd p = ed::parity_diagonal(n).asDiagonal();
  CHECK((h * p - p * h).norm() < 1e-12);

  const Eigen::MatrixXcd hx = ed::build_hamiltonian(ChainParams::xxx(n)).cast<cplx>();
  for (char axis : {'x', 'y', 'z'}) CHECK(ed::commutator_norm(hx, ed::total_spin(n, axis)) < 1e-12);
  // the XY chain does not conserve total sigma-z
  CHECK(ed::commutator_norm(h.cast<cplx>(), ed::total_spin(n, 'z')) > 1e-3);
  CHECK_THROWS_AS(ed::total_spin(n, 'q'), InvalidArgument);
}

TEST_CASE("memory guard") {
  CHECK_THROWS_AS(ed::build_hamiltonian(ChainParams::xy(16, 0.5, 0.5)), CapacityError);
  CHECK_THROWS_AS(ed::check_capacity(12, 10), CapacityError);
  CHECK_NOTHROW(ed::check_capacity(10, 10));
  try {
    ed::check_capacity(16, 14);
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find("GiB") != std::string::npos);
  }
  CHECK(ed::dense_matrix_bytes(10) == 8.0 * 1024 * 1024);
  CHECK_THROWS_AS(ed::build_hamiltonian(ChainParams::xy(3, 0.5, 0.5)), InvalidArgument);
}

TEST_CASE("parity-resolved minima examples") {
  const auto par = ed::parity_diagonal(8);
  const auto hf = ed::parity_resolved_minima(ed::build_hamiltonian(ChainParams::xy(8, 0.6, 0.8)), par);
  CHECK(std::abs(hf.even - hf.odd) < 1e-10);

  const auto p2 = ChainParams::xy(8, 0.6, 2.0);
  const auto m2 = ed::parity_resolved_minima(ed::build_hamiltonian(p2), par);
  CHECK(m2.odd - m2.even == doctest::Approx(lowest_energies(p2).gap()).epsilon(1e-9));
  CHECK(m2.odd - m2.even > 2.0);

  const auto x = ed::parity_resolved_minima(ed::build_hamiltonian(ChainParams::xxx(4)), ed::parity_diagonal(4));
  CHECK(x.even == doctest::Approx(-4.0).epsilon(1e-12));
  CHECK(x.odd == doctest::Approx(-4.0).epsilon(1e-12));
}

TEST_CASE("parity-resolved minima reject bad inputs") {
  const auto h = ed::build_hamiltonian(ChainParams::xy(4, 0.6, 0.5));
  Eigen::VectorXd bad = ed::parity_diagonal(4);
  bad[3] = 0.5;
  CHECK_THROWS_AS(ed::parity_resolved_minima(h, bad), InvalidArgument);
  Eigen::VectorXd wrong = Eigen::VectorXd::Ones(16);
  wrong[1] = -1.0;  // not a symmetry of H
  CHECK_THROWS_AS(ed::parity_resolved_minima(h, wrong), InvalidArgument);
}

TEST_CASE("sector ground states") {
  const auto p = ChainParams::xy(6, 0.6, 0.8);
  const auto h = ed::build_hamiltonian(p);
  const auto par = ed::parity_diagonal(6);
  for (Parity s : {Parity::Even, Parity::Odd}) {
    const auto g = ed::parity_sector_ground_state(h, par, s);
    CHECK(g.norm() == doctest::Approx(1.0).epsilon(1e-12));
    const double pexp = (g.amplitudes.adjoint() * par.asDiagonal() * g.amplitudes)(0).real();
    CHECK(pexp == doctest::Approx(s == Parity::Even ? 1.0 : -1.0).epsilon(1e-12));
    CHECK(ed::eigen_residual(h, g).residual < 1e-10);
  }
  // XXX even sector ground level is threefold at N = 4
  CHECK_THROWS_AS(ed::parity_sector_ground_state(ed::build_hamiltonian(ChainParams::xxx(4)), ed::parity_diagonal(4),
                                                 Parity::Even),
                  ComputationError);
}

TEST_CASE("spectrum is ascending") {
  const auto ev = ed::spectrum(ed::build_hamiltonian(ChainParams::xy(5, 0.3, 0.7)));
  REQUIRE(ev.size() == 32);
  for (Eigen::Index i = 1; i < ev.size(); ++i) CHECK(ev[i] >= ev[i - 1]);
}

TEST_CASE("product states") {
  const auto up = ed::build_product_state(5, {0.0, 0.0});
  CHECK(up.amplitudes[0] == cplx(1.0));
  CHECK(up.amplitudes.norm() == 1.0);

  const double a = pi / 6;
  const auto pp = ed::build_product_state(4, {a, 0.0});
  const auto mm = ed::build_product_state(4, {a, pi});
  CHECK(pp.amplitudes.dot(mm.amplitudes).real() == doctest::Approx(std::pow(0.5, 4)).epsilon(1e-14));

  // site 0 is the least significant bit
  const auto mixed = ed::build_product_state({{pi / 2, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
  CHECK(std::abs(mixed.amplitudes[1] - 1.0) < 1e-15);
  CHECK(std::abs(mixed.amplitudes[4]) < 1e-15);

  const auto phased = ed::build_product_state(3, {0.4, 1.2});
  CHECK(phased.norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(phased.amplitudes[7] - std::pow(std::polar(std::sin(0.4), 1.2), 3)) < 1e-15);
}

TEST_CASE("factorized states are eigenstates at the factorizing field") {
  const int n = 8;
  const auto h = ed::build_hamiltonian(ChainParams::xy(n, 0.6, 0.8));
  const double alpha = factorization_data(0.6, n).alpha;
  for (double phi : {0.0, pi}) {
    const auto r = ed::eigen_residual(h, ed::build_product_state(n, {alpha, phi}));
    CHECK(r.residual < 1e-10);
    CHECK(r.energy == doctest::Approx(ed::ground_level(h).energy).epsilon(1e-10));
  }
}

TEST_CASE("symmetrized states") {
  const double alpha = factorization_data(0.6, 6).alpha;
  const auto pp = ed::build_product_state(6, {alpha, 0.0});
  const auto mm = ed::build_product_state(6, {alpha, pi});
  const auto sum = ed::symmetrize_state({pp, mm}, {1.0, 1.0});
  const auto par = ed::parity_diagonal(6);
  const double pexp = (sum.amplitudes.adjoint() * par.asDiagonal() * sum.amplitudes)(0).real();
  CHECK(std::abs(pexp - 1.0) < 1e-12);
  CHECK(sum.norm() == doctest::Approx(1.0).epsilon(1e-14));

  for (int n : {4, 6}) {
    const auto phi = xxx_symmetric(n);
    for (Eigen::Index i = 0; i < phi.amplitudes.size(); ++i) {
      if (std::popcount(static_cast<unsigned>(i)) % 2) CHECK(std::abs(phi.amplitudes[i]) < 1e-14);
    }
  }
  CHECK_THROWS_AS(xxx_symmetric(5), ComputationError);
  CHECK_THROWS_AS(ed::symmetrize_state({pp}, {1.0, 2.0}), InvalidArgument);
}

TEST_CASE("two-spin reduction") {
  const auto prod = ed::build_product_state(5, {0.7, 0.3});
  const auto r = ed::reduce_two_spin(prod, 1, 3);
  CHECK((r.rho * r.rho).trace().real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.rho.trace().real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((r.rho - r.rho.adjoint()).norm() < 1e-15);

  const auto phi = xxx_symmetric(4);
  CHECK((ed::reduce_two_spin(phi, 0, 1).rho - ed::reduce_two_spin(phi, 0, 2).rho).norm() < 1e-14);

  // (|↑↑⟩ + |↓↓⟩)/√2 on two sites
  ed::DenseState ghz{2, Eigen::VectorXcd::Zero(4)};
  ghz.amplitudes[0] = ghz.amplitudes[3] = 1.0 / std::sqrt(2.0);
  const auto g = ed::reduce_two_spin(ghz, 0, 1);
  Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
  expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 0.5;
  CHECK((g.rho - expected).norm() < 1e-15);

  CHECK_THROWS_AS(ed::reduce_two_spin(prod, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(ed::reduce_two_spin(prod, 0, 5), InvalidArgument);
}

TEST_CASE("basis order of the reduced matrix") {
  // spin i down, spin j up is the |↓↑⟩ entry
  const auto s = ed::build_product_state({{0.0, 0.0}, {0.0, 0.0}, {pi / 2, 0.0}});
  const auto r = ed::reduce_two_spin(s, 2, 0);
  CHECK(std::abs(r.rho(2, 2) - 1.0) < 1e-15);
}

TEST_CASE("Wootters concurrence") {
  Eigen::Vector4cd bell(1.0, 0.0, 0.0, 1.0);
  bell /= std::sqrt(2.0);
  CHECK(ed::wootters_concurrence(rdm_of(bell)) == doctest::Approx(1.0).epsilon(1e-14));
  Eigen::Vector4cd singlet(0.0, 1.0, -1.0, 0.0);
  singlet /= std::sqrt(2.0);
  CHECK(ed::wootters_concurrence(rdm_of(singlet)) == doctest::Approx(1.0).epsilon(1e-14));

  const auto prod = ed::build_product_state(4, {0.3, 0.9});
  CHECK(ed::wootters_concurrence(ed::reduce_two_spin(prod, 0, 1)) < 1e-12);
  CHECK(ed::wootters_concurrence({Eigen::Matrix4cd::Identity() / 4.0, 0, 1}) == 0.0);

  // partially entangled pure state: C = 2|ab|
  Eigen::Vector4cd part(std::cos(0.3), 0.0, 0.0, std::sin(0.3));
  CHECK(ed::wootters_concurrence(rdm_of(part)) == doctest::Approx(std::sin(0.6)).epsilon(1e-13));

  // the direct formula gives half on the Bell state
  CHECK(ed::direct_concurrence(rdm_of(bell)) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("Wootters concurrence rejects invalid matrices") {
  Eigen::Matrix4cd neg = Eigen::Matrix4cd::Identity() / 4.0;
  neg(0, 0) = 0.6;
  neg(1, 1) = -0.1;
  CHECK_THROWS_AS(ed::wootters_concurrence({neg, 0, 1}), InvalidArgument);
  Eigen::Matrix4cd nonherm = Eigen::Matrix4cd::Identity() / 4.0;
  nonherm(0, 1) = 0.1;
  CHECK_THROWS_AS(ed::wootters_concurrence({nonherm, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(ed::wootters_concurrence({Eigen::Matrix4cd::Identity() / 2.0, 0, 1}), InvalidArgument);
}

TEST_CASE("XXX symmetric state concurrence is twice the direct value") {
  for (int n : {4, 6, 8}) {
    const auto r = ed::reduce_two_spin(xxx_symmetric(n), 0, 1);
    const double direct = ed::direct_concurrence(r);
    CHECK(direct == doctest::Approx(1.0 / (2.0 * (n - 1))).epsilon(1e-12));
    CHECK(ed::wootters_concurrence(r) / direct == doctest::Approx(2.0).epsilon(1e-10));
  }
}

TEST_CASE("generating-function matrix elements") {
  const auto a = ed::build_product_state(5, {0.4, 0.0});
  const auto b = ed::build_product_state(5, {1.1, 0.7});
  CHECK(std::abs(ed::genfun_matrix_element(a, b, 0.0) - a.amplitudes.dot(b.amplitudes)) < 1e-15);
  for (double lam : {0.3, 2.0, -4.0}) {
    const auto g = ed::genfun_matrix_element(a, a, lam);
    CHECK(std::abs(g - std::conj(ed::genfun_matrix_element(a, a, -lam))) < 1e-15);
    const double x = lam / 5;
    const auto closed = std::pow(cplx(std::cos(x), std::sin(x) * std::sin(0.8)), 5);
    CHECK(std::abs(g - closed) < 1e-13);
  }
  CHECK_THROWS_AS(ed::genfun_matrix_element(a, ed::build_product_state(4, {0.0, 0.0}), 1.0), InvalidArgument);
}
