#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>

#include "range.hpp"
#include "symcat/ed_oracle.hpp"
#include "symcat/error.hpp"
#include "symcat/quadrature.hpp"
#include "symcat/scan_io.hpp"
#include "symcat/xxx_manifold.hpp"
#include "symcat/xy_observables.hpp"

namespace symcat::io {

namespace {

using cplx = std::complex<double>;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// ED with full spectra gets slow beyond this size; XXX checks stop here.
constexpr int kXxxMaxSites = 10;

class Report {
 public:
  void add(std::string check, int n, double gamma, double h, double analytic, double oracle, double tol) {
    const double diff = std::abs(analytic - oracle);
    const bool pass = std::isfinite(diff) && diff <= tol;
    all_pass_ = all_pass_ && pass;
    table_.add_row({std::move(check), format_number(n), std::isnan(gamma) ? "" : format_number(gamma),
                    std::isnan(h) ? "" : format_number(h), format_number(analytic), format_number(oracle),
                    format_number(diff), format_number(tol), pass ? "true" : "false"});
  }

  // Runs one group; a computation failure inside it becomes a failed row.
  template <class F>
  void guarded(const std::string& check, int n, double gamma, double h, F&& body) {
    try {
      body();
    } catch (const ComputationError&) {
      add(check + "_error", n, gamma, h, kNaN, kNaN, 0.0);
    }
  }

  CommandResult finish() {
    CommandResult res;
    res.table = std::move(table_);
    res.success = all_pass_;
    return res;
  }

 private:
  CsvTable table_{{"check", "N[sites]", "gamma[1]", "h[J]", "analytic", "oracle", "abs_diff", "tol", "pass"}};
  bool all_pass_ = true;
};

double rel_tol(double rel, double scale) { return rel * std::max(1.0, std::abs(scale)); }

ed::DenseState factorized_state(int n, double alpha, Branch b) {
  return ed::build_product_state(n, {alpha, b == Branch::Plus ? 0.0 : std::numbers::pi});
}

void xy_random_minima(Report& rep, int n, std::mt19937_64& rng, const RunConfig& cfg, const ValidationHooks& hooks) {
  std::uniform_real_distribution<double> gdist(0.05, 1.0);
  std::uniform_real_distribution<double> hdist(0.0, 2.0);
  const auto parity = ed::parity_diagonal(n);
  for (int p = 0; p < cfg.points; ++p) {
    const double gamma = gdist(rng);
    const double h = hdist(rng);
    const auto params = ChainParams::xy(n, gamma, h);
    rep.guarded("sector_min", n, gamma, h, [&] {
      const auto ff = hooks.free_fermion_minima(params);
      const auto oracle = ed::parity_resolved_minima(ed::build_hamiltonian(params, cfg.oracle_cap), parity);
      rep.add("sector_min_even", n, gamma, h, ff.even, oracle.even, rel_tol(1e-9, oracle.even));
      rep.add("sector_min_odd", n, gamma, h, ff.odd, oracle.odd, rel_tol(1e-9, oracle.odd));
    });
  }
}

// Everything at h_F for one (N, γ). Returns the Wootters / direct ratio for
// the + branch, or NaN if the sector states could not be formed.
double xy_factorizing_checks(Report& rep, int n, double gamma, const RunConfig& cfg, const ValidationHooks& hooks) {
  const double h = factorizing_field(gamma);
  const auto params = ChainParams::xy(n, gamma, h);
  double ratio = kNaN;
  rep.guarded("factorizing", n, gamma, h, [&] {
    const auto ham = ed::build_hamiltonian(params, cfg.oracle_cap);
    const auto parity = ed::parity_diagonal(n);
    const auto ff = hooks.free_fermion_minima(params);
    const auto oracle = ed::parity_resolved_minima(ham, parity);
    rep.add("factorizing_degeneracy", n, gamma, h, 0.0, oracle.even - oracle.odd, 1e-10);
    rep.add("factorizing_min_even", n, gamma, h, ff.even, oracle.even, rel_tol(1e-9, oracle.even));
    rep.add("factorizing_min_odd", n, gamma, h, ff.odd, oracle.odd, rel_tol(1e-9, oracle.odd));

    const auto fd = factorization_data(gamma, n);
    const auto psi_p = factorized_state(n, fd.alpha, Branch::Plus);
    const auto psi_m = factorized_state(n, fd.alpha, Branch::Minus);
    for (const auto& [name, psi] : {std::pair{"factorized_plus", &psi_p}, std::pair{"factorized_minus", &psi_m}}) {
      const auto res = ed::eigen_residual(ham, *psi);
      rep.add(std::string(name) + "_residual", n, gamma, h, 0.0, res.residual, 1e-10);
      rep.add(std::string(name) + "_energy", n, gamma, h, ff.even, res.energy, rel_tol(1e-9, ff.even));
    }
    rep.add("factorized_overlap", n, gamma, h, fd.overlap, psi_p.amplitudes.dot(psi_m.amplitudes).real(), 1e-12);

    const std::vector<double> lambdas{0.5, cfg.lambda_star, 5.0};
    const auto gp = genfun_factorized(gamma, n, Branch::Plus, lambdas).values;
    const auto gc = genfun_cross(gamma, n, lambdas).values;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      const double l = lambdas[i];
      rep.add("genfun_factorized_abs_err", n, gamma, l, 0.0,
              std::abs(gp[i] - ed::genfun_matrix_element(psi_p, psi_p, l)), 1e-10);
      rep.add("genfun_cross_abs_err", n, gamma, l, 0.0, std::abs(gc[i] - ed::genfun_matrix_element(psi_p, psi_m, l)),
              1e-10);
    }

    for (Branch b : {Branch::Plus, Branch::Minus}) {
      const std::string tag = b == Branch::Plus ? "plus" : "minus";
      const auto alpha = ed::symmetrize_state({psi_p, psi_m}, {1.0, sign_of(b)});
      const auto sym = genfun_symmetric(gamma, n, b, lambdas).g.values;
      for (std::size_t i = 0; i < lambdas.size(); ++i) {
        rep.add("genfun_symmetric_" + tag + "_abs_err", n, gamma, lambdas[i], 0.0,
                std::abs(sym[i] - ed::genfun_matrix_element(alpha, alpha, lambdas[i])), 1e-10);
      }

      // The sector ground state itself, not the hand-built superposition.
      const auto ground = ed::parity_sector_ground_state(ham, parity, b == Branch::Plus ? Parity::Even : Parity::Odd);
      rep.add("sector_state_fidelity_" + tag, n, gamma, h, 1.0, std::norm(alpha.amplitudes.dot(ground.amplitudes)),
              1e-9);
      const auto rdm = ed::reduce_two_spin(ground, 0, 1);
      const auto c = concurrence_symmetric(gamma, n, b);
      const double wootters = ed::wootters_concurrence(rdm);
      const double direct = ed::direct_concurrence(rdm);
      rep.add("concurrence_closed_vs_wootters_" + tag, n, gamma, h, *c.c_closed_form, wootters, 1e-9);
      rep.add("concurrence_direct_" + tag, n, gamma, h, c.c_direct, direct, 1e-9);
      double spread = 0.0;
      for (int j = 2; j < n; ++j) {
        spread = std::max(spread, (ed::reduce_two_spin(ground, 0, j).rho - rdm.rho).norm());
      }
      rep.add("rdm_pair_independence_" + tag, n, gamma, h, 0.0, spread, 1e-9);
      if (b == Branch::Plus) ratio = wootters / direct;
    }
  });
  return ratio;
}

void xxx_checks(Report& rep, int n, std::mt19937_64& rng, const RunConfig& cfg) {
  rep.guarded("xxx", n, kNaN, kNaN, [&] {
    const auto ham = ed::build_hamiltonian(ChainParams::xxx(n), cfg.oracle_cap);
    const auto gl = ed::ground_level(ham);
    rep.add("xxx_ground_energy", n, kNaN, kNaN, -n, gl.energy, rel_tol(1e-9, n));
    rep.add("xxx_ground_degeneracy", n, kNaN, kNaN, n + 1, gl.degeneracy, 0.0);

    const Eigen::MatrixXcd hc = ham.cast<cplx>();
    for (char axis : {'x', 'y', 'z'}) {
      rep.add(std::string("xxx_commutator_") + axis, n, kNaN, kNaN, 0.0,
              ed::commutator_norm(hc, ed::total_spin(n, axis)), 1e-9);
    }

    std::uniform_real_distribution<double> adist(0.0, 2.0 * std::numbers::pi);
    for (int p = 0; p < cfg.points; ++p) {
      const double theta = adist(rng);
      const auto res = ed::eigen_residual(ham, ed::build_product_state(n, {theta, 0.0}));
      rep.add("xxx_member_residual", n, kNaN, theta, 0.0, res.residual, 1e-10);
      rep.add("xxx_member_energy", n, kNaN, theta, -n, res.energy, rel_tol(1e-9, n));

      const double p1 = adist(rng), t2 = adist(rng), p2 = adist(rng);
      const auto s1 = ed::build_product_state(n, {theta, p1});
      const auto s2 = ed::build_product_state(n, {t2, p2});
      const auto k = overlap_kernel({theta, p1, n}, {t2, p2, n});
      rep.add("overlap_kernel_abs_err", n, kNaN, theta, 0.0, std::abs(k - s1.amplitudes.dot(s2.amplitudes)), 1e-12);
    }

    // |Φ_e⟩ as the trapezoid sum of |Φ_θ⟩, which is exact for M > N nodes.
    const PeriodicGrid grid(default_quadrature_points(n));
    Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
    std::vector<ed::DenseState> members;
    for (double t : grid.nodes()) {
      members.push_back(ed::build_product_state(n, {t, 0.0}));
      sum += grid.weight() * members.back().amplitudes;
    }
    rep.add("xxx_symmetric_norm_sq", n, kNaN, kNaN, xxx_norm_sq(n), sum.squaredNorm(),
            rel_tol(1e-10, xxx_norm_sq(n)));
    double odd = 0.0;
    for (Eigen::Index i = 0; i < sum.size(); ++i) {
      if (std::popcount(static_cast<unsigned long>(i)) % 2) odd += std::norm(sum[i]);
    }
    rep.add("xxx_symmetric_odd_weight", n, kNaN, kNaN, 0.0, std::sqrt(odd), 1e-10);

    const ed::DenseState phi{n, sum / sum.norm()};
    const auto rdm = ed::reduce_two_spin(phi, 0, 1);
    const auto c = xxx_concurrence(n);
    rep.add("xxx_concurrence_direct", n, kNaN, kNaN, c.c_direct, ed::direct_concurrence(rdm), 1e-10);
    rep.add("xxx_concurrence_wootters", n, kNaN, kNaN, 2.0 * *c.c_closed_form, ed::wootters_concurrence(rdm), 1e-9);
    double spread = 0.0;
    for (int j = 2; j < n; ++j) spread = std::max(spread, (ed::reduce_two_spin(phi, 0, j).rho - rdm.rho).norm());
    rep.add("xxx_rdm_pair_independence", n, kNaN, kNaN, 0.0, spread, 1e-10);

    const std::vector<double> lambdas{0.5, cfg.lambda_star, 5.0};
    const auto sym = xxx_genfun_symmetric(n, lambdas).g.values;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      rep.add("xxx_genfun_symmetric_abs_err", n, kNaN, lambdas[i], 0.0,
              std::abs(sym[i] - ed::genfun_matrix_element(phi, phi, lambdas[i])), 1e-10);
      const auto member = xxx_genfun_member(cfg.theta, n, {lambdas[i]}).values[0];
      const auto ms = ed::build_product_state(n, {cfg.theta, 0.0});
      rep.add("xxx_genfun_member_abs_err", n, kNaN, lambdas[i], 0.0,
              std::abs(member - ed::genfun_matrix_element(ms, ms, lambdas[i])), 1e-10);
    }
  });
}

// Odd N: the full-circle superposition cancels identically.
void odd_chain_check(Report& rep) {
  constexpr int n = 5;
  const PeriodicGrid grid(default_quadrature_points(n));
  std::vector<ed::DenseState> members;
  std::vector<cplx> weights;
  Eigen::VectorXcd sum = Eigen::VectorXcd::Zero(1 << n);
  for (double t : grid.nodes()) {
    members.push_back(ed::build_product_state(n, {t, 0.0}));
    weights.emplace_back(grid.weight());
    sum += grid.weight() * members.back().amplitudes;
  }
  rep.add("xxx_odd_symmetric_norm", n, kNaN, kNaN, 0.0, sum.norm(), 1e-10);
  bool raised = false;
  try {
    ed::symmetrize_state(members, weights);
  } catch (const ComputationError&) {
    raised = true;
  }
  rep.add("xxx_odd_symmetrize_raises", n, kNaN, kNaN, 1.0, raised ? 1.0 : 0.0, 0.0);
}

}  // namespace

CommandResult cmd_oracle_validate(const RunConfig& cfg, const ValidationHooks& hooks) {
  ed::check_capacity(cfg.n, cfg.oracle_cap);
  const auto ns = resolve_n_range(cfg).values();
  for (int n : ns) ed::check_capacity(n, cfg.oracle_cap);

  Report rep;
  std::mt19937_64 rng(cfg.seed);
  for (int n : ns) xy_random_minima(rep, n, rng, cfg, hooks);

  for (double gamma : cfg.gammas) {
    double reference = kNaN;
    for (int n : ns) {
      const double ratio = xy_factorizing_checks(rep, n, gamma, cfg, hooks);
      if (std::isnan(reference)) reference = ratio;
      rep.add("concurrence_ratio_wootters_over_direct", n, gamma, factorizing_field(gamma), reference, ratio,
              rel_tol(1e-6, reference));
    }
  }

  for (int n : ns) {
    if (n % 2 == 0 && n <= kXxxMaxSites) xxx_checks(rep, n, rng, cfg);
  }
  odd_chain_check(rep);
  return rep.finish();
}

}  // namespace symcat::io
