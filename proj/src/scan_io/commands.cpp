#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>

#include "range.hpp"
#include "symcat/error.hpp"
#include "symcat/quadrature.hpp"
#include "symcat/scan_io.hpp"
#include "symcat/xxx_manifold.hpp"
#include "symcat/xy_observables.hpp"
#include "symcat/xy_solver.hpp"

namespace symcat::io {

namespace {

using cplx = std::complex<double>;
using Row = std::vector<std::string>;

std::string fmt(double x) { return format_number(x); }
std::string fmt(int x) { return format_number(x); }

std::string branch_name(Branch b) { return b == Branch::Plus ? "+" : "-"; }

std::string gamma_label(double g) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", g);
  return buf;
}

std::vector<Row> crossing_rows(int n, double gamma, const RunConfig& cfg) {
  const auto set = find_crossings(ChainParams::xy(n, gamma, 0.0), cfg.crossing_step, cfg.tol);
  const double h_f = factorizing_field(gamma);
  std::vector<Row> rows;
  for (std::size_t i = 0; i < set.crossings.size(); ++i) {
    rows.push_back({fmt(n), fmt(gamma), fmt(static_cast<int>(i) + 1), fmt(set.crossings[i]), fmt(h_f)});
  }
  return rows;
}

CsvTable crossing_table() { return CsvTable({"N[sites]", "gamma[1]", "index", "h_crossing[J]", "h_F[J]"}); }

// G and ΔG = G − G_mixture for one named state at one N.
struct GenFunSample {
  std::vector<cplx> g;
  std::vector<cplx> delta;
  std::vector<cplx> delta_saddle;
  std::vector<cplx> delta_cos2theta;
};

std::vector<cplx> xxx_mixture(int n, const std::vector<double>& lambda) {
  const PeriodicGrid grid(2 * n + 8);
  std::vector<cplx> out;
  for (double l : lambda) {
    const auto v = integrate_periodic_1d([&](double t) { return xxx_genfun_member(t, n, {l}).values[0]; }, grid);
    out.push_back(v / (2.0 * std::numbers::pi));
  }
  return out;
}

GenFunSample sample_genfun(const RunConfig& cfg, int n, const std::vector<double>& lambda) {
  GenFunSample s;
  const auto& st = cfg.state;
  if (st.starts_with("xy")) {
    const double gamma = cfg.gammas.front();
    const auto plus = genfun_factorized(gamma, n, Branch::Plus, lambda).values;
    const auto minus = genfun_factorized(gamma, n, Branch::Minus, lambda).values;
    if (st == "xy-symmetric") s.g = genfun_symmetric(gamma, n, cfg.branch, lambda).g.values;
    else if (st == "xy-factorized") s.g = cfg.branch == Branch::Plus ? plus : minus;
    else s.g = genfun_cross(gamma, n, lambda).values;
    for (std::size_t i = 0; i < lambda.size(); ++i) s.delta.push_back(s.g[i] - 0.5 * (plus[i] + minus[i]));
  } else if (st == "xxx-member") {
    s.g = xxx_genfun_member(cfg.theta, n, lambda).values;
    const auto mix = xxx_mixture(n, lambda);
    for (std::size_t i = 0; i < lambda.size(); ++i) s.delta.push_back(s.g[i] - mix[i]);
  } else {
    const auto r = xxx_genfun_symmetric(n, lambda, default_quadrature_points(n), cfg.workers);
    s.g = r.g.values;
    s.delta = r.delta.values;
    s.delta_saddle = r.delta_saddle.values;
    s.delta_cos2theta = r.delta_cos2theta.values;
  }
  return s;
}

}  // namespace

CommandResult cmd_fig1(const RunConfig& cfg) {
  const double gamma = cfg.gammas.front();
  const auto count = static_cast<std::size_t>(std::floor((cfg.h_max - cfg.h_min) / cfg.h_step + 1e-9)) + 1;
  auto rows = parallel_map<Row>(
      count,
      [&](std::size_t i) {
        const double h = cfg.h_min + static_cast<double>(i) * cfg.h_step;
        const auto m = lowest_energies(ChainParams::xy(cfg.n, gamma, h));
        return Row{fmt(h), fmt(m.odd), fmt(m.even), fmt(m.gap())};
      },
      cfg.workers);
  CommandResult res;
  res.table = CsvTable({"h[J]", "E_odd_min[J]", "E_even_min[J]", "gap[J]"});
  for (auto& r : rows) res.table.add_row(std::move(r));
  res.companion = crossing_table();
  res.companion_name = "crossings";
  for (auto& r : crossing_rows(cfg.n, gamma, cfg)) res.companion->add_row(std::move(r));
  return res;
}

CommandResult cmd_fig2(const RunConfig& cfg) {
  const auto ns = resolve_n_range(cfg).values();
  Row header{"N[sites]"};
  for (double g : cfg.gammas) header.push_back("C_xy(gamma=" + gamma_label(g) + ")[1]");
  header.insert(header.end(), {"C_xxx_exact[1]", "C_xxx_asymptotic[1]"});
  auto rows = parallel_map<Row>(
      ns.size(),
      [&](std::size_t i) {
        const int n = ns[i];
        Row r{fmt(n)};
        for (double g : cfg.gammas) r.push_back(fmt(*concurrence_symmetric(g, n, cfg.branch).c_closed_form));
        r.push_back(fmt(xxx_concurrence(n).c_direct));
        r.push_back(fmt(xxx_concurrence_asymptotic(n)));
        return r;
      },
      cfg.workers);
  CommandResult res;
  res.table = CsvTable(header);
  for (auto& r : rows) res.table.add_row(std::move(r));
  return res;
}

CommandResult cmd_genfun(const RunConfig& cfg) {
  const auto lambda = lambda_grid(cfg.lambda_max, cfg.lambda_points);
  const bool saddle = cfg.state == "xxx-symmetric";
  const auto main = sample_genfun(cfg, cfg.n, lambda);

  CommandResult res;
  Row header{"lambda[1]", "re_G[1]", "im_G[1]", "re_dG[1]", "im_dG[1]"};
  if (saddle) header.insert(header.end(), {"re_dG_saddle[1]", "im_dG_saddle[1]"});
  res.table = CsvTable(header);
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    Row r{fmt(lambda[i]), fmt(main.g[i].real()), fmt(main.g[i].imag()), fmt(main.delta[i].real()),
          fmt(main.delta[i].imag())};
    if (saddle) {
      r.push_back(fmt(main.delta_saddle[i].real()));
      r.push_back(fmt(main.delta_saddle[i].imag()));
    }
    res.table.add_row(std::move(r));
  }

  const auto ns = resolve_n_range(cfg).values();
  RunConfig inner = cfg;
  // The outer pool already spreads N values; keep the per-N quadrature serial.
  if (cfg.workers > 1) inner.workers = 1;
  auto samples = parallel_map<GenFunSample>(
      ns.size(), [&](std::size_t i) { return sample_genfun(inner, ns[i], {cfg.lambda_star}); }, cfg.workers);

  Row sheader{"N[sites]", "lambda_star[1]", "abs_dG[1]", "N_abs_dG[1]", "log_abs_dG[1]"};
  if (saddle) sheader.insert(sheader.end(), {"abs_dG_saddle[1]", "N_abs_dG_saddle[1]"});
  res.companion = CsvTable(sheader);
  res.companion_name = "scaling";
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double mag = std::abs(samples[i].delta[0]);
    Row r{fmt(ns[i]), fmt(cfg.lambda_star), fmt(mag), fmt(ns[i] * mag), fmt(std::log(mag))};
    if (saddle) {
      const double sm = std::abs(samples[i].delta_saddle[0]);
      r.push_back(fmt(sm));
      r.push_back(fmt(ns[i] * sm));
    }
    res.companion->add_row(std::move(r));
  }
  return res;
}

CommandResult cmd_xy_crossings(const RunConfig& cfg) {
  const auto ns = resolve_n_range(cfg).values();
  const std::size_t ng = cfg.gammas.size();
  auto blocks = parallel_map<std::vector<Row>>(
      ns.size() * ng, [&](std::size_t i) { return crossing_rows(ns[i / ng], cfg.gammas[i % ng], cfg); },
      cfg.workers);
  CommandResult res;
  res.table = crossing_table();
  for (auto& b : blocks) {
    for (auto& r : b) res.table.add_row(std::move(r));
  }
  return res;
}

CommandResult cmd_xy_concurrence(const RunConfig& cfg) {
  CommandResult res;
  res.table = CsvTable({"N[sites]", "gamma[1]", "branch", "p_offdiag[1]", "p_III[1]", "C_direct[1]", "C_closed[1]",
                        "decay_base[1]"});
  for (int n : resolve_n_range(cfg).values()) {
    for (double g : cfg.gammas) {
      const auto c = concurrence_symmetric(g, n, cfg.branch);
      res.table.add_row({fmt(n), fmt(g), branch_name(cfg.branch), fmt(c.p_offdiag), fmt(c.p_iii), fmt(c.c_direct),
                         fmt(*c.c_closed_form), fmt(concurrence_decay_base(g))});
    }
  }
  return res;
}

CommandResult cmd_xxx_concurrence(const RunConfig& cfg) {
  const auto ns = resolve_n_range(cfg).values();
  auto rows = parallel_map<Row>(
      ns.size(),
      [&](std::size_t i) {
        const int n = ns[i];
        const auto c = xxx_concurrence(n);
        return Row{fmt(n), fmt(c.p_offdiag), fmt(c.p_iii), fmt(c.c_direct), fmt(*c.c_closed_form),
                   fmt(xxx_concurrence_asymptotic(n))};
      },
      cfg.workers);
  CommandResult res;
  res.table =
      CsvTable({"N[sites]", "p_offdiag[1]", "p_III[1]", "C_quadrature[1]", "C_exact[1]", "C_asymptotic[1]"});
  for (auto& r : rows) res.table.add_row(std::move(r));
  return res;
}

CommandResult run_command(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Fig1: return cmd_fig1(cfg);
    case Command::Fig2: return cmd_fig2(cfg);
    case Command::GenFun: return cmd_genfun(cfg);
    case Command::XyCrossings: return cmd_xy_crossings(cfg);
    case Command::XyConcurrence: return cmd_xy_concurrence(cfg);
    case Command::XxxConcurrence: return cmd_xxx_concurrence(cfg);
    case Command::OracleValidate: return cmd_oracle_validate(cfg);
  }
  throw InvalidArgument("unknown command");
}

void write_outputs(const CommandResult& result, const RunConfig& cfg, std::ostream& os) {
  if (cfg.out.empty()) {
    result.table.write(os);
    if (result.companion) {
      os << "\n# " << result.companion_name << '\n';
      result.companion->write(os);
    }
    return;
  }
  namespace fs = std::filesystem;
  auto write_file = [](const fs::path& path, const CsvTable& table) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ComputationError("cannot open '" + path.string() + "' for writing");
    table.write(out);
    if (!out) throw ComputationError("failed writing '" + path.string() + "'");
  };
  const fs::path main(cfg.out);
  write_file(main, result.table);
  if (result.companion) {
    auto side = main;
    side.replace_filename(main.stem().string() + "." + result.companion_name + ".csv");
    write_file(side, *result.companion);
  }
}

}  // namespace symcat::io
