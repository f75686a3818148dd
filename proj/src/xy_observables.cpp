#include "symcat/xy_observables.hpp"

#include <cmath>
#include <string>

#include "symcat/error.hpp"
#include "symcat/quadrature.hpp"

namespace symcat {

namespace {

void require_gamma(double gamma) {
  if (!std::isfinite(gamma) || gamma < 0.0 || gamma > 1.0) {
    throw InvalidArgument("gamma must lie in (0, 1], got " + std::to_string(gamma));
  }
  if (gamma == 0.0) {
    throw InvalidArgument("gamma = 0 is the isotropic limit: cos 2α = 1 and the γ=0 limit implies a non-analytic change");
  }
}

void require_sites(int n_sites) {
  if (n_sites < 4) throw InvalidArgument("n_sites must be >= 4, got " + std::to_string(n_sites));
}

GenFunSeries make_series(StateLabel label, int n_sites, const std::vector<double>& lambda) {
  GenFunSeries s;
  s.state = label;
  s.n_sites = n_sites;
  s.lambda = lambda;
  s.values.reserve(lambda.size());
  return s;
}

}  // namespace

FactorizationData factorization_data(double gamma, int n_sites) {
  require_gamma(gamma);
  require_sites(n_sites);
  FactorizationData f;
  f.c = std::sqrt((1.0 - gamma) / (1.0 + gamma));
  f.alpha = 0.5 * std::acos(f.c);
  f.overlap = int_pow(f.c, n_sites);
  f.u_plus = std::sqrt(0.5 * (1.0 + f.overlap));
  f.u_minus = std::sqrt(0.5 * (1.0 - f.overlap));
  return f;
}

std::string_view to_string(StateLabel s) {
  switch (s) {
    case StateLabel::SymPlus: return "alpha_plus";
    case StateLabel::SymMinus: return "alpha_minus";
    case StateLabel::FactPlus: return "psi_f_plus";
    case StateLabel::FactMinus: return "psi_f_minus";
    case StateLabel::CrossPM: return "cross_pm";
    case StateLabel::CrossMP: return "cross_mp";
    case StateLabel::Delta: return "delta";
    case StateLabel::XxxMember: return "xxx_member";
    case StateLabel::XxxSymmetric: return "xxx_symmetric";
  }
  return "unknown";
}

std::vector<double> lambda_grid(double lambda_max, int points) {
  if (!(lambda_max >= 0.0) || !std::isfinite(lambda_max)) throw InvalidArgument("lambda_max must be finite and >= 0");
  if (points < 1) throw InvalidArgument("lambda grid needs at least one point");
  if (points == 1) return {0.0};
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] = -lambda_max + 2.0 * lambda_max * i / (points - 1);
  }
  return grid;
}

ConcurrenceBreakdown concurrence_symmetric(double gamma, int n_sites, Branch branch) {
  const auto f = factorization_data(gamma, n_sites);
  const double sgn = sign_of(branch);
  const double sin2_sq = (1.0 - f.c) * (1.0 + f.c);  // sin²2α
  const double quarter = 0.25 * sin2_sq;               // cos²α sin²α
  const double q = int_pow(f.c, n_sites - 2);
  const double denom = 1.0 + sgn * f.overlap;

  ConcurrenceBreakdown out;
  out.p_offdiag = 2.0 * quarter * (1.0 + sgn * q) / denom;
  out.p_iii = quarter * (1.0 - sgn * q) / denom;
  out.c_direct = 0.5 * out.p_offdiag - out.p_iii;
  out.c_closed_form = q * sin2_sq / denom;
  return out;
}

double concurrence_decay_base(double gamma) {
  require_gamma(gamma);
  return std::sqrt((1.0 - gamma) / (1.0 + gamma));
}

GenFunSeries genfun_factorized(double gamma, int n_sites, Branch branch, const std::vector<double>& lambda) {
  const auto f = factorization_data(gamma, n_sites);
  const double sin2a = std::sin(2.0 * f.alpha);
  const double sgn = sign_of(branch);
  auto s = make_series(branch == Branch::Plus ? StateLabel::FactPlus : StateLabel::FactMinus, n_sites, lambda);
  for (double l : lambda) {
    const double a = l / n_sites;
    s.values.push_back(int_pow(std::complex<double>(std::cos(a), sgn * std::sin(a) * sin2a), n_sites));
  }
  return s;
}

GenFunSeries genfun_cross(double gamma, int n_sites, const std::vector<double>& lambda) {
  const auto f = factorization_data(gamma, n_sites);
  auto s = make_series(StateLabel::CrossPM, n_sites, lambda);
  for (double l : lambda) {
    s.values.emplace_back(int_pow(std::cos(l / n_sites) * f.c, n_sites), 0.0);
  }
  return s;
}

SymmetricGenFun genfun_symmetric(double gamma, int n_sites, Branch branch, const std::vector<double>& lambda) {
  const auto f = factorization_data(gamma, n_sites);
  const double sgn = sign_of(branch);
  const auto plus = genfun_factorized(gamma, n_sites, Branch::Plus, lambda);
  const auto minus = genfun_factorized(gamma, n_sites, Branch::Minus, lambda);
  const auto cross = genfun_cross(gamma, n_sites, lambda);
  const double four_u_sq = 2.0 * (1.0 + sgn * f.overlap);

  SymmetricGenFun out{make_series(branch == Branch::Plus ? StateLabel::SymPlus : StateLabel::SymMinus, n_sites, lambda),
                      make_series(StateLabel::Delta, n_sites, lambda)};
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const auto g = (plus.values[i] + minus.values[i] + 2.0 * sgn * cross.values[i]) / four_u_sq;
    out.g.values.push_back(g);
    out.delta.values.push_back(g - 0.5 * (plus.values[i] + minus.values[i]));
  }
  return out;
}

}  // namespace symcat
