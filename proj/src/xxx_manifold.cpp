#include "symcat/xxx_manifold.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "symcat/error.hpp"
#include "symcat/quadrature.hpp"

namespace symcat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_even(int n_sites, int minimum) {
  if (n_sites < minimum) {
    throw InvalidArgument("n_sites must be >= " + std::to_string(minimum) + ", got " + std::to_string(n_sites));
  }
  if (n_sites % 2 != 0) {
    throw InvalidArgument("n_sites must be even: for odd N the full-circle symmetric state vanishes identically (N = " +
                          std::to_string(n_sites) + ")");
  }
}

void require_exact(int quadrature_points, int degree) {
  if (quadrature_points <= degree) {
    throw InvalidArgument("quadrature_points = " + std::to_string(quadrature_points) +
                          " is below the exactness threshold; need more than " + std::to_string(degree));
  }
}

}  // namespace

std::complex<double> overlap_kernel(const BlochProductState& s1, const BlochProductState& s2) {
  if (s1.n_sites != s2.n_sites) throw InvalidArgument("overlap_kernel: states live on different chain lengths");
  if (s1.n_sites < 1) throw InvalidArgument("overlap_kernel: n_sites must be positive");
  const std::complex<double> site =
      std::cos(s1.theta) * std::cos(s2.theta) +
      std::polar(1.0, s2.phi - s1.phi) * std::sin(s1.theta) * std::sin(s2.theta);
  return int_pow(site, s1.n_sites);
}

int default_quadrature_points(int n_sites) { return 2 * n_sites + 8; }

double xxx_norm_sq(int n_sites, int quadrature_points) {
  require_even(n_sites, 2);
  require_exact(quadrature_points, n_sites);
  const PeriodicGrid grid(quadrature_points);
  return integrate_periodic_2d([n_sites](double t, double tp) { return int_pow(std::cos(t - tp), n_sites); }, grid)
      .real();
}

double xxx_norm_sq(int n_sites) { return xxx_norm_sq(n_sites, default_quadrature_points(n_sites)); }

double xxx_norm_sq_closed_form(int n_sites) {
  require_even(n_sites, 2);
  return kTwoPi * kTwoPi * central_binomial_fraction(n_sites);
}

ConcurrenceBreakdown xxx_concurrence(int n_sites, int quadrature_points) {
  require_even(n_sites, 4);
  // Integrands have degree N per angle.
  require_exact(quadrature_points, n_sites);
  const PeriodicGrid grid(quadrature_points);
  const int n = n_sites;

  const double norm = integrate_periodic_2d([n](double t, double tp) { return int_pow(std::cos(t - tp), n); }, grid).real();
  const double offdiag = integrate_periodic_2d(
                             [n](double t, double tp) {
                               const double c = std::cos(t), s = std::sin(t), cp = std::cos(tp), sp = std::sin(tp);
                               return (c * c * sp * sp + cp * cp * s * s) * int_pow(std::cos(t - tp), n - 2);
                             },
                             grid)
                             .real();
  const double p3 = integrate_periodic_2d(
                        [n](double t, double tp) {
                          return std::cos(t) * std::sin(t) * std::cos(tp) * std::sin(tp) *
                                 int_pow(std::cos(t - tp), n - 2);
                        },
                        grid)
                        .real();
  // tan²·cos^N written as sin²·cos^{N−2}: nodes hit θ − θ' = π/2 exactly.
  const double ratio_num = integrate_periodic_2d(
                               [n](double t, double tp) {
                                 const double s = std::sin(t - tp);
                                 return s * s * int_pow(std::cos(t - tp), n - 2);
                               },
                               grid)
                               .real();

  ConcurrenceBreakdown out;
  out.p_offdiag = offdiag / norm;
  out.p_iii = p3 / norm;
  out.c_direct = 0.5 * ratio_num / norm;
  out.c_closed_form = 1.0 / (2.0 * (n_sites - 1));
  return out;
}

ConcurrenceBreakdown xxx_concurrence(int n_sites) {
  return xxx_concurrence(n_sites, default_quadrature_points(n_sites));
}

double xxx_concurrence_asymptotic(int n_sites) { return gaussian_ratio_asymptote(n_sites); }

GenFunSeries xxx_genfun_member(double theta, int n_sites, const std::vector<double>& lambda) {
  if (n_sites < 2) throw InvalidArgument("n_sites must be >= 2");
  GenFunSeries s{StateLabel::XxxMember, n_sites, lambda, {}};
  s.values.reserve(lambda.size());
  const double sin2t = std::sin(2.0 * theta);
  for (double l : lambda) {
    const double a = l / n_sites;
    s.values.push_back(int_pow(std::complex<double>(std::cos(a), std::sin(a) * sin2t), n_sites));
  }
  return s;
}

XxxSymmetricGenFun xxx_genfun_symmetric(int n_sites, const std::vector<double>& lambda, int quadrature_points,
                                        unsigned workers) {
  require_even(n_sites, 2);
  // The member generating function contains sin 2θ, so degree 2N in θ.
  require_exact(quadrature_points, 2 * n_sites);
  const PeriodicGrid grid(quadrature_points);
  const int n = n_sites;
  const double norm =
      integrate_periodic_2d([n](double t, double tp) { return int_pow(std::cos(t - tp), n); }, grid, workers).real();

  XxxSymmetricGenFun out{{StateLabel::XxxSymmetric, n, lambda, {}},
                         {StateLabel::Delta, n, lambda, {}},
                         {StateLabel::Delta, n, lambda, {}},
                         {StateLabel::Delta, n, lambda, {}}};
  for (double l : lambda) {
    const double a = l / n;
    const double ca = std::cos(a), sa = std::sin(a);
    const auto ge = integrate_periodic_2d(
                        [=](double t, double tp) {
                          return int_pow(std::complex<double>(ca * std::cos(t - tp), sa * std::sin(t + tp)), n);
                        },
                        grid, workers) /
                    norm;
    auto member = [=](double t) { return int_pow(std::complex<double>(ca, sa * std::sin(2.0 * t)), n); };
    const auto mixture = integrate_periodic_1d(member, grid) / kTwoPi;
    const double l2 = l * l;
    const auto saddle = integrate_periodic_1d(
                            [&](double t) {
                              const double c2 = std::cos(2.0 * t);
                              return member(t) * std::expm1(-l2 * c2 * c2 / (2.0 * n));
                            },
                            grid) /
                        kTwoPi;
    const auto variant = integrate_periodic_1d(
        [&](double t) { return member(t) * std::expm1(l2 * std::cos(2.0 * t) / (2.0 * n)); }, grid);

    out.g.values.push_back(ge);
    out.delta.values.push_back(ge - mixture);
    out.delta_saddle.values.push_back(saddle);
    out.delta_cos2theta.values.push_back(variant);
  }
  return out;
}

XxxSymmetricGenFun xxx_genfun_symmetric(int n_sites, const std::vector<double>& lambda) {
  return xxx_genfun_symmetric(n_sites, lambda, default_quadrature_points(n_sites));
}

PowerLawFit fit_power_law(const std::vector<int>& n_sites, const std::vector<double>& magnitudes) {
  if (n_sites.size() != magnitudes.size() || n_sites.size() < 2) {
    throw InvalidArgument("fit_power_law needs at least two (N, value) pairs of equal length");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(n_sites.size());
  for (std::size_t i = 0; i < n_sites.size(); ++i) {
    if (n_sites[i] <= 0 || !(magnitudes[i] > 0.0)) throw InvalidArgument("fit_power_law needs positive data");
    const double x = std::log(static_cast<double>(n_sites[i]));
    const double y = std::log(magnitudes[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return {slope, std::exp((sy - slope * sx) / m)};
}

}  // namespace symcat
