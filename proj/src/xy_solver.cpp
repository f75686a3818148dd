#include "symcat/xy_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "symcat/error.hpp"

namespace symcat {

namespace {

void require_xy(const ChainParams& params) {
  if (params.model != Model::XY) throw InvalidArgument("operation requires an XY chain");
  params.validate();
}

// Modes with 2k ≡ 0 (mod N) have k ≡ −k and are not paired by the
// Bogoliubov rotation.
bool is_unpaired(double k, int n_sites) {
  const double twice = 2.0 * k;
  return std::fmod(twice, static_cast<double>(n_sites)) == 0.0;
}

constexpr double kSinZero = 1e-12;

}  // namespace

double mode_angle(double k, int n_sites) { return 2.0 * std::numbers::pi * k / n_sites; }

double quasiparticle_energy(const ChainParams& params, double k_angle) {
  require_xy(params);
  const double a = params.h - std::cos(k_angle);
  const double b = params.gamma * std::sin(k_angle);
  return 2.0 * std::hypot(a, b);
}

BogoliubovAngle bogoliubov_angle(const ChainParams& params, double k_angle) {
  require_xy(params);
  const double x = params.h - std::cos(k_angle);
  if (std::abs(std::sin(k_angle)) < kSinZero) {
    if (std::abs(x) < 1e-14) return {0.0, true};
    return {x > 0.0 ? 0.0 : std::numbers::pi / 2.0, false};
  }
  const double y = -params.gamma * std::sin(k_angle);
  return {0.5 * std::atan2(y, x), false};
}

SectorSpectrum sector_spectrum(const ChainParams& params, Parity parity) {
  require_xy(params);
  const int n = params.n_sites;
  const double offset = parity == Parity::Even ? 0.5 : 0.0;

  SectorSpectrum s;
  s.parity = parity;
  s.modes.reserve(static_cast<std::size_t>(n));
  s.k_angles.reserve(static_cast<std::size_t>(n));
  s.lambda.reserve(static_cast<std::size_t>(n));
  s.theta.reserve(static_cast<std::size_t>(n));

  int occupied_unpaired = 0;
  double lambda_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double k = i + offset;
    const double angle = mode_angle(k, n);
    const double lam = quasiparticle_energy(params, angle);
    auto [theta, degenerate] = bogoliubov_angle(params, angle);
    if (is_unpaired(k, n)) {
      if (degenerate) {
        // h = 1 at k = 0: take the h < 1 (occupied) branch.
        s.critical_field = true;
        ++occupied_unpaired;
      } else if (std::abs(theta) > std::numbers::pi / 4.0) {
        ++occupied_unpaired;
      }
    }
    s.modes.push_back(k);
    s.k_angles.push_back(angle);
    s.lambda.push_back(lam);
    s.theta.push_back(theta);
    lambda_sum += lam;
  }

  s.vacuum_energy = -0.5 * lambda_sum;
  s.vacuum_number_parity = occupied_unpaired % 2 == 0 ? Parity::Even : Parity::Odd;
  s.lowest_physical_energy = s.vacuum_energy;
  if (s.vacuum_number_parity != parity) {
    s.lowest_physical_energy += *std::min_element(s.lambda.begin(), s.lambda.end());
  }
  return s;
}

ParityMinima lowest_energies(const ChainParams& params) {
  return {sector_spectrum(params, Parity::Even).lowest_physical_energy,
          sector_spectrum(params, Parity::Odd).lowest_physical_energy};
}

namespace {

struct GapSample {
  double h;
  double gap;
  int sign;
};

GapSample sample_gap(ChainParams p, double h) {
  p.h = h;
  const auto e = lowest_energies(p);
  const double d = e.gap();
  const double zero_tol = 64.0 * std::numeric_limits<double>::epsilon() * (std::abs(e.even) + std::abs(e.odd));
  const int sign = std::abs(d) <= zero_tol ? 0 : (d > 0.0 ? 1 : -1);
  return {h, d, sign};
}

double bisect_root(const ChainParams& params, GapSample lo, GapSample hi, double tol) {
  double a = lo.h;
  double b = hi.h;
  const int sign_a = lo.sign;
  while (b - a > tol) {
    const double m = 0.5 * (a + b);
    ChainParams p = params;
    p.h = m;
    const double d = lowest_energies(p).gap();
    if (d == 0.0) return m;
    if ((d > 0.0 ? 1 : -1) == sign_a) {
      a = m;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

std::vector<GapSample> sample_grid(const ChainParams& params, double step) {
  const auto n_steps = static_cast<int>(std::ceil(1.0 / step - 1e-9));
  std::vector<GapSample> samples;
  samples.reserve(static_cast<std::size_t>(n_steps) + 1);
  for (int i = 0; i <= n_steps; ++i) samples.push_back(sample_gap(params, std::min(1.0, i * step)));
  return samples;
}

// Left ends of the cells where the sign of Δ flips, skipping exact zeros.
std::vector<double> sign_changes(const std::vector<GapSample>& samples) {
  std::vector<double> out;
  const GapSample* last = nullptr;
  for (const auto& s : samples) {
    if (s.sign == 0) continue;
    if (last != nullptr && s.sign != last->sign) out.push_back(last->h);
    last = &s;
  }
  return out;
}

[[noreturn]] void coarse_grid(double h, double step) {
  std::ostringstream msg;
  msg << "crossing scan step " << step << " cannot separate neighbouring level crossings near h = " << h
      << "; use a finer h_grid_step";
  throw ComputationError(msg.str());
}

}  // namespace

CrossingSet find_crossings(const ChainParams& params, double h_grid_step, double tol) {
  require_xy(params);
  if (!(h_grid_step > 0.0) || h_grid_step > 0.5) {
    throw InvalidArgument("h_grid_step must lie in (0, 0.5]");
  }
  if (!(tol > 0.0)) throw InvalidArgument("bisection tolerance must be positive");

  // At γ = 1 every crossing has merged into h_F = 0; the gap grows like h^N
  // from there and stays positive, so (0, 1] holds none.
  if (params.gamma == 1.0) return CrossingSet{params, {}, tol};

  const auto samples = sample_grid(params, h_grid_step);

  // A pair of crossings inside one cell leaves no sign change; it shows up
  // as a local minimum of |Δ| whose interpolating parabola dips through zero.
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
    const auto& l = samples[i - 1];
    const auto& c = samples[i];
    const auto& r = samples[i + 1];
    if (c.sign == 0 || l.sign != c.sign || r.sign != c.sign) continue;
    if (!(std::abs(c.gap) < std::abs(l.gap) && std::abs(c.gap) <= std::abs(r.gap))) continue;
    const double curvature = r.gap - 2.0 * c.gap + l.gap;
    if (curvature == 0.0) continue;
    const double t = (l.gap - r.gap) / (2.0 * curvature);
    const double vertex = c.gap - (r.gap - l.gap) * (r.gap - l.gap) / (8.0 * curvature);
    if (std::abs(t) <= 1.0 && (vertex > 0.0) != (c.gap > 0.0)) coarse_grid(c.h, h_grid_step);
  }

  // Pairs the parabola cannot see usually appear once the grid is refined.
  const auto coarse = sign_changes(samples);
  for (double div : {2.0, 4.0}) {
    const auto fine = sign_changes(sample_grid(params, h_grid_step / div));
    if (fine.size() == coarse.size()) continue;
    std::size_t i = 0;
    while (i < coarse.size() && i < fine.size() && std::abs(coarse[i] - fine[i]) <= h_grid_step) ++i;
    coarse_grid(i < fine.size() ? fine[i] : 1.0, h_grid_step);
  }

  // Isolated zeros are crossings hit exactly; a run of them means the gap has
  // dropped below what double precision can resolve.
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].sign == 0 && samples[i - 1].sign == 0 && samples[i].h != samples[i - 1].h) {
      std::ostringstream msg;
      msg << "parity gap is below floating-point resolution near h = " << samples[i].h
          << "; crossings cannot be located for N = " << params.n_sites << ", gamma = " << params.gamma;
      throw ComputationError(msg.str());
    }
  }

  CrossingSet out{params, {}, tol};
  const GapSample* last = nullptr;
  for (const auto& s : samples) {
    if (s.sign == 0) continue;
    if (last != nullptr && s.sign != last->sign) {
      out.crossings.push_back(bisect_root(params, *last, s, tol));
    }
    last = &s;
  }
  out.crossings.erase(std::remove_if(out.crossings.begin(), out.crossings.end(), [](double h) { return h <= 0.0; }),
                      out.crossings.end());
  return out;
}

double factorizing_field(double gamma) {
  if (!std::isfinite(gamma) || gamma <= 0.0 || gamma > 1.0) {
    throw InvalidArgument("gamma must lie in (0, 1], got " + std::to_string(gamma));
  }
  return std::sqrt((1.0 - gamma) * (1.0 + gamma));
}

}  // namespace symcat
