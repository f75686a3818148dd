#pragma once

#include <complex>
#include <vector>

#include "symcat/xy_observables.hpp"

namespace symcat {

/// ⊗_l [cos θ |↑⟩ + e^{iφ} sin θ |↓⟩] on n_sites spins.
struct BlochProductState {
  double theta = 0.0;
  double phi = 0.0;
  int n_sites = 0;
};

/// ⟨s1|s2⟩ = [cos θ₁ cos θ₂ + e^{i(φ₂−φ₁)} sin θ₁ sin θ₂]^N.
std::complex<double> overlap_kernel(const BlochProductState& s1, const BlochProductState& s2);

/// Default node count per angle for the manifold integrals: 2N + 8, which
/// integrates every integrand below exactly (degree ≤ 2N per angle).
int default_quadrature_points(int n_sites);

/// 𝒩² = ∬ cos^N(θ − θ') dθ dθ' over [0, 2π)², by quadrature.
/// Odd N is rejected: the full-circle symmetric state vanishes identically.
double xxx_norm_sq(int n_sites, int quadrature_points);
double xxx_norm_sq(int n_sites);

/// Closed form (2π)² binom(N, N/2) / 2^N.
double xxx_norm_sq_closed_form(int n_sites);

/// Concurrence of |Φ_e⟩ = (1/𝒩)∫dθ |Φ_θ⟩. c_direct is the quadrature value of
/// ½ ∬ sin²(θ−θ') cos^{N−2}(θ−θ') / 𝒩²; c_closed_form is 1/(2(N−1)).
ConcurrenceBreakdown xxx_concurrence(int n_sites, int quadrature_points);
ConcurrenceBreakdown xxx_concurrence(int n_sites);

/// 1/(2N), the steepest-descent limit of xxx_concurrence.
double xxx_concurrence_asymptotic(int n_sites);

/// (cos(λ/N) + i sin(λ/N) sin 2θ)^N for the member |Φ_θ⟩.
GenFunSeries xxx_genfun_member(double theta, int n_sites, const std::vector<double>& lambda);

struct XxxSymmetricGenFun {
  GenFunSeries g;              ///< G_Φe(λ) = (1/𝒩²) ∬ g^N
  GenFunSeries delta;          ///< G_Φe − (1/2π)∫dθ G_Φθ
  GenFunSeries delta_saddle;   ///< (1/2π)∫dθ G_Φθ [exp(−λ² cos²2θ / 2N) − 1]
  GenFunSeries delta_cos2theta;  ///< ∫dθ G_Φθ [exp(λ² cos 2θ / 2N) − 1]: cos 2θ in the exponent, no 1/2π
};

/// Throws InvalidArgument if quadrature_points ≤ 2N (mixture integrand has
/// degree 2N in θ) or if N is odd.
XxxSymmetricGenFun xxx_genfun_symmetric(int n_sites, const std::vector<double>& lambda, int quadrature_points,
                                        unsigned workers = 1);
XxxSymmetricGenFun xxx_genfun_symmetric(int n_sites, const std::vector<double>& lambda);

/// Least-squares fit of log|ΔG| = log A + p log N.
struct PowerLawFit {
  double exponent = 0.0;
  double amplitude = 0.0;
};

PowerLawFit fit_power_law(const std::vector<int>& n_sites, const std::vector<double>& magnitudes);

}  // namespace symcat
