#pragma once

#include <vector>

#include "symcat/chain_params.hpp"

namespace symcat {

/// Mode angle 2πk/N for a (possibly half-integer) mode index k.
double mode_angle(double k, int n_sites);

/// Λ(k) = 2√((h − cos k)² + γ² sin² k).
double quasiparticle_energy(const ChainParams& params, double k_angle);

struct BogoliubovAngle {
  double theta = 0.0;
  /// Gap-closing point h = cos k with γ sin k = 0; theta is reported as 0.
  bool degenerate = false;
};

/// ϑ(k) with tan 2ϑ = −γ sin k / (h − cos k), taken as
/// ½·atan2(−γ sin k, h − cos k). This branch rotates the mode's 2×2
/// Hamiltonian [[ε, Δ], [Δ, −ε]] (ε = 2(h − cos k), Δ = −2γ sin k) into
/// diag(Λ, −Λ) with Λ ≥ 0, so ϑ = π/2 on an unpaired mode (sin k = 0)
/// with h < cos k: that mode is occupied in the vacuum.
BogoliubovAngle bogoliubov_angle(const ChainParams& params, double k_angle);

/// One fermion-parity sector of the Jordan–Wigner solution.
/// Even ↔ antiperiodic fermions (half-integer k), Odd ↔ periodic (integer k).
/// With σᶻ = 1 − 2n the fermion parity equals P = Πσᶻ for every N.
struct SectorSpectrum {
  Parity parity = Parity::Even;
  std::vector<double> modes;     ///< k (half-integers or integers)
  std::vector<double> k_angles;  ///< 2πk/N, radians
  std::vector<double> lambda;    ///< Λ_k ≥ 0
  std::vector<double> theta;     ///< ϑ_k
  double vacuum_energy = 0.0;    ///< −½ Σ Λ_k
  Parity vacuum_number_parity = Parity::Even;
  double lowest_physical_energy = 0.0;
  /// Set when h = 1 exactly in the odd sector: the k = 0 occupancy is
  /// ambiguous there and the h < 1 branch is used (Λ_0 = 0, so the energy
  /// is the same either way).
  bool critical_field = false;
};

SectorSpectrum sector_spectrum(const ChainParams& params, Parity parity);

/// Lowest physical energy of each parity sector.
struct ParityMinima {
  double even = 0.0;
  double odd = 0.0;
  double gap() const { return odd - even; }
};

ParityMinima lowest_energies(const ChainParams& params);

struct CrossingSet {
  ChainParams params;
  std::vector<double> crossings;  ///< strictly increasing, in (0, 1]
  double refinement_tolerance = 0.0;
};

inline constexpr double kDefaultCrossingStep = 5e-4;
inline constexpr double kDefaultCrossingTol = 1e-8;

/// Sign changes of E_odd(h) − E_even(h) on (0, 1], refined by bisection.
/// Throws ComputationError if the grid looks too coarse to separate
/// neighbouring crossings.
CrossingSet find_crossings(const ChainParams& params,
                           double h_grid_step = kDefaultCrossingStep,
                           double tol = kDefaultCrossingTol);

/// h_F = √(1 − γ²).
double factorizing_field(double gamma);

}  // namespace symcat
