#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "symcat/chain_params.hpp"

namespace symcat::ed {

/// Basis convention: amplitude index is a bitmask, bit l set ⇔ spin l down
/// (σᶻ = −1). Site 0 is the least significant bit.
inline constexpr int kDefaultCap = 14;

/// Bytes needed by a dense 2^N × 2^N real matrix.
double dense_matrix_bytes(int n_sites);

/// Throws CapacityError (with a memory estimate) when n_sites > cap.
void check_capacity(int n_sites, int cap);

struct DenseState {
  int n_sites = 0;
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
};

/// 4×4 density matrix in the basis {↑↑, ↑↓, ↓↑, ↓↓}, first spin = site i.
struct TwoSpinRDM {
  Eigen::Matrix4cd rho;
  int site_i = 0;
  int site_j = 1;
};

/// Dense Hamiltonian with periodic boundaries; real symmetric for both models.
Eigen::MatrixXd build_hamiltonian(const ChainParams& params, int cap = kDefaultCap);

/// Diagonal of P = Πσᶻ: +1 for even popcount, −1 for odd.
Eigen::VectorXd parity_diagonal(int n_sites);

struct SectorMinima {
  double even = 0.0;
  double odd = 0.0;
};

/// Lowest eigenvalue in each eigenspace of a diagonal ±1 parity operator.
/// H is projected onto each eigenspace before diagonalization, so exact
/// degeneracies between parities cannot mix the classification. Throws
/// InvalidArgument if an entry of `parity` is not ±1 or if H does not
/// commute with it.
SectorMinima parity_resolved_minima(const Eigen::MatrixXd& hamiltonian, const Eigen::VectorXd& parity);

/// Lowest eigenvector inside one parity eigenspace, embedded into the full
/// space. Throws ComputationError if that sector's ground level is degenerate.
DenseState parity_sector_ground_state(const Eigen::MatrixXd& hamiltonian, const Eigen::VectorXd& parity,
                                      Parity sector);

/// Full ascending spectrum.
Eigen::VectorXd spectrum(const Eigen::MatrixXd& hamiltonian);

struct GroundLevel {
  double energy = 0.0;
  int degeneracy = 0;
};

GroundLevel ground_level(const Eigen::MatrixXd& hamiltonian, double tol = 1e-9);

/// Total spin operator Σ_l σ^ε_l (ε = 'x', 'y', 'z') as a dense matrix.
Eigen::MatrixXcd total_spin(int n_sites, char axis);

/// Frobenius norm of [A, B] (an upper bound on the operator norm).
double commutator_norm(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

struct SiteAngles {
  double theta = 0.0;
  double phi = 0.0;
};

/// ⊗_l (cos θ_l |↑⟩ + e^{iφ_l} sin θ_l |↓⟩).
DenseState build_product_state(const std::vector<SiteAngles>& sites);

/// Same angles on every site.
DenseState build_product_state(int n_sites, SiteAngles angles);

/// Normalized Σ w_i |ψ_i⟩. Throws ComputationError when the sum vanishes.
DenseState symmetrize_state(const std::vector<DenseState>& states, const std::vector<std::complex<double>>& weights);

/// ‖H|ψ⟩ − E|ψ⟩‖ with E the Rayleigh quotient; returns {E, residual}.
struct EigenResidual {
  double energy = 0.0;
  double residual = 0.0;
};

EigenResidual eigen_residual(const Eigen::MatrixXd& hamiltonian, const DenseState& state);

/// Partial trace down to spins i and j (i ≠ j).
TwoSpinRDM reduce_two_spin(const DenseState& state, int i, int j);

/// Wootters concurrence max(0, λ₁ − λ₂ − λ₃ − λ₄). The λ are the singular
/// values of τ = Wᵀ(σʸ⊗σʸ)W for ρ = WW†, which avoids square roots of
/// tiny eigenvalues. Rejects non-Hermitian, non-unit-trace or non-PSD
/// input beyond 1e−10.
double wootters_concurrence(const TwoSpinRDM& rdm);

/// ½⟨|↑↑⟩⟨↓↓| + h.c.⟩ − ⟨|↑↓⟩⟨↑↓|⟩ read off an RDM.
double direct_concurrence(const TwoSpinRDM& rdm);

/// ⟨bra| Π_l exp(i(λ/N)σˣ_l) |ket⟩, applying exact 2×2 rotations per site.
std::complex<double> genfun_matrix_element(const DenseState& bra, const DenseState& ket, double lambda);

}  // namespace symcat::ed
