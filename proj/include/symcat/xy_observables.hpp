#pragma once

#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include "symcat/chain_params.hpp"

namespace symcat {

/// Superposition data of the two factorized ground states at h_F.
struct FactorizationData {
  double alpha = 0.0;    ///< cos 2α = √((1−γ)/(1+γ)), α ∈ [0, π/4]
  double c = 0.0;        ///< cos 2α
  double overlap = 0.0;  ///< ⟨Ψ_F⁺|Ψ_F⁻⟩ = c^N
  double u_plus = 0.0;   ///< √((1 + c^N)/2)
  double u_minus = 0.0;  ///< √((1 − c^N)/2)
};

FactorizationData factorization_data(double gamma, int n_sites);

enum class StateLabel { SymPlus, SymMinus, FactPlus, FactMinus, CrossPM, CrossMP, Delta, XxxMember, XxxSymmetric };

std::string_view to_string(StateLabel s);

/// Uniform λ grid; the default is 201 points on [−10, 10].
std::vector<double> lambda_grid(double lambda_max = 10.0, int points = 201);

/// Sampled generating function G(λ) = ⟨e^{i(λ/N)Σσˣ}⟩ of a named state.
struct GenFunSeries {
  StateLabel state = StateLabel::SymPlus;
  int n_sites = 0;
  std::vector<double> lambda;
  std::vector<std::complex<double>> values;
};

/// Two-spin concurrence terms. p_offdiag is the average of
/// |↑↑⟩⟨↓↓| + |↓↓⟩⟨↑↑|, p_iii the average of |↑↓⟩⟨↑↓|, and
/// c_direct = ½ p_offdiag − p_iii.
struct ConcurrenceBreakdown {
  double p_offdiag = 0.0;
  double p_iii = 0.0;
  double c_direct = 0.0;
  /// Closed-form concurrence of the state; for |α±⟩ this is
  /// c^{N−2} sin²2α / (1 ± c^N), which coincides with Wootters.
  std::optional<double> c_closed_form;
  std::optional<double> c_wootters;
};

/// Concurrence of |α±⟩ at the factorizing field (site-pair independent).
/// Throws InvalidArgument for γ = 0, where the closed form degenerates.
ConcurrenceBreakdown concurrence_symmetric(double gamma, int n_sites, Branch branch);

/// Base of the large-N exponential decay of the |α±⟩ concurrence,
/// √((1−γ)/(1+γ)) = cos 2α.
double concurrence_decay_base(double gamma);

/// (cos(λ/N) ± i sin(λ/N) sin 2α)^N for |Ψ_F±⟩.
GenFunSeries genfun_factorized(double gamma, int n_sites, Branch branch, const std::vector<double>& lambda);

/// ⟨Ψ_F±|e^{i(λ/N)Σσˣ}|Ψ_F∓⟩ = (cos(λ/N) cos 2α)^N (both orders agree).
GenFunSeries genfun_cross(double gamma, int n_sites, const std::vector<double>& lambda);

struct SymmetricGenFun {
  GenFunSeries g;      ///< G(λ, α±)
  GenFunSeries delta;  ///< G(λ, α±) − ½[G(λ, Ψ_F⁺) + G(λ, Ψ_F⁻)]
};

/// G(λ, α±) = [G⁺ + G⁻ ± 2G̃] / (4u±²).
SymmetricGenFun genfun_symmetric(double gamma, int n_sites, Branch branch, const std::vector<double>& lambda);

}  // namespace symcat
