#pragma once

#include <string_view>

namespace symcat {

enum class Model { XY, XXX };

enum class Parity { Even, Odd };

constexpr Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }
constexpr std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }
constexpr std::string_view to_string(Model m) { return m == Model::XY ? "XY" : "XXX"; }

/// Branch of a symmetric superposition: |α+⟩ (even) or |α-⟩ (odd).
enum class Branch { Plus, Minus };

constexpr double sign_of(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }

/// Parameters of a periodic spin-1/2 chain.
///
/// XY:  H = Σ_l [ J(1+γ)/2 σˣσˣ + J(1−γ)/2 σʸσʸ − h σᶻ ],  J = −1.
/// XXX: H = −J Σ_l σ⃗_l·σ⃗_{l+1},                            J = +1.
///
/// Energies are in units of |J|. The XY field couples with −σᶻ so that the
/// large-field ground state is fully polarized up; the spectrum is identical
/// to the +σᶻ convention (conjugate by Πσˣ).
struct ChainParams {
  Model model = Model::XY;
  int n_sites = 8;
  double gamma = 0.0;
  double h = 0.0;

  static ChainParams xy(int n_sites, double gamma, double h);
  static ChainParams xxx(int n_sites);

  /// Exchange constant of the model's fixed ferromagnetic convention.
  double coupling() const { return model == Model::XY ? -1.0 : 1.0; }

  /// Throws InvalidArgument on any violated invariant.
  void validate() const;
};

}  // namespace symcat
