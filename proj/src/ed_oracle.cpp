#include "symcat/ed_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <string>

#include "symcat/error.hpp"

namespace symcat::ed {

namespace {

using Index = Eigen::Index;

inline int bit(std::uint64_t s, int l) { return static_cast<int>((s >> l) & 1U); }

Index dimension(int n_sites) { return Index{1} << n_sites; }

void require_same_space(const DenseState& a, const DenseState& b) {
  if (a.n_sites != b.n_sites || a.amplitudes.size() != b.amplitudes.size()) {
    throw InvalidArgument("states live on different Hilbert spaces");
  }
}

std::vector<Index> sector_indices(const Eigen::VectorXd& parity, double value) {
  std::vector<Index> idx;
  for (Index i = 0; i < parity.size(); ++i) {
    if (parity[i] == value) idx.push_back(i);
  }
  return idx;
}

void validate_parity(const Eigen::MatrixXd& h, const Eigen::VectorXd& parity) {
  if (h.rows() != h.cols() || h.rows() != parity.size()) {
    throw InvalidArgument("Hamiltonian and parity operator dimensions differ");
  }
  for (Index i = 0; i < parity.size(); ++i) {
    if (parity[i] != 1.0 && parity[i] != -1.0) throw InvalidArgument("parity operator must be diagonal with entries +-1");
  }
  const double scale = 1.0 + h.cwiseAbs().maxCoeff();
  for (Index j = 0; j < h.cols(); ++j) {
    for (Index i = 0; i < h.rows(); ++i) {
      if (parity[i] != parity[j] && std::abs(h(i, j)) > 1e-12 * scale) {
        throw InvalidArgument("Hamiltonian does not commute with the parity operator");
      }
    }
  }
}

}  // namespace

double dense_matrix_bytes(int n_sites) {
  const double dim = std::ldexp(1.0, n_sites);
  return dim * dim * sizeof(double);
}

void check_capacity(int n_sites, int cap) {
  if (n_sites > cap) {
    std::ostringstream msg;
    msg << "N = " << n_sites << " exceeds the dense-oracle cap of " << cap << " sites (one 2^N x 2^N matrix needs "
        << dense_matrix_bytes(n_sites) / (1024.0 * 1024.0 * 1024.0) << " GiB)";
    throw CapacityError(msg.str());
  }
  if (n_sites < 1 || n_sites > 30) throw InvalidArgument("n_sites out of range for a dense state");
}

Eigen::MatrixXd build_hamiltonian(const ChainParams& params, int cap) {
  params.validate();
  check_capacity(params.n_sites, cap);
  const int n = params.n_sites;
  const Index dim = dimension(n);
  const double j = params.coupling();

  // Bond coefficients of σˣσˣ, σʸσʸ, σᶻσᶻ, and the on-site σᶻ field.
  double jx = 0, jy = 0, jz = 0, field = 0;
  if (params.model == Model::XY) {
    jx = j * (1.0 + params.gamma) / 2.0;
    jy = j * (1.0 - params.gamma) / 2.0;
    field = -params.h;
  } else {
    jx = jy = jz = -j;
  }

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (Index s = 0; s < dim; ++s) {
    const auto us = static_cast<std::uint64_t>(s);
    for (int l = 0; l < n; ++l) {
      const int m = (l + 1) % n;
      const bool same = bit(us, l) == bit(us, m);
      h(s, s) += field * (bit(us, l) ? -1.0 : 1.0) + jz * (same ? 1.0 : -1.0);
      // σʸσʸ on |ab⟩ flips both spins with sign −1 if a = b, +1 otherwise.
      const double flip = jx + jy * (same ? -1.0 : 1.0);
      if (flip != 0.0) {
        const auto t = static_cast<Index>(us ^ (std::uint64_t{1} << l) ^ (std::uint64_t{1} << m));
        h(t, s) += flip;
      }
    }
  }
  return h;
}

Eigen::VectorXd parity_diagonal(int n_sites) {
  const Index dim = dimension(n_sites);
  Eigen::VectorXd p(dim);
  for (Index s = 0; s < dim; ++s) p[s] = std::popcount(static_cast<std::uint64_t>(s)) % 2 == 0 ? 1.0 : -1.0;
  return p;
}

SectorMinima parity_resolved_minima(const Eigen::MatrixXd& hamiltonian, const Eigen::VectorXd& parity) {
  validate_parity(hamiltonian, parity);
  auto lowest = [&](double value) {
    const auto idx = sector_indices(parity, value);
    if (idx.empty()) throw ComputationError("empty parity sector");
    const Eigen::MatrixXd block = hamiltonian(idx, idx);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
  };
  return {lowest(1.0), lowest(-1.0)};
}

DenseState parity_sector_ground_state(const Eigen::MatrixXd& hamiltonian, const Eigen::VectorXd& parity,
                                      Parity sector) {
  validate_parity(hamiltonian, parity);
  const auto idx = sector_indices(parity, sector == Parity::Even ? 1.0 : -1.0);
  const Eigen::MatrixXd block = hamiltonian(idx, idx);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block);
  const auto& ev = es.eigenvalues();
  if (ev.size() > 1 && ev(1) - ev(0) < 1e-8) {
    throw ComputationError("lowest level of the " + std::string(to_string(sector)) + " sector is degenerate");
  }
  DenseState out;
  out.n_sites = std::countr_zero(static_cast<std::uint64_t>(hamiltonian.rows()));
  out.amplitudes = Eigen::VectorXcd::Zero(hamiltonian.rows());
  for (std::size_t k = 0; k < idx.size(); ++k) out.amplitudes[idx[k]] = es.eigenvectors()(static_cast<Index>(k), 0);
  return out;
}

Eigen::VectorXd spectrum(const Eigen::MatrixXd& hamiltonian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hamiltonian, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

GroundLevel ground_level(const Eigen::MatrixXd& hamiltonian, double tol) {
  const auto ev = spectrum(hamiltonian);
  GroundLevel g{ev(0), 0};
  for (Index i = 0; i < ev.size() && ev(i) - ev(0) <= tol; ++i) ++g.degeneracy;
  return g;
}

Eigen::MatrixXcd total_spin(int n_sites, char axis) {
  const Index dim = dimension(n_sites);
  const std::complex<double> i_unit(0.0, 1.0);
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
  for (Index s = 0; s < dim; ++s) {
    const auto us = static_cast<std::uint64_t>(s);
    for (int l = 0; l < n_sites; ++l) {
      const auto t = static_cast<Index>(us ^ (std::uint64_t{1} << l));
      switch (axis) {
        case 'x': op(t, s) += 1.0; break;
        case 'y': op(t, s) += bit(us, l) ? -i_unit : i_unit; break;
        case 'z': op(s, s) += bit(us, l) ? -1.0 : 1.0; break;
        default: throw InvalidArgument("axis must be one of x, y, z");
      }
    }
  }
  return op;
}

double commutator_norm(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a * b - b * a).norm(); }

DenseState build_product_state(const std::vector<SiteAngles>& sites) {
  if (sites.empty()) throw InvalidArgument("product state needs at least one site");
  check_capacity(static_cast<int>(sites.size()), 30);
  Eigen::VectorXcd amp = Eigen::VectorXcd::Ones(1);
  for (const auto& site : sites) {
    const Index half = amp.size();
    Eigen::VectorXcd next(2 * half);
    next.head(half) = amp * std::cos(site.theta);
    next.tail(half) = amp * (std::polar(1.0, site.phi) * std::sin(site.theta));
    amp.swap(next);
  }
  return {static_cast<int>(sites.size()), std::move(amp)};
}

DenseState build_product_state(int n_sites, SiteAngles angles) {
  return build_product_state(std::vector<SiteAngles>(static_cast<std::size_t>(n_sites), angles));
}

DenseState symmetrize_state(const std::vector<DenseState>& states, const std::vector<std::complex<double>>& weights) {
  if (states.empty() || states.size() != weights.size()) {
    throw InvalidArgument("symmetrize_state needs one weight per state");
  }
  DenseState out{states.front().n_sites, Eigen::VectorXcd::Zero(states.front().amplitudes.size())};
  double scale = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    require_same_space(states[i], out);
    out.amplitudes += weights[i] * states[i].amplitudes;
    scale += std::abs(weights[i]) * states[i].norm();
  }
  const double norm = out.norm();
  if (!(norm > 1e-10 * scale)) {
    throw ComputationError("superposition has zero norm (components cancel identically)");
  }
  out.amplitudes /= norm;
  return out;
}

EigenResidual eigen_residual(const Eigen::MatrixXd& hamiltonian, const DenseState& state) {
  if (hamiltonian.cols() != state.amplitudes.size()) throw InvalidArgument("state and Hamiltonian dimensions differ");
  const Eigen::VectorXd re = state.amplitudes.real();
  const Eigen::VectorXd im = state.amplitudes.imag();
  Eigen::VectorXcd h_psi(state.amplitudes.size());
  h_psi.real() = hamiltonian * re;
  h_psi.imag() = hamiltonian * im;
  const double norm_sq = state.amplitudes.squaredNorm();
  const double energy = state.amplitudes.dot(h_psi).real() / norm_sq;
  return {energy, (h_psi - energy * state.amplitudes).norm() / std::sqrt(norm_sq)};
}

TwoSpinRDM reduce_two_spin(const DenseState& state, int i, int j) {
  if (i == j) throw InvalidArgument("reduce_two_spin needs two distinct sites");
  if (i < 0 || j < 0 || i >= state.n_sites || j >= state.n_sites) throw InvalidArgument("site index out of range");
  TwoSpinRDM out;
  out.site_i = i;
  out.site_j = j;
  out.rho.setZero();
  const std::uint64_t mask_i = std::uint64_t{1} << i;
  const std::uint64_t mask_j = std::uint64_t{1} << j;
  const auto& psi = state.amplitudes;
  for (Index s = 0; s < psi.size(); ++s) {
    const auto us = static_cast<std::uint64_t>(s);
    const int a = 2 * bit(us, i) + bit(us, j);
    const std::uint64_t rest = us & ~(mask_i | mask_j);
    for (int b = 0; b < 4; ++b) {
      const std::uint64_t sb = rest | ((b & 2) ? mask_i : 0) | ((b & 1) ? mask_j : 0);
      out.rho(a, b) += psi[s] * std::conj(psi[static_cast<Index>(sb)]);
    }
  }
  return out;
}

double wootters_concurrence(const TwoSpinRDM& rdm) {
  constexpr double kTol = 1e-10;
  const Eigen::Matrix4cd& rho = rdm.rho;
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kTol) throw InvalidArgument("density matrix is not Hermitian");
  if (std::abs(rho.trace() - 1.0) > kTol) throw InvalidArgument("density matrix trace differs from 1");
  const Eigen::Matrix4cd herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(herm);
  if (es.eigenvalues()(0) < -kTol) throw InvalidArgument("density matrix is not positive semidefinite");

  // ρ = W W† with W's columns √p_k |v_k⟩, dropping numerically null directions.
  Eigen::Matrix<std::complex<double>, 4, Eigen::Dynamic> w(4, 0);
  for (int k = 0; k < 4; ++k) {
    const double p = es.eigenvalues()(k);
    if (p > 1e-14) {
      w.conservativeResize(Eigen::NoChange, w.cols() + 1);
      w.col(w.cols() - 1) = std::sqrt(p) * es.eigenvectors().col(k);
    }
  }
  Eigen::Matrix4cd spin_flip = Eigen::Matrix4cd::Zero();
  spin_flip(0, 3) = spin_flip(3, 0) = -1.0;
  spin_flip(1, 2) = spin_flip(2, 1) = 1.0;
  const Eigen::MatrixXcd tau = w.transpose() * spin_flip * w;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(tau);
  const auto& sv = svd.singularValues();
  double c = sv.size() > 0 ? sv(0) : 0.0;
  for (Index k = 1; k < sv.size(); ++k) c -= sv(k);
  return std::max(0.0, c);
}

double direct_concurrence(const TwoSpinRDM& rdm) {
  const double offdiag = (rdm.rho(0, 3) + rdm.rho(3, 0)).real();
  return 0.5 * std::abs(offdiag) - rdm.rho(1, 1).real();
}

std::complex<double> genfun_matrix_element(const DenseState& bra, const DenseState& ket, double lambda) {
  require_same_space(bra, ket);
  const double a = lambda / ket.n_sites;
  const double ca = std::cos(a);
  const std::complex<double> isa(0.0, std::sin(a));
  Eigen::VectorXcd psi = ket.amplitudes;
  for (int l = 0; l < ket.n_sites; ++l) {
    const Index m = Index{1} << l;
    for (Index s = 0; s < psi.size(); ++s) {
      if (s & m) continue;
      const auto x0 = psi[s];
      const auto x1 = psi[s | m];
      psi[s] = ca * x0 + isa * x1;
      psi[s | m] = isa * x0 + ca * x1;
    }
  }
  return bra.amplitudes.dot(psi);
}

}  // namespace symcat::ed
