#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <thread>
#include <vector>

#include "symcat/error.hpp"

namespace symcat {

/// Uniform grid on [0, 2π) for the periodic trapezoid rule.
class PeriodicGrid {
 public:
  explicit PeriodicGrid(int n_nodes);

  int n_nodes() const { return n_nodes_; }
  double weight() const { return weight_; }
  double node(int i) const { return weight_ * i; }
  std::vector<double> nodes() const;

 private:
  int n_nodes_;
  double weight_;
};

namespace detail {

// Neumaier-compensated complex accumulator; fixed order, so deterministic.
class ComplexSum {
 public:
  void add(std::complex<double> z) {
    add_part(re_, re_c_, z.real());
    add_part(im_, im_c_, z.imag());
  }
  std::complex<double> value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

}  // namespace detail

/// Trapezoid sum over the grid; exact for trigonometric polynomials of
/// degree < n_nodes.
template <class F>
std::complex<double> integrate_periodic_1d(F&& f, const PeriodicGrid& grid) {
  detail::ComplexSum acc;
  for (int i = 0; i < grid.n_nodes(); ++i) {
    acc.add(std::complex<double>(f(grid.node(i))));
  }
  return acc.value() * grid.weight();
}

/// Tensor-product trapezoid rule on [0, 2π)². Rows (outer nodes) are split
/// across `workers` threads; row sums are reduced in node order, so the
/// result does not depend on the worker count.
template <class F>
std::complex<double> integrate_periodic_2d(F&& f, const PeriodicGrid& grid, unsigned workers = 1) {
  const int n = grid.n_nodes();
  std::vector<std::complex<double>> rows(static_cast<std::size_t>(n));
  auto run_rows = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      const double x = grid.node(i);
      detail::ComplexSum acc;
      for (int j = 0; j < n; ++j) {
        acc.add(std::complex<double>(f(x, grid.node(j))));
      }
      rows[static_cast<std::size_t>(i)] = acc.value();
    }
  };
  if (workers <= 1 || n < 2) {
    run_rows(0, n);
  } else {
    const int nw = static_cast<int>(std::min<unsigned>(workers, static_cast<unsigned>(n)));
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(nw));
    for (int w = 0; w < nw; ++w) {
      pool.emplace_back(run_rows, n * w / nw, n * (w + 1) / nw);
    }
  }
  detail::ComplexSum total;
  for (const auto& r : rows) total.add(r);
  return total.value() * (grid.weight() * grid.weight());
}

/// Steepest-descent limit of the XXX two-spin concurrence:
/// ½ ∫x² e^{−Nx²/2} dx / ∫e^{−Nx²/2} dx = 1/(2N).
double gaussian_ratio_asymptote(int n_sites);

/// z^n for integer n ≥ 0. Repeated squaring up to n = 1000, log-space
/// exp(n·Log z) beyond (the principal branch is exact for integer n).
std::complex<double> int_pow(std::complex<double> z, int n);
double int_pow(double x, int n);

/// binom(n, n/2) / 2^n for even n, evaluated as a stable running product.
double central_binomial_fraction(int n);

}  // namespace symcat
