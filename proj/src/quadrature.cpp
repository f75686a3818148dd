#include "symcat/quadrature.hpp"

#include <numbers>
#include <string>

namespace symcat {

PeriodicGrid::PeriodicGrid(int n_nodes) : n_nodes_(n_nodes), weight_(0.0) {
  if (n_nodes < 2) {
    throw InvalidArgument("periodic grid needs at least 2 nodes, got " + std::to_string(n_nodes));
  }
  weight_ = 2.0 * std::numbers::pi / n_nodes;
}

std::vector<double> PeriodicGrid::nodes() const {
  std::vector<double> out(static_cast<std::size_t>(n_nodes_));
  for (int i = 0; i < n_nodes_; ++i) out[static_cast<std::size_t>(i)] = node(i);
  return out;
}

double gaussian_ratio_asymptote(int n_sites) {
  if (n_sites < 1) throw InvalidArgument("n_sites must be positive");
  return 0.5 / n_sites;
}

namespace {
constexpr int kLogSpaceThreshold = 1000;
}

std::complex<double> int_pow(std::complex<double> z, int n) {
  if (n < 0) throw InvalidArgument("int_pow: negative exponent");
  if (n > kLogSpaceThreshold) {
    if (z == std::complex<double>(0.0, 0.0)) return {0.0, 0.0};
    return std::exp(static_cast<double>(n) * std::log(z));
  }
  std::complex<double> result(1.0, 0.0);
  while (n > 0) {
    if (n & 1) result *= z;
    z *= z;
    n >>= 1;
  }
  return result;
}

double int_pow(double x, int n) {
  if (n < 0) throw InvalidArgument("int_pow: negative exponent");
  double result = 1.0;
  while (n > 0) {
    if (n & 1) result *= x;
    x *= x;
    n >>= 1;
  }
  return result;
}

double central_binomial_fraction(int n) {
  if (n < 0 || n % 2 != 0) throw InvalidArgument("central_binomial_fraction needs even n >= 0");
  double r = 1.0;
  for (int j = 1; j <= n / 2; ++j) r *= (2.0 * j - 1.0) / (2.0 * j);
  return r;
}

}  // namespace symcat
