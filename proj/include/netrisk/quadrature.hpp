#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>

namespace netrisk::quad {

using Integrand = std::function<std::complex<double>(double)>;

struct Result {
  std::complex<double> value;
  double error = 0.0;
  std::size_t intervals = 0;
  bool converged = false;
};

/// Globally adaptive 15-point Gauss-Kronrod on [a, b]. The interval is first
/// cut into pieces no wider than `initial_width` so that oscillatory
/// integrands are resolved before the error estimate is trusted.
Result adaptive_gk15(const Integrand& f, double a, double b, double abs_tol,
                     double initial_width = 0.0,
                     std::size_t max_intervals = 400000);

struct Extrapolation {
  std::complex<double> value;
  double error;
};

/// Wynn epsilon extrapolation of a sequence of partial results.
Extrapolation wynn_epsilon(std::span<const std::complex<double>> partial);

/// Richardson table for an estimate with an even error expansion in h, given
/// values at h, h/2, h/4, ... (at least two entries).
Extrapolation richardson_even(std::span<const std::complex<double>> values);

}  // namespace netrisk::quad
