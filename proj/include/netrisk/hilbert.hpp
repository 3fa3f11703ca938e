#pragma once

#include <complex>
#include <string>

#include "netrisk/charfn.hpp"
#include "netrisk/rational.hpp"

namespace netrisk {

enum class HilbertMethod { Auto, Residue, Dawson, OneSided, NumericPV };

std::string to_string(HilbertMethod method);
/// Parses auto|residue|dawson|onesided|pv.
HilbertMethod parse_hilbert_method(const std::string& name);

struct HilbertValue {
  cplx value;
  HilbertMethod method = HilbertMethod::Auto;
  /// Absolute error estimate; 0 for closed forms.
  double error = 0.0;
};

/// Residue sum over the upper half-plane poles minus i f(w).
cplx hilbert_rational(const RationalForm& f, double omega);
/// Exact derivative of hilbert_rational in omega.
cplx hilbert_rational_derivative(const RationalForm& f, double omega);

/// H{exp(-v t^2/2)}(w) = (2/sqrt(pi)) F(w sqrt(v/2)).
double hilbert_gaussian(double variance, double omega);

/// -i f(w) for a positive-side c.f., +i f(w) for a negative-side one.
cplx hilbert_one_sided(const CharFn& f, double omega);

/// (1/pi) int_0^inf [f(w-u) - f(w+u)] / u du by adaptive quadrature with a
/// growing cutoff. Throws NumericError if `tol` cannot be met.
HilbertValue hilbert_numeric_pv(const CharFn& f, double omega, double tol);

/// Dispatches on the structure of `f` unless a method is forced.
HilbertValue hilbert(const CharFn& f, double omega, HilbertMethod method = HilbertMethod::Auto,
                     double tol = 1e-7);

struct Slope {
  double value = 0.0;
  HilbertMethod method = HilbertMethod::Auto;
  double error = 0.0;
};

/// d/dw H{f}(w) at w = 0 (always real for a c.f.).
Slope hilbert_deriv_at_zero(const CharFn& f, HilbertMethod method = HilbertMethod::Auto,
                            double tol = 1e-9);

}  // namespace netrisk
