#include "netrisk/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "netrisk/errors.hpp"
#include "netrisk/quadrature.hpp"
#include "netrisk/special.hpp"

namespace netrisk {
namespace {

constexpr cplx kI{0.0, 1.0};

void check_rational(const RationalForm& f) {
  for (const Pole& p : f.poles()) {
    if (std::fabs(p.location.imag()) <= 1e-14 * std::max(1.0, std::abs(p.location)))
      throw ValidationError("rational c.f. has a pole on the real axis");
  }
  if (!f.decays()) throw ValidationError("rational c.f. does not decay at infinity");
}

// Sum over upper poles of the residue of f(z) * kernel(z), where the kernel's
// Taylor coefficients about a pole are produced by `kernel_series`.
template <class KernelSeries>
cplx upper_residue_sum(const RationalForm& f, KernelSeries kernel_series) {
  cplx total = 0.0;
  for (std::size_t i = 0; i < f.poles().size(); ++i) {
    const Pole& p = f.poles()[i];
    if (p.location.imag() <= 0.0) continue;
    const auto n = static_cast<std::size_t>(p.order);
    total += f.regular_taylor(i, n, kernel_series(p.location, n))[n - 1];
  }
  return total;
}

double abs_at(const CharFn& f, double t) { return std::max(std::abs(f(t)), std::abs(f(-t))); }

void check_decay(const CharFn& f) {
  const double near = abs_at(f, 1e3);
  const double far = abs_at(f, 1e7);
  if (!(far < 1e-2) || far > near + 1e-12)
    throw NumericError("c.f. does not decay at infinity; principal value undefined");
}

// First t on a doubling/halving grid with |f(t)| < 1/2; sets the panel scale.
double decay_scale(const CharFn& f) {
  double t = 1.0;
  if (abs_at(f, t) < 0.5) {
    while (t > 1e-6 && abs_at(f, 0.5 * t) < 0.5) t *= 0.5;
  } else {
    while (t < 1e6 && abs_at(f, t) >= 0.5) t *= 2.0;
  }
  return t;
}

}  // namespace

std::string to_string(HilbertMethod method) {
  switch (method) {
    case HilbertMethod::Auto: return "auto";
    case HilbertMethod::Residue: return "residue";
    case HilbertMethod::Dawson: return "dawson";
    case HilbertMethod::OneSided: return "onesided";
    case HilbertMethod::NumericPV: return "pv";
  }
  return "auto";
}

HilbertMethod parse_hilbert_method(const std::string& name) {
  if (name == "auto") return HilbertMethod::Auto;
  if (name == "residue") return HilbertMethod::Residue;
  if (name == "dawson") return HilbertMethod::Dawson;
  if (name == "onesided") return HilbertMethod::OneSided;
  if (name == "pv") return HilbertMethod::NumericPV;
  throw ValidationError("unknown Hilbert method '" + name + "'");
}

cplx hilbert_rational(const RationalForm& f, double omega) {
  check_rational(f);
  // 1/(w - z) = sum_j h^j / (w - a)^{j+1},  h = z - a
  const cplx sum = upper_residue_sum(f, [omega](cplx a, std::size_t n) {
    std::vector<cplx> k(n);
    const cplx inv = 1.0 / (omega - a);
    cplx power = inv;
    for (std::size_t j = 0; j < n; ++j, power *= inv) k[j] = power;
    return k;
  });
  return 2.0 * kI * sum - kI * f(omega);
}

cplx hilbert_rational_derivative(const RationalForm& f, double omega) {
  check_rational(f);
  // d/dw [1/(w - z)] = -1/(w - z)^2 = -sum_j (j+1) h^j / (w - a)^{j+2}
  const cplx sum = upper_residue_sum(f, [omega](cplx a, std::size_t n) {
    std::vector<cplx> k(n);
    const cplx inv = 1.0 / (omega - a);
    cplx power = inv * inv;
    for (std::size_t j = 0; j < n; ++j, power *= inv) k[j] = -static_cast<double>(j + 1) * power;
    return k;
  });
  return 2.0 * kI * sum - kI * f.derivative(omega);
}

double hilbert_gaussian(double variance, double omega) {
  if (variance < 0.0) throw ValidationError("variance must be non-negative");
  return 2.0 / std::sqrt(std::numbers::pi) * dawson(omega * std::sqrt(0.5 * variance));
}

cplx hilbert_one_sided(const CharFn& f, double omega) {
  switch (f.structure().side) {
    case Side::Positive: return -kI * f(omega);
    case Side::Negative: return kI * f(omega);
    case Side::Both: break;
  }
  throw ValidationError("not an analytic signal: c.f. is not one-sided");
}

HilbertValue hilbert_numeric_pv(const CharFn& f, double omega, double tol) {
  if (!(tol > 0.0)) throw ValidationError("tolerance must be positive");
  check_decay(f);
  const double t0 = decay_scale(f);
  const double target = std::numbers::pi * tol;  // tolerance on the raw integral
  const quad::Integrand integrand = [&f, omega](double u) {
    return (f(omega - u) - f(omega + u)) / u;
  };
  constexpr double kMaxPanels = 20000.0;

  double upper = 16.0 * t0 + 2.0 * std::fabs(omega);
  quad::Result head = quad::adaptive_gk15(integrand, 0.0, upper, 0.25 * target, 0.5 * t0);
  double quad_error = head.error;
  cplx sum = head.value;
  std::vector<cplx> partials{sum};
  double last_step = std::numeric_limits<double>::infinity();
  double budget = 0.125 * target;
  double achieved = std::numeric_limits<double>::infinity();

  for (int round = 0; round < 48; ++round) {
    const double width = std::max(0.5 * t0, upper / kMaxPanels);
    quad::Result piece = quad::adaptive_gk15(integrand, upper, 2.0 * upper, budget, width);
    quad_error += piece.error;
    budget *= 0.5;
    upper *= 2.0;
    sum += piece.value;
    partials.push_back(sum);

    const double step = std::abs(piece.value);
    if (step < 0.25 * target && last_step < 0.25 * target) {
      const double err = (quad_error + step) / std::numbers::pi;
      return {sum / std::numbers::pi, HilbertMethod::NumericPV, err};
    }
    last_step = step;
    if (partials.size() >= 5) {
      const auto wynn = quad::wynn_epsilon(partials);
      const double err = wynn.error + quad_error;
      achieved = std::min(achieved, err / std::numbers::pi);
      if (wynn.error < 0.25 * target && err < target) {
        return {wynn.value / std::numbers::pi, HilbertMethod::NumericPV, err / std::numbers::pi};
      }
    } else {
      achieved = std::min(achieved, (quad_error + step) / std::numbers::pi);
    }
  }
  throw NumericError("principal-value quadrature did not reach tolerance", achieved);
}

HilbertValue hilbert(const CharFn& f, double omega, HilbertMethod method, double tol) {
  const Structure& s = f.structure();
  if (method == HilbertMethod::Auto) {
    switch (s.kind()) {
      case StructureKind::RationalPoles: method = HilbertMethod::Residue; break;
      case StructureKind::GaussianEven: method = HilbertMethod::Dawson; break;
      case StructureKind::OneSidedPositive:
      case StructureKind::OneSidedNegative: method = HilbertMethod::OneSided; break;
      default: method = HilbertMethod::NumericPV; break;
    }
  }
  switch (method) {
    case HilbertMethod::Residue:
      if (!s.rational) throw ValidationError("residue method needs a rational c.f.");
      return {hilbert_rational(*s.rational, omega), method, 0.0};
    case HilbertMethod::Dawson:
      if (!s.gaussian_variance) throw ValidationError("dawson method needs a Gaussian c.f.");
      return {hilbert_gaussian(*s.gaussian_variance, omega), method, 0.0};
    case HilbertMethod::OneSided:
      return {hilbert_one_sided(f, omega), method, 0.0};
    default:
      return hilbert_numeric_pv(f, omega, tol);
  }
}

Slope hilbert_deriv_at_zero(const CharFn& f, HilbertMethod method, double tol) {
  const Structure& s = f.structure();
  if (method == HilbertMethod::Auto) {
    switch (s.kind()) {
      case StructureKind::RationalPoles: method = HilbertMethod::Residue; break;
      case StructureKind::GaussianEven: method = HilbertMethod::Dawson; break;
      case StructureKind::OneSidedPositive:
      case StructureKind::OneSidedNegative: method = HilbertMethod::OneSided; break;
      default: method = HilbertMethod::NumericPV; break;
    }
  }
  switch (method) {
    case HilbertMethod::Residue:
      if (!s.rational) throw ValidationError("residue method needs a rational c.f.");
      return {hilbert_rational_derivative(*s.rational, 0.0).real(), method, 0.0};
    case HilbertMethod::Dawson:
      if (!s.gaussian_variance) throw ValidationError("dawson method needs a Gaussian c.f.");
      return {std::sqrt(2.0 * *s.gaussian_variance / std::numbers::pi), method, 0.0};
    case HilbertMethod::OneSided: {
      if (s.side == Side::Both) throw ValidationError("not an analytic signal: c.f. is not one-sided");
      const double mean = cf_mean(f);
      return {s.side == Side::Positive ? mean : -mean, method, 0.0};
    }
    default: break;
  }

  // Re H is odd, so Re H(h)/h = H'(0) + c2 h^2 + c4 h^4 + ...
  const double steps[] = {1e-2, 5e-3, 2.5e-3};
  std::vector<cplx> quotients;
  double propagated = 0.0;
  for (double h : steps) {
    const HilbertValue v = hilbert_numeric_pv(f, h, tol * h);
    quotients.push_back(v.value.real() / h);
    propagated = std::max(propagated, v.error / h);
  }
  const auto extrapolated = quad::richardson_even(quotients);
  return {extrapolated.value.real(), HilbertMethod::NumericPV, extrapolated.error + 2.0 * propagated};
}

}  // namespace netrisk
