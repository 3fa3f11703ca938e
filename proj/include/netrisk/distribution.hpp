#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <variant>

#include "netrisk/errors.hpp"

namespace netrisk {

/// Symmetric two-sided laws (zero mean).
struct NormalSym {
  double sigma = 1.0;
};
struct LaplaceSym {
  double scale = 1.0;
};
/// Uniform on [-half_width, half_width].
struct UniformSym {
  double half_width = 1.0;
};
/// One-sided laws on (0, inf). Gamma uses the shape/scale convention.
struct GammaDist {
  double shape = 1.0;
  double scale = 1.0;
};
struct ExponentialDist {
  double scale = 1.0;
};

using DistributionSpec = std::variant<NormalSym, LaplaceSym, UniformSym, GammaDist, ExponentialDist>;

/// Throws ValidationError on a non-positive or non-finite parameter.
void validate(const DistributionSpec& spec);
bool is_two_sided(const DistributionSpec& spec);
std::string describe(const DistributionSpec& spec);
/// E|X|: the mean of the positive absolute value for two-sided laws, the plain
/// mean for one-sided ones.
double mean_abs(const DistributionSpec& spec);
/// Second moment E[X^2].
double second_moment(const DistributionSpec& spec);

namespace detail {

/// Uniform double in the open interval (0, 1) with 53 random bits.
template <std::uniform_random_bit_generator G>
double open_unit(G& rng) {
  using R = typename G::result_type;
  std::uint64_t bits = 0;
  if constexpr (G::min() == 0 && G::max() == std::numeric_limits<std::uint64_t>::max()) {
    bits = static_cast<std::uint64_t>(rng()) >> 11;
  } else {
    static_assert(G::min() == 0 && G::max() == std::numeric_limits<std::uint32_t>::max(),
                  "generator must produce full 32- or 64-bit words");
    const auto hi = static_cast<std::uint64_t>(static_cast<R>(rng())) >> 5;  // 27 bits
    const auto lo = static_cast<std::uint64_t>(static_cast<R>(rng())) >> 6;  // 26 bits
    bits = (hi << 26) | lo;
  }
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

template <std::uniform_random_bit_generator G>
double standard_normal(G& rng) {
  const double u1 = open_unit(rng);
  const double u2 = open_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

// Marsaglia-Tsang; shape < 1 uses the U^{1/a} boost.
template <std::uniform_random_bit_generator G>
double standard_gamma(double shape, G& rng) {
  if (shape < 1.0) {
    const double g = standard_gamma(shape + 1.0, rng);
    return g * std::pow(open_unit(rng), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = 0.0;
    double v = 0.0;
    do {
      x = standard_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = open_unit(rng);
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

template <std::uniform_random_bit_generator G>
double draw(const DistributionSpec& spec, G& rng) {
  struct Visitor {
    G& rng;
    double operator()(const NormalSym& d) const { return d.sigma * standard_normal(rng); }
    double operator()(const LaplaceSym& d) const {
      const double u = open_unit(rng) - 0.5;
      const double mag = -d.scale * std::log1p(-2.0 * std::fabs(u));
      return u < 0 ? -mag : mag;
    }
    double operator()(const UniformSym& d) const {
      return d.half_width * (2.0 * open_unit(rng) - 1.0);
    }
    double operator()(const GammaDist& d) const { return d.scale * standard_gamma(d.shape, rng); }
    double operator()(const ExponentialDist& d) const {
      return -d.scale * std::log(open_unit(rng));
    }
  };
  return std::visit(Visitor{rng}, spec);
}

}  // namespace detail

/// One draw from the law, or from +|X| / -|X| when `sign` is given.
template <std::uniform_random_bit_generator G>
double sample(const DistributionSpec& spec, std::optional<int> sign, G& rng) {
  if (sign) {
    if (!is_two_sided(spec))
      throw ValidationError("signed sampling requires a two-sided distribution");
    if (*sign != 1 && *sign != -1) throw ValidationError("sign must be +1 or -1");
    return *sign * std::fabs(detail::draw(spec, rng));
  }
  return detail::draw(spec, rng);
}

}  // namespace netrisk
