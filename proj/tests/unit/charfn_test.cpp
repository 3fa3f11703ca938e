#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "netrisk/charfn.hpp"
#include "netrisk/errors.hpp"
#include "netrisk/mc_oracle.hpp"

using namespace netrisk;

namespace {

const DistributionSpec catalog[] = {NormalSym{1.5}, LaplaceSym{0.7}, UniformSym{2.0}, GammaDist{2.5, 0.4},
                                    ExponentialDist{1.3}};

// Empirical c.f. of n draws, sign as in `sample`.
cplx empirical(const DistributionSpec& d, std::optional<int> sign, double t, int n) {
  cplx acc;
  for (int i = 0; i < n; ++i) {
    CellStream rng(7, static_cast<std::uint64_t>(i), 0);
    acc += std::polar(1.0, t * netrisk::sample(d, sign, rng));
  }
  return acc / double(n);
}

}  // namespace

TEST_CASE("catalog c.f.s are Hermitian, bounded and equal 1 at 0") {
  for (const auto& d : catalog) {
    const CharFn f = charfn_of(d);
    CHECK(std::abs(f(0.0) - 1.0) < 1e-15);
    for (double t : {0.1, 0.9, 3.0, 11.0}) {
      CHECK(std::abs(f(-t) - std::conj(f(t))) < 1e-14);
      CHECK(std::abs(f(t)) <= 1.0 + 1e-15);
    }
  }
}

TEST_CASE("catalog c.f.s match empirical c.f.s of the samplers") {
  const int n = 200000;
  const double band = 5.0 / std::sqrt(double(n));
  for (const auto& d : catalog) {
    const CharFn f = charfn_of(d);
    for (double t : {0.3, 1.1}) CHECK(std::abs(f(t) - empirical(d, std::nullopt, t, n)) < band);
    if (is_two_sided(d)) {
      const CharFn p = pos_abs_cf(f);
      const CharFn q = neg_abs_cf(f);
      for (double t : {0.4, 1.7}) {
        CHECK(std::abs(p(t) - empirical(d, 1, t, n)) < band);
        CHECK(std::abs(q(t) - empirical(d, -1, t, n)) < band);
      }
    }
  }
}

TEST_CASE("negation conjugates and flips the mean") {
  for (const auto& d : catalog) {
    const CharFn f = is_two_sided(d) ? pos_abs_cf(charfn_of(d)) : charfn_of(d);
    const CharFn g = cf_negate(f);
    for (double t : {0.2, 2.0}) CHECK(std::abs(g(t) - std::conj(f(t))) < 1e-15);
    CHECK(cf_mean(g) == doctest::Approx(-cf_mean(f)).epsilon(1e-12));
    CHECK(cf_mean(f) == doctest::Approx(mean_abs(d)).epsilon(1e-9));
  }
}

TEST_CASE("positive and negative absolute values are conjugate") {
  const CharFn f = charfn_of(LaplaceSym{1.0});
  const CharFn p = pos_abs_cf(f);
  const CharFn q = neg_abs_cf(f);
  for (double t : {0.3, 1.0, 5.0}) {
    CHECK(std::abs(q(t) - std::conj(p(t))) < 1e-15);
    // Re of the analytic signal is the base
    CHECK(std::abs(p(t).real() - f(t).real()) < 1e-15);
    CHECK(std::abs(p(t).imag() - t / (1 + t * t)) < 1e-15);
  }
}

TEST_CASE("products and powers multiply pointwise and add means") {
  const CharFn a = pos_abs_cf(charfn_of(NormalSym{1.0}));
  const CharFn b = charfn_of(LaplaceSym{2.0});
  const std::vector<CharFn> factors{a, b, cf_negate(a)};
  const CharFn prod = cf_product(factors);
  for (double t : {0.5, 1.5}) CHECK(std::abs(prod(t) - a(t) * b(t) * std::conj(a(t))) < 1e-15);
  CHECK(std::abs(cf_mean(prod)) < 1e-9);

  const CharFn cube = cf_power(a, 3);
  CHECK(std::abs(cube(0.8) - std::pow(a(0.8), 3)) < 1e-15);
  CHECK(cf_mean(cube) == doctest::Approx(3 * std::sqrt(2 / std::numbers::pi)).epsilon(1e-9));
  CHECK(std::abs(cf_power(a, 0)(1.0) - 1.0) < 1e-15);
}

TEST_CASE("structure metadata drives dispatch") {
  CHECK(charfn_of(LaplaceSym{}).structure().kind() == StructureKind::RationalPoles);
  CHECK(charfn_of(NormalSym{}).structure().kind() == StructureKind::GaussianEven);
  CHECK(charfn_of(GammaDist{0.5, 1.0}).structure().kind() == StructureKind::OneSidedPositive);
  CHECK(cf_negate(charfn_of(GammaDist{1.5, 1.0})).structure().kind() == StructureKind::OneSidedNegative);
  // integer shapes are rational
  CHECK(charfn_of(ExponentialDist{}).structure().kind() == StructureKind::RationalPoles);
  CHECK(charfn_of(UniformSym{}).structure().kind() == StructureKind::EvenReal);
  const std::vector<CharFn> mixed{pos_abs_cf(charfn_of(NormalSym{})), neg_abs_cf(charfn_of(NormalSym{}))};
  CHECK(cf_product(mixed).structure().kind() == StructureKind::Generic);
}

TEST_CASE("absolute value needs an even real base") {
  CHECK_THROWS_AS(pos_abs_cf(charfn_of(GammaDist{2.0, 1.0})), ValidationError);
  CHECK_THROWS_AS(validate(NormalSym{-1.0}), ValidationError);
  CHECK_THROWS_AS(validate(GammaDist{1.0, std::nan("")}), ValidationError);
}
