#include <cmath>

#include "doctest.h"
#include "netrisk/errors.hpp"
#include "netrisk/rational.hpp"

using namespace netrisk;

namespace {
const cplx I(0.0, 1.0);

// 1/(1+z^2)^n kept in factored form
RationalForm laplace_power(int n) { return RationalForm(1.0, {1.0}, {{I, n}, {-I, n}}); }
}  // namespace

TEST_CASE("factored form evaluates like the expanded function") {
  const RationalForm f(2.0, {1.0, 3.0}, {{cplx(1.0, 2.0), 2}, {cplx(-0.5, -1.0), 1}});
  for (cplx z : {cplx(0.3, 0.1), cplx(-2.0, 0.7), cplx(5.0, -3.0)}) {
    const cplx direct = 2.0 * (1.0 + 3.0 * z) / ((z - cplx(1.0, 2.0)) * (z - cplx(1.0, 2.0)) * (z - cplx(-0.5, -1.0)));
    CHECK(std::abs(f(z) - direct) < 1e-13 * std::abs(direct));
  }
  CHECK(f.denominator_degree() == 3);
  CHECK(f.decays());
}

TEST_CASE("derivative matches a central difference") {
  const RationalForm f = laplace_power(3);
  for (double x : {-1.3, 0.0, 0.4, 2.0}) {
    const double h = 1e-5;
    const cplx fd = (f(x + h) - f(x - h)) / (2 * h);
    CHECK(std::abs(f.derivative(x) - fd) < 1e-9);
  }
}

TEST_CASE("products merge coincident poles") {
  const RationalForm sq = laplace_power(1) * laplace_power(1);
  REQUIRE(sq.poles().size() == 2);
  CHECK(sq.poles()[0].order == 2);
  CHECK(sq.poles()[1].order == 2);
  for (double t : {0.0, 0.5, 3.0}) CHECK(std::abs(sq(t) - std::pow(1 + t * t, -2.0)) < 1e-15);
}

TEST_CASE("conjugation mirrors the real line") {
  const RationalForm f(1.0, {1.0}, {{cplx(0.0, -2.0), 1}});  // 1/(z + 2i)
  const RationalForm g = f.conjugated();
  for (double t : {-1.0, 0.2, 4.0}) CHECK(std::abs(g(t) - std::conj(f(t))) < 1e-15);
}

TEST_CASE("principal parts of all poles rebuild a decaying function") {
  const RationalForm f(0.7, {1.0, -2.0}, {{cplx(0.0, 1.0), 2}, {cplx(1.0, -1.0), 1}, {cplx(-1.0, 3.0), 3}});
  const RationalForm all = f.principal_parts([](cplx) { return true; });
  const RationalForm upper = f.principal_parts([](cplx a) { return a.imag() > 0; });
  const RationalForm lower = f.principal_parts([](cplx a) { return a.imag() < 0; });
  for (cplx z : {cplx(0.3, 0.2), cplx(-4.0, 0.0), cplx(2.0, -5.0)}) {
    CHECK(std::abs(all(z) - f(z)) < 1e-12);
    CHECK(std::abs(upper(z) + lower(z) - f(z)) < 1e-12);
  }
}

TEST_CASE("manufactured order-2 pole: principal part of 1/(z^2+1)^2 at i") {
  // (z-i)^-2 coefficient -1/4, (z-i)^-1 coefficient -i/4
  const RationalForm pp = laplace_power(2).principal_parts([](cplx a) { return a.imag() > 0; });
  for (cplx z : {cplx(0.5, 0.0), cplx(2.0, 1.0)}) {
    const cplx expect = -0.25 / ((z - I) * (z - I)) - 0.25 * I / (z - I);
    CHECK(std::abs(pp(z) - expect) < 1e-14);
  }
}

TEST_CASE("taylor coefficients of the regular part") {
  // (z-i)^2 f(z) = 1/(z+i)^2 = sum_k (k+1)(-1)^k (2i)^{-k-2} (z-i)^k
  const RationalForm f = laplace_power(2);
  const auto c = f.regular_taylor(0, 4, {1.0});
  for (int k = 0; k < 4; ++k) {
    const cplx expect = double(k + 1) * std::pow(-1.0, k) * std::pow(2.0 * I, -k - 2);
    CHECK(std::abs(c[k] - expect) < 1e-14);
  }
}

TEST_CASE("polynomial helpers") {
  const std::vector<cplx> p{1.0, -3.0, 2.0};  // 1 - 3z + 2z^2
  CHECK(std::abs(poly::eval(p, 2.0) - 3.0) < 1e-15);
  CHECK(std::abs(poly::eval(poly::derivative(p), 2.0) - 5.0) < 1e-15);
  CHECK(std::abs(poly::eval(poly::shift(p, 1.0), 0.5) - poly::eval(p, 1.5)) < 1e-15);
  CHECK(std::abs(poly::eval(poly::linear_power(cplx(1.0), 3), 3.0) - 8.0) < 1e-15);
  CHECK(std::abs(poly::eval(poly::multiply(p, p), 0.7) - std::pow(poly::eval(p, 0.7), 2)) < 1e-14);
}

TEST_CASE("non-positive pole orders are rejected") {
  CHECK_THROWS_AS(RationalForm(1.0, {1.0}, {{I, 0}}), ValidationError);
}
