#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "netrisk/errors.hpp"
#include "netrisk/mc_oracle.hpp"

using namespace netrisk;

TEST_CASE("philox known answers") {
  using B = Philox4x32::Block;
  CHECK(Philox4x32::generate(0, B{0, 0, 0, 0}) == B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::generate(0xffffffffffffffffull, B{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}) ==
        B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::generate(0x299f31d0a4093822ull, B{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}) ==
        B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("cell streams are addressable and distinct") {
  CellStream a(1, 10, 3), b(1, 10, 3), c(1, 10, 4), d(2, 10, 3);
  for (int i = 0; i < 9; ++i) {
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
    CHECK(x != d());
  }
}

TEST_CASE("link values follow the link orientation") {
  const Link d = fixtures::directed(0, 1);
  const Link u = fixtures::undirected(0, 1);
  int negative = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    CHECK(sample_link_value(d, LaplaceSym{1.0}, 5, s, 0) <= 0.0);
    CHECK(sample_link_value(d, GammaDist{2.0, 1.0}, 5, s, 0) < 0.0);
    negative += sample_link_value(u, LaplaceSym{1.0}, 5, s, 0) < 0.0;
  }
  CHECK(negative > 400);
  CHECK(negative < 600);
}

TEST_CASE("estimates do not depend on the thread count") {
  const Market m = fixtures::load("example1.json").market;
  McOptions one{50000, 9, 1};
  McOptions many{50000, 9, 7};
  const auto a = mc_expected_exposure(m, Multilateral{1}, LaplaceSym{1.0}, one);
  const auto b = mc_expected_exposure(m, Multilateral{1}, LaplaceSym{1.0}, many);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].estimate.mean == b[i].estimate.mean);
    CHECK(a[i].estimate.std_error == b[i].estimate.std_error);
    CHECK(a[i].estimate.samples == 50000);
  }
  McOptions other = one;
  other.seed = 10;
  CHECK(mc_expected_exposure(m, Multilateral{1}, LaplaceSym{1.0}, other)[0].estimate.mean != a[0].estimate.mean);
}

TEST_CASE("standard error shrinks like one over root n") {
  const Market m = fixtures::pair(2);
  const auto small = mc_expected_exposure(m, Bilateral{}, NormalSym{1.0}, {40000, 3, 0});
  const auto large = mc_expected_exposure(m, Bilateral{}, NormalSym{1.0}, {640000, 3, 0});
  const double ratio = small[0].estimate.std_error / large[0].estimate.std_error;
  CHECK(ratio == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("totals use the creditor-side multilateral measure") {
  const Market cycle = fixtures::load("triangle_eulerian.json").market;
  const McTotals t = mc_market_totals(cycle, LaplaceSym{1.0}, 1, {100000, 1, 0});
  REQUIRE(t.multilateral);
  REQUIRE(t.multilateral_abs);
  CHECK(std::abs(t.bilateral.mean - 3.0) < 4 * t.bilateral.std_error);
  CHECK(std::abs(t.multilateral->mean - 1.5) < 4 * t.multilateral->std_error);
  CHECK(t.multilateral_abs->mean == doctest::Approx(2 * t.multilateral->mean).epsilon(1e-12));
}

TEST_CASE("sampling preconditions") {
  CHECK_THROWS_AS(mc_expected_exposure(fixtures::pair(1), Bilateral{}, LaplaceSym{1.0}, {100, 1, 0}),
                  ValidationError);
  CHECK_THROWS_AS(mc_expected_exposure(fixtures::pair(1), Bilateral{}, GammaDist{1.0, 1.0}, {10000, 1, 0}),
                  ValidationError);
}
