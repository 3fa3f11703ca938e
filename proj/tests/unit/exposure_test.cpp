#include <cmath>
#include <numbers>
#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "netrisk/errors.hpp"
#include "netrisk/exposure.hpp"

using namespace netrisk;

namespace {
const DistributionSpec laplace = LaplaceSym{1.0};
const DistributionSpec normal = NormalSym{1.0};
}  // namespace

TEST_CASE("trivial compositions take shortcuts") {
  CHECK(expected_exposure(SetSignature{}, laplace).expected == 0.0);
  CHECK(expected_exposure(SetSignature{0, 4, 0}, laplace).expected == 0.0);
  const SetValue claims = expected_exposure(SetSignature{3, 0, 0}, normal);
  CHECK(claims.method == "shortcut");
  CHECK(claims.expected == doctest::Approx(3 * std::sqrt(2 / std::numbers::pi)).epsilon(1e-14));
}

TEST_CASE("small compositions against direct laws") {
  // |X1| - |X2| is again unit Laplace: a difference of two unit exponentials
  const SetValue v = expected_exposure(SetSignature{1, 1, 0}, laplace);
  CHECK(v.expected == doctest::Approx(0.5).epsilon(1e-13));
  const SetValue g = expected_from_cf(netting_set_cf(SetSignature{1, 1, 0}, laplace));
  CHECK(g.expected == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(expected_exposure(SetSignature{0, 0, 2}, laplace).expected == doctest::Approx(0.75).epsilon(1e-13));
}

TEST_CASE("the eulerian shortcut applies only to balanced sets") {
  CHECK(eulerian_shortcut(SetSignature{0, 0, 3}, laplace).has_value());
  CHECK(eulerian_shortcut(SetSignature{2, 2, 0}, normal).has_value());
  CHECK_FALSE(eulerian_shortcut(SetSignature{2, 1, 0}, laplace).has_value());
  CHECK_FALSE(eulerian_shortcut(SetSignature{1, 1, 1}, laplace).has_value());
  CHECK_FALSE(eulerian_shortcut(SetSignature{}, laplace).has_value());
}

TEST_CASE("mean of the net position vanishes exactly for balanced sets") {
  for (std::size_t c = 0; c <= 3; ++c)
    for (std::size_t d = 0; d <= 3; ++d)
      for (std::size_t s = 0; s <= 2; ++s) {
        const double mean = cf_mean(netting_set_cf(SetSignature{c, d, s}, laplace));
        CHECK(mean == doctest::Approx((double(c) - double(d)) * 1.0).epsilon(1e-12));
      }
}

TEST_CASE("forcing numeric principal values reproduces closed forms") {
  ExposureOptions pv;
  pv.method = HilbertMethod::NumericPV;
  for (SetSignature sig : {SetSignature{0, 0, 2}, SetSignature{2, 1, 0}, SetSignature{1, 2, 1}}) {
    const double exact = expected_exposure(sig, laplace).expected;
    CHECK(std::abs(expected_exposure(sig, laplace, pv).expected - exact) < 1e-7);
  }
}

TEST_CASE("exposure grows with every added symmetric position") {
  double previous = 0.0;
  for (std::size_t n = 1; n <= 8; ++n) {
    const double e = expected_exposure(SetSignature{0, 0, n}, laplace).expected;
    CHECK(e > previous);
    previous = e;
  }
}

TEST_CASE("scale enters linearly") {
  const SetSignature sig{1, 2, 1};
  const double base = expected_exposure(sig, laplace).expected;
  CHECK(expected_exposure(sig, LaplaceSym{3.0}).expected == doctest::Approx(3 * base).epsilon(1e-12));
  const double nbase = expected_exposure(sig, normal).expected;
  CHECK(expected_exposure(sig, NormalSym{0.5}).expected == doctest::Approx(0.5 * nbase).epsilon(1e-6));
}

TEST_CASE("market reports are internally consistent") {
  const auto doc = fixtures::load("example1.json");
  const ExposureReport r = expected_market(doc.market, laplace, doc.convention);
  double by_set = 0.0;
  for (const auto& s : r.per_netting_set) by_set += s.value.expected;
  CHECK(by_set == doctest::Approx(r.market_total).epsilon(1e-14));
  CHECK(std::accumulate(r.per_participant.begin(), r.per_participant.end(), 0.0) ==
        doctest::Approx(r.market_total).epsilon(1e-14));
  CHECK(r.multilateral_component + r.bilateral_component == doctest::Approx(r.market_total).epsilon(1e-14));
  CHECK(r.multilateral_component == doctest::Approx(0.5 + 2 * 0.75 + 15.0 / 16).epsilon(1e-14));

  const auto custom = fixtures::load("example1_custom.json");
  CHECK(expected_market(custom.market, laplace, custom.convention).market_total ==
        doctest::Approx(r.market_total).epsilon(1e-14));

  ExposureOptions serial;
  serial.parallel = false;
  CHECK(expected_market(doc.market, laplace, doc.convention, serial).market_total == r.market_total);
}

TEST_CASE("bilateral market of a complete graph") {
  // every pair nets K normal positions: each side sigma sqrt(K / 2 pi)
  const Market m = complete_market(4, 3);
  const ExposureReport r = expected_bilateral_market(m, NormalSym{2.0});
  CHECK(r.per_netting_set.size() == 12);
  for (const auto& s : r.per_netting_set)
    CHECK(s.value.expected == doctest::Approx(2.0 * std::sqrt(3 / (2 * std::numbers::pi))).epsilon(1e-13));
  CHECK(r.pairs.size() == 6);
}

TEST_CASE("one-sided laws are refused on undirected links") {
  CHECK_THROWS_AS(expected_market(fixtures::star(2), GammaDist{2.0, 1.0}, Bilateral{}), ValidationError);
  const Market path = fixtures::load("uniform_path.json").market;
  const ExposureReport r = expected_market(path, ExponentialDist{2.0}, Bilateral{});
  CHECK(r.market_total == doctest::Approx(4.0).epsilon(1e-12));
}
