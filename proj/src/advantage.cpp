#include "netrisk/advantage.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "netrisk/errors.hpp"

namespace netrisk {
namespace {

// Expected exposure of M undirected items, memoized for one distribution.
class UndirectedSeries {
 public:
  UndirectedSeries(const DistributionSpec& dist, const ExposureOptions& opts) : dist_(dist), opts_(opts) {}

  double operator()(int m) {
    if (m <= 0) return 0.0;
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    const double v = expected_exposure(SetSignature{0, 0, static_cast<std::size_t>(m)}, dist_, opts_).expected;
    cache_.emplace(m, v);
    return v;
  }

 private:
  DistributionSpec dist_;
  ExposureOptions opts_;
  std::map<int, double> cache_;
};

CompleteComparison compare(int n, int k, const DistributionSpec& dist, UndirectedSeries& series) {
  CompleteComparison c;
  if (const auto* lap = std::get_if<LaplaceSym>(&dist)) {
    const Rational lhs = laplace_expected(n - 1) + Rational(n - 1) * laplace_expected(k - 1);
    const Rational rhs = Rational(n - 1) * laplace_expected(k);
    c.with_ccp = static_cast<double>(lhs) * lap->scale;
    c.without = static_cast<double>(rhs) * lap->scale;
    c.advantageous = lhs < rhs;
    c.tie = lhs == rhs;
    c.exact = true;
    return c;
  }
  c.with_ccp = series(n - 1) + (n - 1) * series(k - 1);
  c.without = (n - 1) * series(k);
  const double scale = std::max(1.0, std::fabs(c.without));
  c.tie = std::fabs(c.with_ccp - c.without) <= 1e-10 * scale;
  c.advantageous = !c.tie && c.with_ccp < c.without;
  return c;
}

}  // namespace

AdvantageReport ccp_advantage(const Market& m, const DistributionSpec& dist, int cls,
                              const ExposureOptions& opts) {
  AdvantageReport r;
  r.multilateral = expected_multilateral_market(m, dist, cls, opts);
  r.bilateral = expected_bilateral_market(m, dist, opts);
  r.with_ccp = r.multilateral.market_total;
  r.without = r.bilateral.market_total;
  const auto spread = [](const ExposureReport& e) {
    return e.max_error * static_cast<double>(e.per_netting_set.size());
  };
  const double slack =
      1e-10 * std::max(1.0, std::fabs(r.without)) + spread(r.multilateral) + spread(r.bilateral);
  r.tie = std::fabs(r.with_ccp - r.without) <= slack;
  r.advantageous = !r.tie && r.with_ccp < r.without;
  return r;
}

bool normal_complete_threshold(int participants, int classes) {
  if (participants < 3) throw ValidationError("the threshold needs at least 3 participants");
  if (classes < 1) throw ValidationError("number of classes must be at least 1");
  const auto n = static_cast<long long>(participants);
  const auto k = static_cast<long long>(classes);
  return 4 * k * (n - 1) < n * n;
}

Rational laplace_expected(int m) {
  if (m < 0) throw ValidationError("power must be non-negative");
  if (m == 0) return Rational(0);
  boost::multiprecision::cpp_int binom = 1;
  for (int j = 1; j <= m; ++j) binom = binom * (m + j) / j;  // C(2m, m)
  boost::multiprecision::cpp_int four_m = 1;
  four_m <<= 2 * m;
  return Rational(binom * m, four_m);
}

double laplace_expected_gamma_form(int m) {
  if (m <= 0) return 0.0;
  return std::exp(std::lgamma(m + 0.5) - std::lgamma(static_cast<double>(m)) - 0.5 * std::log(std::numbers::pi));
}

CompleteComparison complete_graph_comparison(int participants, int classes, const DistributionSpec& dist,
                                             const ExposureOptions& opts) {
  if (participants < 2) throw ValidationError("a complete graph needs at least 2 participants");
  if (classes < 1) throw ValidationError("number of classes must be at least 1");
  validate(dist);
  if (!is_two_sided(dist)) throw ValidationError("complete-graph comparison needs a symmetric distribution");
  UndirectedSeries series(dist, opts);
  return compare(participants, classes, dist, series);
}

bool complete_graph_advantage(int participants, int classes, const DistributionSpec& dist,
                              const ExposureOptions& opts) {
  if (participants < 3) throw ValidationError("complete-graph advantage needs at least 3 participants");
  return complete_graph_comparison(participants, classes, dist, opts).advantageous;
}

std::vector<ParticipantsRow> min_participants_table(const DistributionSpec& dist, int max_classes,
                                                    const ExposureOptions& opts) {
  if (max_classes < 1 || max_classes > 30) throw ValidationError("K_max must be in 1..30");
  validate(dist);
  if (!is_two_sided(dist)) throw ValidationError("the table needs a symmetric distribution");
  UndirectedSeries series(dist, opts);
  std::vector<ParticipantsRow> rows;
  for (int k = 1; k <= max_classes; ++k) {
    ParticipantsRow row{k, 0, false};
    for (int n = 2; n <= 100000; ++n) {
      const CompleteComparison c = compare(n, k, dist, series);
      if (c.advantageous || c.tie) {
        row.min_participants = n;
        row.tie = c.tie;
        break;
      }
    }
    if (row.min_participants == 0) throw NumericError("no participant count found up to 100000");
    rows.push_back(row);
  }
  return rows;
}

Market complete_market(int participants, int classes) {
  if (participants < 1 || classes < 1) throw ValidationError("complete market needs N >= 1 and K >= 1");
  Market m;
  m.classes = classes;
  for (int i = 0; i < participants; ++i) m.participants.push_back("v" + std::to_string(i + 1));
  for (int k = 1; k <= classes; ++k)
    for (Vertex a = 0; a < m.size(); ++a)
      for (Vertex b = a + 1; b < m.size(); ++b) m.links.push_back({a, b, k, false, std::nullopt});
  return m;
}

}  // namespace netrisk
