#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "netrisk/distribution.hpp"
#include "netrisk/exposure.hpp"
#include "netrisk/market.hpp"

namespace netrisk {

using Rational = boost::multiprecision::cpp_rational;

struct AdvantageReport {
  double with_ccp = 0.0;
  double without = 0.0;
  bool advantageous = false;
  bool tie = false;
  ExposureReport multilateral;
  ExposureReport bilateral;
};

/// Compares the market exposure with one class centrally cleared against
/// purely bilateral netting. Strict improvement is required.
AdvantageReport ccp_advantage(const Market& m, const DistributionSpec& dist, int cls,
                              const ExposureOptions& opts = {});

/// Exact integer test 4K(N-1) < N^2 for normal positions on a complete graph.
bool normal_complete_threshold(int participants, int classes);

/// 1/2 H'(0) of the M-th power of the unit Laplace c.f.: (M / 4^M) C(2M, M).
Rational laplace_expected(int m);
/// The same quantity through Gamma(1/2 + M) / (sqrt(pi) Gamma(M)).
double laplace_expected_gamma_form(int m);

struct CompleteComparison {
  double with_ccp = 0.0;  // per participant
  double without = 0.0;
  bool advantageous = false;
  bool tie = false;
  bool exact = false;  // decided in rational arithmetic
};

/// Representative participant of a complete undirected graph with N
/// participants and K classes, CCP in one class. Accepts N >= 2.
CompleteComparison complete_graph_comparison(int participants, int classes, const DistributionSpec& dist,
                                             const ExposureOptions& opts = {});
/// Strict advantage; requires N >= 3.
bool complete_graph_advantage(int participants, int classes, const DistributionSpec& dist,
                              const ExposureOptions& opts = {});

struct ParticipantsRow {
  int classes = 0;
  int min_participants = 0;
  /// The minimum is attained with equality (no strict gain yet).
  bool tie = false;
};

/// For K = 1..K_max, the smallest N >= 2 at which central clearing does not
/// increase the representative participant's expected exposure.
std::vector<ParticipantsRow> min_participants_table(const DistributionSpec& dist, int max_classes,
                                                    const ExposureOptions& opts = {});

/// Complete undirected graph on N participants with K classes.
Market complete_market(int participants, int classes);

}  // namespace netrisk
