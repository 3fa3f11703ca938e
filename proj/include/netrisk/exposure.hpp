#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netrisk/charfn.hpp"
#include "netrisk/distribution.hpp"
#include "netrisk/hilbert.hpp"
#include "netrisk/market.hpp"

namespace netrisk {

struct ExposureOptions {
  double tol = 1e-7;
  /// Forces the route used for the Hilbert slope of non-trivial sets.
  HilbertMethod method = HilbertMethod::Auto;
  bool parallel = true;
};

/// Composition of a netting set; the expected exposure depends only on this
/// for i.i.d. positions.
struct SetSignature {
  std::size_t claims = 0;
  std::size_t debts = 0;
  std::size_t symmetric = 0;

  std::size_t size() const { return claims + debts + symmetric; }
  auto operator<=>(const SetSignature&) const = default;
};

SetSignature signature_of(const NettingSet& s);

struct SetValue {
  double expected = 0.0;
  /// "closed-form", "numeric" or "shortcut", plus the route in `detail`.
  std::string method;
  std::string detail;
  double error = 0.0;
};

/// C.f. of the net position of a set with the given composition.
CharFn netting_set_cf(const SetSignature& sig, const DistributionSpec& dist);
CharFn netting_set_cf(const Market& m, const NettingSet& s, const DistributionSpec& dist);

/// C.f. of max(Y, 0) from the c.f. of Y.
CharFn exposure_cf(const CharFn& net, double tol = 1e-7);

/// 1/2 E(Y) + 1/2 H'(0) of a net-position c.f.
SetValue expected_from_cf(const CharFn& net, const ExposureOptions& opts = {});

SetValue expected_exposure(const SetSignature& sig, const DistributionSpec& dist,
                           const ExposureOptions& opts = {});
SetValue expected_exposure(const Market& m, const NettingSet& s, const DistributionSpec& dist,
                           const ExposureOptions& opts = {});

/// 1/2 H'(0) for all-undirected or balanced all-directed sets; nullopt otherwise.
std::optional<SetValue> eulerian_shortcut(const SetSignature& sig, const DistributionSpec& dist,
                                          const ExposureOptions& opts = {});

struct SetExposure {
  Vertex owner = 0;
  std::string descriptor;
  std::optional<Vertex> counterpart;
  SetSignature signature;
  bool multilateral = false;
  SetValue value;
};

struct PairExposure {
  Vertex a = 0;
  Vertex b = 0;
  double expected = 0.0;  // both perspectives
};

struct ExposureReport {
  std::string convention;
  std::vector<SetExposure> per_netting_set;
  std::vector<double> per_participant;
  double market_total = 0.0;
  /// Split of the total into the multilaterally netted class and the rest.
  double multilateral_component = 0.0;
  double bilateral_component = 0.0;
  std::vector<PairExposure> pairs;
  double max_error = 0.0;
  std::vector<std::string> warnings;
};

ExposureReport expected_market(const Market& m, const DistributionSpec& dist,
                               const NettingConvention& convention, const ExposureOptions& opts = {});
ExposureReport expected_bilateral_market(const Market& m, const DistributionSpec& dist,
                                         const ExposureOptions& opts = {});
ExposureReport expected_multilateral_market(const Market& m, const DistributionSpec& dist, int ccp_class,
                                            const ExposureOptions& opts = {});

}  // namespace netrisk
