#include "netrisk/exposure.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "netrisk/errors.hpp"

namespace netrisk {
namespace {

constexpr cplx kI{0.0, 1.0};

std::string method_class(HilbertMethod m) {
  return m == HilbertMethod::NumericPV ? "numeric" : "closed-form";
}

struct ItemLaws {
  CharFn claim;
  CharFn debt;
  std::optional<CharFn> symmetric;
};

ItemLaws item_laws(const DistributionSpec& dist) {
  CharFn base = charfn_of(dist);
  if (is_two_sided(dist)) return {pos_abs_cf(base), neg_abs_cf(base), base};
  // A one-sided law is read as the law of |X| on directed links.
  return {base, cf_negate(base), std::nullopt};
}

}  // namespace

SetSignature signature_of(const NettingSet& s) { return {s.claims(), s.debts(), s.symmetric()}; }

CharFn netting_set_cf(const SetSignature& sig, const DistributionSpec& dist) {
  if (sig.size() == 0) return cf_one();
  ItemLaws laws = item_laws(dist);
  if (sig.symmetric > 0 && !laws.symmetric)
    throw ValidationError("one-sided distribution " + describe(dist) + " needs directed links");
  std::vector<CharFn> factors;
  factors.insert(factors.end(), sig.claims, laws.claim);
  factors.insert(factors.end(), sig.debts, laws.debt);
  if (laws.symmetric) factors.insert(factors.end(), sig.symmetric, *laws.symmetric);
  return cf_product(factors);
}

CharFn netting_set_cf(const Market& m, const NettingSet& s, const DistributionSpec& dist) {
  for (const NettingItem& item : s.items) {
    if (item.link >= m.links.size()) throw ValidationError("netting item refers to an unknown link");
    if (item_sign(m.links[item.link], s.owner) != item.sign)
      throw ValidationError("netting item sign disagrees with the link direction");
  }
  return netting_set_cf(signature_of(s), dist);
}

SetValue expected_from_cf(const CharFn& net, const ExposureOptions& opts) {
  const double mean = cf_mean(net);
  const Slope slope = hilbert_deriv_at_zero(net, opts.method, opts.tol);
  SetValue v;
  v.expected = std::max(0.0, 0.5 * mean + 0.5 * slope.value);
  v.method = method_class(slope.method);
  v.detail = to_string(slope.method);
  v.error = 0.5 * slope.error;
  return v;
}

CharFn exposure_cf(const CharFn& net, double tol) {
  const cplx h0 = hilbert(net, 0.0, HilbertMethod::Auto, tol).value;
  ExposureOptions opts;
  opts.tol = tol;
  const double mean = expected_from_cf(net, opts).expected;
  return CharFn(
      [net, h0, tol](double t) {
        const cplx h = hilbert(net, t, HilbertMethod::Auto, tol).value;
        return 0.5 * (1.0 + net(t)) + 0.5 * kI * (h - h0);
      },
      Structure{}, mean, "max(" + net.label() + ",0)");
}

std::optional<SetValue> eulerian_shortcut(const SetSignature& sig, const DistributionSpec& dist,
                                          const ExposureOptions& opts) {
  const bool undirected = sig.symmetric > 0 && sig.claims == 0 && sig.debts == 0;
  const bool balanced = sig.symmetric == 0 && sig.claims > 0 && sig.claims == sig.debts;
  if (!undirected && !balanced) return std::nullopt;
  const CharFn net = netting_set_cf(sig, dist);
  const Slope slope = hilbert_deriv_at_zero(net, opts.method, opts.tol);
  SetValue v;
  v.expected = std::max(0.0, 0.5 * slope.value);
  v.method = "shortcut";
  v.detail = "eulerian/" + to_string(slope.method);
  v.error = 0.5 * slope.error;
  return v;
}

SetValue expected_exposure(const SetSignature& sig, const DistributionSpec& dist,
                           const ExposureOptions& opts) {
  validate(dist);
  if (sig.size() == 0) return {0.0, "shortcut", "empty", 0.0};
  if (sig.symmetric > 0 && !is_two_sided(dist))
    throw ValidationError("one-sided distribution " + describe(dist) + " needs directed links");
  if (sig.claims == 0 && sig.symmetric == 0) return {0.0, "shortcut", "all-debt", 0.0};
  if (sig.debts == 0 && sig.symmetric == 0)
    return {static_cast<double>(sig.claims) * mean_abs(dist), "shortcut", "all-claim", 0.0};
  if (auto v = eulerian_shortcut(sig, dist, opts)) return *v;
  return expected_from_cf(netting_set_cf(sig, dist), opts);
}

SetValue expected_exposure(const Market& m, const NettingSet& s, const DistributionSpec& dist,
                           const ExposureOptions& opts) {
  (void)netting_set_cf(m, s, dist);  // checks the items against the market
  return expected_exposure(signature_of(s), dist, opts);
}

ExposureReport expected_market(const Market& m, const DistributionSpec& dist,
                               const NettingConvention& convention, const ExposureOptions& opts) {
  require_valid(m);
  validate(dist);
  const std::vector<NettingSet> sets = netting_sets(m, convention);

  std::map<SetSignature, SetValue> values;
  for (const auto& s : sets) values.emplace(signature_of(s), SetValue{});
  if (opts.parallel && values.size() > 1) {
    std::vector<std::pair<SetSignature, std::future<SetValue>>> jobs;
    for (auto& [sig, _] : values)
      jobs.emplace_back(sig, std::async(std::launch::async, [sig, &dist, &opts] {
                          return expected_exposure(sig, dist, opts);
                        }));
    for (auto& [sig, job] : jobs) values[sig] = job.get();
  } else {
    for (auto& [sig, v] : values) v = expected_exposure(sig, dist, opts);
  }

  ExposureReport r;
  r.convention = describe(convention, m);
  r.per_participant.assign(m.size(), 0.0);
  std::map<std::pair<Vertex, Vertex>, double> pairs;
  for (const auto& s : sets) {
    SetExposure e;
    e.owner = s.owner;
    e.descriptor = s.descriptor;
    e.counterpart = s.counterpart;
    e.signature = signature_of(s);
    e.multilateral = s.descriptor.rfind("multilateral", 0) == 0;
    e.value = values.at(e.signature);
    if (e.signature.size() == 0)
      r.warnings.push_back("empty netting set " + s.descriptor + " of '" + m.name(s.owner) + "'");
    r.per_participant[s.owner] += e.value.expected;
    (e.multilateral ? r.multilateral_component : r.bilateral_component) += e.value.expected;
    r.max_error = std::max(r.max_error, e.value.error);
    if (s.counterpart) pairs[std::minmax(s.owner, *s.counterpart)] += e.value.expected;
    r.per_netting_set.push_back(std::move(e));
  }
  for (double x : r.per_participant) r.market_total += x;
  for (const auto& [key, value] : pairs) r.pairs.push_back({key.first, key.second, value});
  return r;
}

ExposureReport expected_bilateral_market(const Market& m, const DistributionSpec& dist,
                                         const ExposureOptions& opts) {
  return expected_market(m, dist, Bilateral{}, opts);
}

ExposureReport expected_multilateral_market(const Market& m, const DistributionSpec& dist, int ccp_class,
                                            const ExposureOptions& opts) {
  return expected_market(m, dist, Multilateral{ccp_class}, opts);
}

}  // namespace netrisk
