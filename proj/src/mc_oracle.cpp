#include "netrisk/mc_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

#include "netrisk/errors.hpp"

namespace netrisk {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
constexpr std::uint64_t kChunk = 8192;

struct Welford {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    count += 1.0;
    const double d = x - mean;
    mean += d / count;
    m2 += d * (x - mean);
  }
  void merge(const Welford& o) {
    if (o.count == 0.0) return;
    const double total = count + o.count;
    const double d = o.mean - mean;
    mean += d * o.count / total;
    m2 += o.m2 + d * d * count * o.count / total;
    count = total;
  }
  McEstimate estimate() const {
    McEstimate e;
    e.mean = mean;
    e.samples = static_cast<std::uint64_t>(count);
    e.std_error = count > 1.0 ? std::sqrt(m2 / (count - 1.0) / count) : 0.0;
    return e;
  }
};

// Runs `body(sample, outputs)` for every sample; chunk accumulators are merged
// in chunk order so the result does not depend on the thread count.
std::vector<McEstimate> run(std::uint64_t samples, unsigned threads, std::size_t outputs,
                            const std::function<void(std::uint64_t, std::vector<double>&)>& body) {
  if (samples < 10000) throw ValidationError("Monte-Carlo needs at least 10^4 samples");
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::vector<Welford>> partial(chunks, std::vector<Welford>(outputs));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    std::vector<double> out(outputs);
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t lo = c * kChunk;
      const std::uint64_t hi = std::min(samples, lo + kChunk);
      for (std::uint64_t s = lo; s < hi; ++s) {
        body(s, out);
        for (std::size_t j = 0; j < outputs; ++j) partial[c][j].add(out[j]);
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  std::vector<Welford> total(outputs);
  for (const auto& chunk : partial)
    for (std::size_t j = 0; j < outputs; ++j) total[j].merge(chunk[j]);
  std::vector<McEstimate> result;
  for (const auto& w : total) result.push_back(w.estimate());
  return result;
}

void draw_market(const Market& m, const DistributionSpec& dist, std::uint64_t seed, std::uint64_t draw_index,
                 std::vector<double>& values) {
  for (std::size_t i = 0; i < m.links.size(); ++i)
    values[i] = sample_link_value(m.links[i], dist, seed, draw_index, static_cast<std::uint32_t>(i));
}

void check_laws(const Market& m, const DistributionSpec& dist) {
  validate(dist);
  if (is_two_sided(dist)) return;
  for (const Link& l : m.links)
    if (!l.directed) throw ValidationError("one-sided distribution " + describe(dist) + " needs directed links");
}

}  // namespace

Philox4x32::Block Philox4x32::generate(std::uint64_t key, const Block& counter) {
  Block c = counter;
  std::uint32_t k0 = static_cast<std::uint32_t>(key);
  std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  return c;
}

double sample_link_value(const Link& link, const DistributionSpec& dist, std::uint64_t seed, std::uint64_t draw_index,
                         std::uint32_t index) {
  CellStream rng(seed, draw_index, index);
  if (!link.directed) return netrisk::sample(dist, std::nullopt, rng);
  if (is_two_sided(dist)) return netrisk::sample(dist, -1, rng);
  return -netrisk::sample(dist, std::nullopt, rng);
}

std::vector<McSetEstimate> mc_expected_exposure(const Market& m, const NettingConvention& convention,
                                                const DistributionSpec& dist, const McOptions& opts) {
  require_valid(m);
  check_laws(m, dist);
  const std::vector<NettingSet> sets = netting_sets(m, convention);
  const auto estimates = run(opts.samples, opts.threads, sets.size(),
                             [&](std::uint64_t s, std::vector<double>& out) {
                               thread_local std::vector<double> values;
                               values.resize(m.links.size());
                               draw_market(m, dist, opts.seed, s, values);
                               for (std::size_t j = 0; j < sets.size(); ++j) {
                                 double y = 0.0;
                                 for (const NettingItem& item : sets[j].items)
                                   y += value_for(m.links[item.link], sets[j].owner, values[item.link]);
                                 out[j] = std::max(y, 0.0);
                               }
                             });
  std::vector<McSetEstimate> result;
  for (std::size_t j = 0; j < sets.size(); ++j)
    result.push_back({sets[j].owner, sets[j].descriptor, signature_of(sets[j]), estimates[j]});
  return result;
}

McTotals mc_market_totals(const Market& m, const DistributionSpec& dist, std::optional<int> ccp_class,
                          const McOptions& opts) {
  require_valid(m);
  check_laws(m, dist);
  const RiskEvaluator risk(m);
  if (ccp_class) (void)multilateral_partition(m, *ccp_class);  // class check
  const std::size_t outputs = ccp_class ? 3 : 1;
  const auto estimates = run(opts.samples, opts.threads, outputs, [&](std::uint64_t s, std::vector<double>& out) {
    thread_local std::vector<double> values;
    values.resize(m.links.size());
    draw_market(m, dist, opts.seed, s, values);
    out[0] = risk.bilateral(values);
    if (ccp_class) {
      const MultilateralRisk r = risk.multilateral(values, *ccp_class);
      out[1] = r.combined;
      out[2] = r.abs_sum + r.rest_bilateral;
    }
  });
  McTotals t;
  t.bilateral = estimates[0];
  if (ccp_class) {
    t.multilateral = estimates[1];
    t.multilateral_abs = estimates[2];
  }
  return t;
}

}  // namespace netrisk
