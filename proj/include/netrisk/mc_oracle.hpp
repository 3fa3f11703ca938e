#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netrisk/distribution.hpp"
#include "netrisk/exposure.hpp"
#include "netrisk/market.hpp"

namespace netrisk {

/// Philox4x32-10 counter-based generator. Each (key, counter) pair maps to
/// four independent 32-bit words, so any draw can be addressed directly.
class Philox4x32 {
 public:
  using Block = std::array<std::uint32_t, 4>;
  static Block generate(std::uint64_t key, const Block& counter);
};

/// A stream of 32-bit words for one (sample, link) cell. The last counter
/// word indexes successive blocks, which rejection samplers may consume.
class CellStream {
 public:
  using result_type = std::uint32_t;

  CellStream(std::uint64_t seed, std::uint64_t sample, std::uint32_t link)
      : key_(seed),
        counter_{static_cast<std::uint32_t>(sample), static_cast<std::uint32_t>(sample >> 32), link, 0} {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return 0xFFFFFFFFu; }

  result_type operator()() {
    if (used_ == 4) {
      block_ = Philox4x32::generate(key_, counter_);
      ++counter_[3];
      used_ = 0;
    }
    return block_[used_++];
  }

 private:
  std::uint64_t key_;
  Philox4x32::Block counter_;
  Philox4x32::Block block_{};
  int used_ = 4;
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

struct McSetEstimate {
  Vertex owner = 0;
  std::string descriptor;
  SetSignature signature;
  McEstimate estimate;
};

struct McOptions {
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 42;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Per-link realization seen from the link's `from` vertex: symmetric draws
/// for undirected links, -|X| for directed ones (the tail owes).
double sample_link_value(const Link& link, const DistributionSpec& dist, std::uint64_t seed, std::uint64_t sample,
                         std::uint32_t index);

std::vector<McSetEstimate> mc_expected_exposure(const Market& m, const NettingConvention& convention,
                                                const DistributionSpec& dist, const McOptions& opts = {});

struct McTotals {
  McEstimate bilateral;
  /// Creditor-side multilateral total plus the bilateral rest.
  std::optional<McEstimate> multilateral;
  /// The same with every class-k position counted on both sides.
  std::optional<McEstimate> multilateral_abs;
};

McTotals mc_market_totals(const Market& m, const DistributionSpec& dist, std::optional<int> ccp_class,
                          const McOptions& opts = {});

}  // namespace netrisk
