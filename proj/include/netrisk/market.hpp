#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace netrisk {

using Vertex = std::size_t;
using LinkIndex = std::size_t;

/// Netted bilateral position of one pair within one class. For a directed
/// link `from` is the debtor and `to` the creditor and the weight is the
/// amount owed (>= 0). For an undirected link the weight is the value seen
/// from `from`.
struct Link {
  Vertex from = 0;
  Vertex to = 0;
  int cls = 1;
  bool directed = false;
  std::optional<double> weight;
};

struct Market {
  std::vector<std::string> participants;
  int classes = 1;
  std::vector<Link> links;
  bool directed = false;

  std::size_t size() const { return participants.size(); }
  std::optional<Vertex> find(const std::string& id) const;
  const std::string& name(Vertex v) const { return participants.at(v); }
};

struct MarketIssue {
  std::size_t link = 0;  // offending link, or npos for market-level issues
  std::string message;
};

/// Every invariant violation; empty means the market is valid.
std::vector<MarketIssue> validate_market(const Market& m);
/// Throws ValidationError listing all issues.
void require_valid(const Market& m);

enum class ItemSign { Claim, Debt, Symmetric };

int sign_value(ItemSign s);  // +1, -1, 0
std::string to_string(ItemSign s);

/// Sign of a link seen from `owner` (which must be an endpoint).
ItemSign item_sign(const Link& link, Vertex owner);
/// Realized value of a link from `owner`'s side, given its value from `from`.
double value_for(const Link& link, Vertex owner, double value_from_tail);

struct NettingItem {
  LinkIndex link = 0;
  ItemSign sign = ItemSign::Symmetric;
};

struct NettingSet {
  Vertex owner = 0;
  std::vector<NettingItem> items;
  std::string descriptor;
  /// Set for bilateral sets only.
  std::optional<Vertex> counterpart;

  std::size_t claims() const;
  std::size_t debts() const;
  std::size_t symmetric() const;
};

struct Bilateral {};
struct Multilateral {
  int cls = 1;
};
/// Explicit blocks per participant, each a list of link indices.
struct Custom {
  std::map<Vertex, std::vector<std::vector<LinkIndex>>> blocks;
};
using NettingConvention = std::variant<Bilateral, Multilateral, Custom>;

std::string describe(const NettingConvention& c, const Market& m);

/// Indexed by vertex: one set per compounded neighbour.
std::vector<std::vector<NettingSet>> bilateral_partition(const Market& m);
/// Indexed by vertex: the class-k links incident to it (possibly empty).
std::vector<NettingSet> multilateral_partition(const Market& m, int cls);
/// All netting sets induced by a convention, grouped by owner in vertex order.
/// Multilateral(k) nets class k per vertex and the other classes bilaterally.
std::vector<NettingSet> netting_sets(const Market& m, const NettingConvention& c);
/// Throws ValidationError unless every participant's blocks partition its
/// incident links into disjoint non-empty sets.
void validate_partition(const Market& m, const Custom& c);

struct DegreeProfile {
  int in_degree = 0;
  int out_degree = 0;
  int eulerian_degree = 0;
};

DegreeProfile degree_profile(const Market& m, Vertex v, int cls);
bool is_eulerian(const Market& m, int cls);

/// Lazily produces the 2^n orientations of an undirected class.
class OrientationRange {
 public:
  OrientationRange(const Market& m, int cls, std::size_t cap = 20);

  std::uint64_t size() const { return std::uint64_t{1} << class_links_.size(); }
  /// Bit j of `mask` reverses the j-th class link (to -> from).
  Market at(std::uint64_t mask) const;

  class iterator {
   public:
    using value_type = Market;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const OrientationRange* r, std::uint64_t i) : range_(r), index_(i) {}
    Market operator*() const { return range_->at(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++index_;
      return copy;
    }
    bool operator==(const iterator& o) const { return index_ == o.index_; }

   private:
    const OrientationRange* range_ = nullptr;
    std::uint64_t index_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

 private:
  Market base_;
  std::vector<LinkIndex> class_links_;
};

OrientationRange enumerate_orientations(const Market& m, int cls, std::size_t cap = 20);

struct MultilateralRisk {
  double abs_sum = 0.0;        // sum_v |y_v| over class k (every position twice)
  double creditor_sum = 0.0;   // sum_v max(y_v, 0) = abs_sum / 2
  double rest_bilateral = 0.0; // bilateral measure of the other classes
  double combined = 0.0;       // creditor_sum + rest_bilateral
};

/// Deterministic risk measures for realized values, precomputed per market so
/// they can be evaluated on many sampled value vectors.
class RiskEvaluator {
 public:
  explicit RiskEvaluator(const Market& m);

  /// values[i] is link i's value seen from its `from` vertex.
  double bilateral(std::span<const double> values) const;
  MultilateralRisk multilateral(std::span<const double> values, int cls) const;

 private:
  struct Pair {
    Vertex a;
    Vertex b;
    std::vector<LinkIndex> links;
  };
  double pair_sum(std::span<const double> values, int skip_cls) const;

  Market market_;
  std::vector<Pair> pairs_;
};

/// Realized weights as values seen from each link's `from` vertex. Throws
/// ValidationError when a weight is missing.
std::vector<double> realized_values(const Market& m);

double current_bilateral_risk(const Market& m);
MultilateralRisk current_multilateral_risk(const Market& m, int cls);

}  // namespace netrisk
