#include "netrisk/market.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "netrisk/errors.hpp"

namespace netrisk {
namespace {

constexpr std::size_t kNoLink = static_cast<std::size_t>(-1);

std::pair<Vertex, Vertex> unordered(const Link& l) { return std::minmax(l.from, l.to); }

bool incident(const Link& l, Vertex v) { return l.from == v || l.to == v; }

Vertex other_end(const Link& l, Vertex v) { return l.from == v ? l.to : l.from; }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void require_class(const Market& m, int cls) {
  if (cls < 1 || cls > m.classes) {
    std::ostringstream os;
    os << "class " << cls << " is not in 1.." << m.classes;
    throw ValidationError(os.str());
  }
}

}  // namespace

std::optional<Vertex> Market::find(const std::string& id) const {
  auto it = std::find(participants.begin(), participants.end(), id);
  if (it == participants.end()) return std::nullopt;
  return static_cast<Vertex>(it - participants.begin());
}

std::vector<MarketIssue> validate_market(const Market& m) {
  std::vector<MarketIssue> issues;
  if (m.participants.empty()) issues.push_back({kNoLink, "market has no participants"});
  if (m.classes < 1) issues.push_back({kNoLink, "number of classes must be at least 1"});
  {
    std::set<std::string> seen;
    for (const auto& p : m.participants)
      if (!seen.insert(p).second) issues.push_back({kNoLink, "duplicate participant '" + p + "'"});
  }
  std::set<std::tuple<Vertex, Vertex, int>> pairs;
  for (std::size_t i = 0; i < m.links.size(); ++i) {
    const Link& l = m.links[i];
    if (l.from >= m.size() || l.to >= m.size()) {
      issues.push_back({i, "unknown endpoint"});
      continue;
    }
    if (l.from == l.to) issues.push_back({i, "self-link"});
    if (l.cls < 1 || l.cls > m.classes) {
      std::ostringstream os;
      os << "unknown class " << l.cls << " (market has " << m.classes << ")";
      issues.push_back({i, os.str()});
    }
    if (l.directed && !m.directed) issues.push_back({i, "directed link in an undirected market"});
    if (l.weight) {
      if (!std::isfinite(*l.weight)) issues.push_back({i, "weight is not finite"});
      if (l.directed && *l.weight < 0.0)
        issues.push_back({i, "directed weight must be non-negative (it is the amount owed)"});
    }
    const auto [a, b] = unordered(l);
    if (!pairs.insert({a, b, l.cls}).second) issues.push_back({i, "duplicate pair-class link"});
  }
  return issues;
}

void require_valid(const Market& m) {
  const auto issues = validate_market(m);
  if (issues.empty()) return;
  std::ostringstream os;
  os << "invalid market:";
  for (const auto& issue : issues) {
    os << "\n  ";
    if (issue.link != kNoLink) os << "links[" << issue.link << "]: ";
    os << issue.message;
  }
  throw ValidationError(os.str());
}

int sign_value(ItemSign s) {
  switch (s) {
    case ItemSign::Claim: return 1;
    case ItemSign::Debt: return -1;
    case ItemSign::Symmetric: return 0;
  }
  return 0;
}

std::string to_string(ItemSign s) {
  switch (s) {
    case ItemSign::Claim: return "claim";
    case ItemSign::Debt: return "debt";
    case ItemSign::Symmetric: return "symmetric";
  }
  return "symmetric";
}

ItemSign item_sign(const Link& link, Vertex owner) {
  if (!incident(link, owner)) throw ValidationError("link is not incident to the owner");
  if (!link.directed) return ItemSign::Symmetric;
  return link.to == owner ? ItemSign::Claim : ItemSign::Debt;
}

double value_for(const Link& link, Vertex owner, double value_from_tail) {
  return link.from == owner ? value_from_tail : -value_from_tail;
}

std::size_t NettingSet::claims() const {
  return static_cast<std::size_t>(std::count_if(
      items.begin(), items.end(), [](const NettingItem& i) { return i.sign == ItemSign::Claim; }));
}
std::size_t NettingSet::debts() const {
  return static_cast<std::size_t>(std::count_if(
      items.begin(), items.end(), [](const NettingItem& i) { return i.sign == ItemSign::Debt; }));
}
std::size_t NettingSet::symmetric() const {
  return static_cast<std::size_t>(std::count_if(
      items.begin(), items.end(), [](const NettingItem& i) { return i.sign == ItemSign::Symmetric; }));
}

std::string describe(const NettingConvention& c, const Market& m) {
  (void)m;
  return std::visit(Overloaded{
                        [](const Bilateral&) { return std::string("bilateral"); },
                        [](const Multilateral& x) { return "multilateral:" + std::to_string(x.cls); },
                        [](const Custom&) { return std::string("custom"); },
                    },
                    c);
}

namespace {

// Bilateral sets of `v`, optionally leaving out one class.
std::vector<NettingSet> bilateral_sets_of(const Market& m, Vertex v, int skip_cls) {
  std::map<Vertex, NettingSet> by_neighbour;
  for (LinkIndex i = 0; i < m.links.size(); ++i) {
    const Link& l = m.links[i];
    if (!incident(l, v) || l.cls == skip_cls) continue;
    const Vertex w = other_end(l, v);
    NettingSet& s = by_neighbour[w];
    s.owner = v;
    s.descriptor = "bilateral:" + m.name(w);
    s.counterpart = w;
    s.items.push_back({i, item_sign(l, v)});
  }
  std::vector<NettingSet> out;
  for (auto& [w, s] : by_neighbour) out.push_back(std::move(s));
  return out;
}

NettingSet class_set_of(const Market& m, Vertex v, int cls) {
  NettingSet s;
  s.owner = v;
  s.descriptor = "multilateral:" + std::to_string(cls);
  for (LinkIndex i = 0; i < m.links.size(); ++i) {
    const Link& l = m.links[i];
    if (l.cls == cls && incident(l, v)) s.items.push_back({i, item_sign(l, v)});
  }
  return s;
}

}  // namespace

std::vector<std::vector<NettingSet>> bilateral_partition(const Market& m) {
  std::vector<std::vector<NettingSet>> out(m.size());
  for (Vertex v = 0; v < m.size(); ++v) out[v] = bilateral_sets_of(m, v, 0);
  return out;
}

std::vector<NettingSet> multilateral_partition(const Market& m, int cls) {
  require_class(m, cls);
  std::vector<NettingSet> out(m.size());
  for (Vertex v = 0; v < m.size(); ++v) out[v] = class_set_of(m, v, cls);
  return out;
}

void validate_partition(const Market& m, const Custom& c) {
  for (const auto& [v, blocks] : c.blocks)
    if (v >= m.size()) throw ValidationError("partition names an unknown participant");
  for (Vertex v = 0; v < m.size(); ++v) {
    std::set<LinkIndex> expected;
    for (LinkIndex i = 0; i < m.links.size(); ++i)
      if (incident(m.links[i], v)) expected.insert(i);
    std::set<LinkIndex> seen;
    auto it = c.blocks.find(v);
    if (it != c.blocks.end()) {
      for (const auto& block : it->second) {
        if (block.empty()) throw ValidationError("empty netting block for '" + m.name(v) + "'");
        for (LinkIndex i : block) {
          if (i >= m.links.size() || !incident(m.links[i], v)) {
            std::ostringstream os;
            os << "link " << i << " in a block of '" << m.name(v) << "' is not incident to it";
            throw ValidationError(os.str());
          }
          if (!seen.insert(i).second) {
            std::ostringstream os;
            os << "link " << i << " appears in two blocks of '" << m.name(v) << "'";
            throw ValidationError(os.str());
          }
        }
      }
    }
    if (seen != expected)
      throw ValidationError("netting blocks of '" + m.name(v) + "' do not cover all incident links");
  }
}

std::vector<NettingSet> netting_sets(const Market& m, const NettingConvention& c) {
  std::vector<NettingSet> out;
  std::visit(Overloaded{
                 [&](const Bilateral&) {
                   for (Vertex v = 0; v < m.size(); ++v)
                     for (auto& s : bilateral_sets_of(m, v, 0)) out.push_back(std::move(s));
                 },
                 [&](const Multilateral& x) {
                   require_class(m, x.cls);
                   for (Vertex v = 0; v < m.size(); ++v) {
                     NettingSet cs = class_set_of(m, v, x.cls);
                     if (!cs.items.empty()) out.push_back(std::move(cs));
                     for (auto& s : bilateral_sets_of(m, v, x.cls)) out.push_back(std::move(s));
                   }
                 },
                 [&](const Custom& x) {
                   validate_partition(m, x);
                   for (const auto& [v, blocks] : x.blocks) {
                     for (std::size_t b = 0; b < blocks.size(); ++b) {
                       NettingSet s;
                       s.owner = v;
                       s.descriptor = "custom:" + std::to_string(b);
                       for (LinkIndex i : blocks[b]) s.items.push_back({i, item_sign(m.links[i], v)});
                       out.push_back(std::move(s));
                     }
                   }
                 },
             },
             c);
  return out;
}

DegreeProfile degree_profile(const Market& m, Vertex v, int cls) {
  require_class(m, cls);
  DegreeProfile d;
  for (const Link& l : m.links) {
    if (l.cls != cls) continue;
    if (!l.directed) throw ValidationError("undirected links have no degree profile");
    if (l.to == v) ++d.in_degree;
    if (l.from == v) ++d.out_degree;
  }
  d.eulerian_degree = d.in_degree - d.out_degree;
  return d;
}

bool is_eulerian(const Market& m, int cls) {
  bool balanced = true;
  for (Vertex v = 0; v < m.size(); ++v)
    if (degree_profile(m, v, cls).eulerian_degree != 0) balanced = false;
  return balanced;
}

OrientationRange::OrientationRange(const Market& m, int cls, std::size_t cap) : base_(m) {
  require_class(m, cls);
  for (LinkIndex i = 0; i < m.links.size(); ++i) {
    if (m.links[i].cls != cls) continue;
    if (m.links[i].directed) throw ValidationError("orientation enumeration needs an undirected class");
    class_links_.push_back(i);
  }
  if (class_links_.size() > cap || class_links_.size() > 62)
    throw ValidationError("orientation space too large");
  base_.directed = true;
}

Market OrientationRange::at(std::uint64_t mask) const {
  Market out = base_;
  for (std::size_t j = 0; j < class_links_.size(); ++j) {
    Link& l = out.links[class_links_[j]];
    l.directed = true;
    if ((mask >> j) & 1U) std::swap(l.from, l.to);
  }
  return out;
}

OrientationRange enumerate_orientations(const Market& m, int cls, std::size_t cap) {
  return OrientationRange(m, cls, cap);
}

RiskEvaluator::RiskEvaluator(const Market& m) : market_(m) {
  std::map<std::pair<Vertex, Vertex>, std::size_t> index;
  for (LinkIndex i = 0; i < m.links.size(); ++i) {
    const auto key = unordered(m.links[i]);
    auto [it, fresh] = index.try_emplace(key, pairs_.size());
    if (fresh) pairs_.push_back({key.first, key.second, {}});
    pairs_[it->second].links.push_back(i);
  }
}

double RiskEvaluator::pair_sum(std::span<const double> values, int skip_cls) const {
  double total = 0.0;
  for (const Pair& p : pairs_) {
    double y = 0.0;  // seen from p.a
    bool any = false;
    for (LinkIndex i : p.links) {
      const Link& l = market_.links[i];
      if (l.cls == skip_cls) continue;
      y += value_for(l, p.a, values[i]);
      any = true;
    }
    if (any) total += std::fabs(y);  // max(y,0) + max(-y,0)
  }
  return total;
}

double RiskEvaluator::bilateral(std::span<const double> values) const {
  if (values.size() != market_.links.size()) throw ValidationError("value vector size mismatch");
  return pair_sum(values, 0);
}

MultilateralRisk RiskEvaluator::multilateral(std::span<const double> values, int cls) const {
  if (values.size() != market_.links.size()) throw ValidationError("value vector size mismatch");
  require_class(market_, cls);
  std::vector<double> position(market_.size(), 0.0);
  for (LinkIndex i = 0; i < market_.links.size(); ++i) {
    const Link& l = market_.links[i];
    if (l.cls != cls) continue;
    position[l.from] += values[i];
    position[l.to] -= values[i];
  }
  MultilateralRisk r;
  for (double y : position) {
    r.abs_sum += std::fabs(y);
    r.creditor_sum += std::max(y, 0.0);
  }
  r.rest_bilateral = pair_sum(values, cls);
  r.combined = r.creditor_sum + r.rest_bilateral;
  return r;
}

std::vector<double> realized_values(const Market& m) {
  std::vector<double> values(m.links.size());
  for (LinkIndex i = 0; i < m.links.size(); ++i) {
    const Link& l = m.links[i];
    if (!l.weight) {
      std::ostringstream os;
      os << "links[" << i << "] has no realized weight";
      throw ValidationError(os.str());
    }
    values[i] = l.directed ? -*l.weight : *l.weight;
  }
  return values;
}

double current_bilateral_risk(const Market& m) {
  require_valid(m);
  const auto values = realized_values(m);
  return RiskEvaluator(m).bilateral(values);
}

MultilateralRisk current_multilateral_risk(const Market& m, int cls) {
  require_valid(m);
  const auto values = realized_values(m);
  return RiskEvaluator(m).multilateral(values, cls);
}

}  // namespace netrisk
