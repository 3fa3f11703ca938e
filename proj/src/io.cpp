#include "netrisk/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "netrisk/errors.hpp"

namespace netrisk {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ValidationError(path + ": " + message);
}

const Json& require(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

int integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

bool boolean(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

std::string text(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

double param(const Json& j, std::initializer_list<const char*> names, const std::string& path) {
  for (const char* name : names) {
    auto it = j.find(name);
    if (it != j.end()) return number(*it, path + "." + name);
  }
  fail(path, std::string("missing parameter '") + *names.begin() + "'");
}

Vertex endpoint(const Market& m, const Json& j, const std::string& path) {
  const std::string id = text(j, path);
  auto v = m.find(id);
  if (!v) fail(path, "unknown participant '" + id + "'");
  return *v;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

DistributionSpec parse_distribution(const Json& j, const std::string& path) {
  const std::string type = text(require(j, "type", path), path + ".type");
  DistributionSpec spec;
  if (type == "normal") {
    spec = NormalSym{param(j, {"sigma"}, path)};
  } else if (type == "laplace") {
    spec = LaplaceSym{param(j, {"b", "scale"}, path)};
  } else if (type == "uniform") {
    spec = UniformSym{param(j, {"c", "half_width"}, path)};
  } else if (type == "gamma") {
    spec = GammaDist{param(j, {"alpha", "shape"}, path), param(j, {"beta", "scale"}, path)};
  } else if (type == "exponential") {
    spec = ExponentialDist{param(j, {"theta", "scale"}, path)};
  } else {
    fail(path + ".type", "unknown distribution '" + type + "'");
  }
  try {
    validate(spec);
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
  return spec;
}

Json to_json(const DistributionSpec& dist) {
  return std::visit(Overloaded{
                        [](const NormalSym& d) { return Json{{"type", "normal"}, {"sigma", d.sigma}}; },
                        [](const LaplaceSym& d) { return Json{{"type", "laplace"}, {"b", d.scale}}; },
                        [](const UniformSym& d) { return Json{{"type", "uniform"}, {"c", d.half_width}}; },
                        [](const GammaDist& d) {
                          return Json{{"type", "gamma"}, {"alpha", d.shape}, {"beta", d.scale}};
                        },
                        [](const ExponentialDist& d) {
                          return Json{{"type", "exponential"}, {"theta", d.scale}};
                        },
                    },
                    dist);
}

MarketDocument parse_market(const Json& j) {
  MarketDocument doc;
  Market& m = doc.market;
  if (!j.is_object()) fail("$", "expected an object");

  const Json& participants = require(j, "participants", "$");
  if (!participants.is_array()) fail("$.participants", "expected an array");
  for (std::size_t i = 0; i < participants.size(); ++i)
    m.participants.push_back(text(participants[i], "$.participants[" + std::to_string(i) + "]"));
  m.classes = integer(require(j, "classes", "$"), "$.classes");

  const Json& links = require(j, "links", "$");
  if (!links.is_array()) fail("$.links", "expected an array");
  bool any_directed = false;
  for (std::size_t i = 0; i < links.size(); ++i) {
    const std::string path = "$.links[" + std::to_string(i) + "]";
    const Json& lj = links[i];
    Link l;
    l.from = endpoint(m, require(lj, "from", path), path + ".from");
    l.to = endpoint(m, require(lj, "to", path), path + ".to");
    l.cls = integer(require(lj, "class", path), path + ".class");
    if (auto it = lj.find("directed"); it != lj.end()) l.directed = boolean(*it, path + ".directed");
    if (auto it = lj.find("weight"); it != lj.end() && !it->is_null()) l.weight = number(*it, path + ".weight");
    any_directed = any_directed || l.directed;
    m.links.push_back(l);
  }
  m.directed = any_directed;
  if (auto it = j.find("directed"); it != j.end()) m.directed = boolean(*it, "$.directed");

  for (const auto& issue : validate_market(m)) {
    const std::string path =
        issue.link < m.links.size() ? "$.links[" + std::to_string(issue.link) + "]" : std::string("$");
    fail(path, issue.message);
  }

  if (auto it = j.find("dist"); it != j.end()) doc.dist = parse_distribution(*it, "$.dist");

  if (auto it = j.find("convention"); it != j.end()) {
    const Json& cj = *it;
    const std::string type = text(require(cj, "type", "$.convention"), "$.convention.type");
    if (type == "bilateral") {
      doc.convention = Bilateral{};
    } else if (type == "multilateral") {
      const int k = integer(require(cj, "class", "$.convention"), "$.convention.class");
      if (k < 1 || k > m.classes) fail("$.convention.class", "class " + std::to_string(k) + " is not in the market");
      doc.convention = Multilateral{k};
    } else if (type == "custom") {
      Custom custom;
      const Json& blocks = require(cj, "blocks", "$.convention");
      if (!blocks.is_object()) fail("$.convention.blocks", "expected an object keyed by participant");
      for (const auto& [name, list] : blocks.items()) {
        const std::string path = "$.convention.blocks." + name;
        auto v = m.find(name);
        if (!v) fail(path, "unknown participant '" + name + "'");
        if (!list.is_array()) fail(path, "expected an array of blocks");
        auto& out = custom.blocks[*v];
        for (std::size_t b = 0; b < list.size(); ++b) {
          const std::string bpath = path + "[" + std::to_string(b) + "]";
          if (!list[b].is_array()) fail(bpath, "expected an array of link indices");
          std::vector<LinkIndex> block;
          for (std::size_t e = 0; e < list[b].size(); ++e) {
            const int idx = integer(list[b][e], bpath + "[" + std::to_string(e) + "]");
            if (idx < 0) fail(bpath + "[" + std::to_string(e) + "]", "link index must be non-negative");
            block.push_back(static_cast<LinkIndex>(idx));
          }
          out.push_back(std::move(block));
        }
      }
      try {
        validate_partition(m, custom);
      } catch (const ValidationError& e) {
        fail("$.convention.blocks", e.what());
      }
      doc.convention = std::move(custom);
    } else {
      fail("$.convention.type", "unknown convention '" + type + "'");
    }
  }
  return doc;
}

MarketDocument parse_market_text(const std::string& content) {
  Json j;
  try {
    j = Json::parse(content);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return parse_market(j);
}

MarketDocument parse_market_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open market file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_market_text(buffer.str());
}

Json to_json(const MarketDocument& doc) {
  const Market& m = doc.market;
  Json j;
  j["participants"] = m.participants;
  j["classes"] = m.classes;
  j["directed"] = m.directed;
  Json links = Json::array();
  for (const Link& l : m.links) {
    Json lj{{"from", m.name(l.from)}, {"to", m.name(l.to)}, {"class", l.cls}, {"directed", l.directed}};
    if (l.weight) lj["weight"] = *l.weight;
    links.push_back(std::move(lj));
  }
  j["links"] = std::move(links);
  j["convention"] = std::visit(Overloaded{
                                   [](const Bilateral&) { return Json{{"type", "bilateral"}}; },
                                   [](const Multilateral& x) { return Json{{"type", "multilateral"}, {"class", x.cls}}; },
                                   [&m](const Custom& x) {
                                     Json blocks = Json::object();
                                     for (const auto& [v, list] : x.blocks) blocks[m.name(v)] = list;
                                     return Json{{"type", "custom"}, {"blocks", blocks}};
                                   },
                               },
                               doc.convention);
  if (doc.dist) j["dist"] = to_json(*doc.dist);
  return j;
}

NettingConvention parse_convention(const std::string& spec, const Market& m) {
  if (spec == "bilateral") return Bilateral{};
  const std::string prefix = "multilateral:";
  if (spec.rfind(prefix, 0) == 0) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(spec.substr(prefix.size()), &used);
      if (used != spec.size() - prefix.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ValidationError("convention '" + spec + "': class must be an integer");
    }
    if (k < 1 || k > m.classes) throw ValidationError("convention '" + spec + "': class not in the market");
    return Multilateral{k};
  }
  throw ValidationError("unknown convention '" + spec + "' (use bilateral or multilateral:k)");
}

Json to_json(const ExposureReport& r, const Market& m) {
  Json j;
  j["convention"] = r.convention;
  j["market_total"] = r.market_total;
  j["multilateral_component"] = r.multilateral_component;
  j["bilateral_component"] = r.bilateral_component;
  j["max_error"] = r.max_error;
  Json per = Json::object();
  for (Vertex v = 0; v < m.size(); ++v) per[m.name(v)] = r.per_participant.at(v);
  j["per_participant"] = std::move(per);
  Json sets = Json::array();
  for (const auto& s : r.per_netting_set) {
    sets.push_back({{"owner", m.name(s.owner)},
                    {"set", s.descriptor},
                    {"claims", s.signature.claims},
                    {"debts", s.signature.debts},
                    {"symmetric", s.signature.symmetric},
                    {"expected", s.value.expected},
                    {"method", s.value.method},
                    {"route", s.value.detail},
                    {"error", s.value.error}});
  }
  j["netting_sets"] = std::move(sets);
  Json pairs = Json::array();
  for (const auto& p : r.pairs) pairs.push_back({{"a", m.name(p.a)}, {"b", m.name(p.b)}, {"expected", p.expected}});
  j["pairs"] = std::move(pairs);
  j["warnings"] = r.warnings;
  return j;
}

std::string to_table(const ExposureReport& r, const Market& m) {
  std::ostringstream os;
  os << "convention: " << r.convention << "\n\n";
  os << std::left << std::setw(12) << "owner" << std::setw(22) << "netting set" << std::setw(10) << "c/d/s"
     << std::right << std::setw(18) << "expected" << "  " << std::left << "method\n";
  os << std::string(72, '-') << "\n";
  os << std::setprecision(12);
  for (const auto& s : r.per_netting_set) {
    std::ostringstream sig;
    sig << s.signature.claims << "/" << s.signature.debts << "/" << s.signature.symmetric;
    os << std::left << std::setw(12) << m.name(s.owner) << std::setw(22) << s.descriptor << std::setw(10)
       << sig.str() << std::right << std::setw(18) << s.value.expected << "  " << std::left << s.value.method
       << " (" << s.value.detail << ")\n";
  }
  os << "\nper participant:\n";
  for (Vertex v = 0; v < m.size(); ++v)
    os << "  " << std::left << std::setw(12) << m.name(v) << std::right << std::setw(18) << r.per_participant.at(v)
       << "\n";
  os << "\nmarket total: " << r.market_total << "\n";
  if (r.multilateral_component > 0.0)
    os << "  multilateral part: " << r.multilateral_component << "\n  bilateral part:    "
       << r.bilateral_component << "\n";
  if (r.max_error > 0.0) os << "  largest numeric error estimate: " << r.max_error << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  return os.str();
}

void write_report(std::ostream& os, const ExposureReport& r, const Market& m, ReportFormat format) {
  if (format == ReportFormat::Json) {
    os << to_json(r, m).dump(2) << "\n";
  } else {
    os << to_table(r, m);
  }
}

Json to_json(const AdvantageReport& r) {
  return Json{{"with_ccp", r.with_ccp},
              {"without", r.without},
              {"advantageous", r.advantageous},
              {"tie", r.tie},
              {"multilateral_component", r.multilateral.multilateral_component},
              {"bilateral_component", r.multilateral.bilateral_component}};
}

}  // namespace netrisk
