#pragma once

#include <string>

#include "netrisk/io.hpp"
#include "netrisk/market.hpp"

namespace fixtures {

inline netrisk::MarketDocument load(const std::string& name) {
  return netrisk::parse_market_file(std::string(NETRISK_DATA_DIR) + "/" + name);
}

inline netrisk::Link undirected(netrisk::Vertex a, netrisk::Vertex b, int cls = 1) {
  return {a, b, cls, false, std::nullopt};
}

inline netrisk::Link directed(netrisk::Vertex debtor, netrisk::Vertex creditor, int cls = 1) {
  return {debtor, creditor, cls, true, std::nullopt};
}

inline netrisk::Market named(std::size_t n, int classes = 1) {
  netrisk::Market m;
  for (std::size_t i = 0; i < n; ++i) m.participants.push_back("p" + std::to_string(i));
  m.classes = classes;
  return m;
}

/// One centre joined to `spokes` leaves by undirected class-1 links.
inline netrisk::Market star(std::size_t spokes) {
  netrisk::Market m = named(spokes + 1);
  for (std::size_t i = 1; i <= spokes; ++i) m.links.push_back(undirected(0, i));
  return m;
}

/// Two participants with one undirected link in each of `classes` classes.
inline netrisk::Market pair(int classes) {
  netrisk::Market m = named(2, classes);
  for (int k = 1; k <= classes; ++k) m.links.push_back(undirected(0, 1, k));
  return m;
}

}  // namespace fixtures
