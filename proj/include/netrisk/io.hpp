#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "netrisk/advantage.hpp"
#include "netrisk/distribution.hpp"
#include "netrisk/exposure.hpp"
#include "netrisk/market.hpp"

namespace netrisk {

using Json = nlohmann::ordered_json;

/// Everything a market file holds.
struct MarketDocument {
  Market market;
  std::optional<DistributionSpec> dist;
  NettingConvention convention = Bilateral{};
};

/// Errors are ValidationError messages prefixed with the JSON path.
MarketDocument parse_market(const Json& j);
MarketDocument parse_market_text(const std::string& text);
MarketDocument parse_market_file(const std::filesystem::path& path);

Json to_json(const MarketDocument& doc);
Json to_json(const DistributionSpec& dist);

DistributionSpec parse_distribution(const Json& j, const std::string& path = "$.dist");
/// "bilateral" or "multilateral:k".
NettingConvention parse_convention(const std::string& text, const Market& m);

enum class ReportFormat { Json, Table };

Json to_json(const ExposureReport& r, const Market& m);
std::string to_table(const ExposureReport& r, const Market& m);
void write_report(std::ostream& os, const ExposureReport& r, const Market& m, ReportFormat format);

Json to_json(const AdvantageReport& r);

}  // namespace netrisk
