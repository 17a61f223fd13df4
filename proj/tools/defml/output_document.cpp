#include "output_document.hpp"

#include <stdexcept>

#include "defml/version.hpp"

namespace defml::cli {

OutputFormat parse_format(const std::string& token) {
  if (token == "json") return OutputFormat::Json;
  if (token == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown format '" + token + "' (expected json or csv)");
}

std::string format_number(double x) {
  return nlohmann::json(x).dump();
}

std::string OutputDocument::render(OutputFormat format) const {
  if (format == OutputFormat::Json) return json.dump(2) + "\n";
  std::string out;
  for (const auto& line : csv_comment) out += "# " + line + "\n";
  for (const auto& row : csv_rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += row[i];
    }
    out += "\n";
  }
  return out;
}

nlohmann::ordered_json make_metadata(const std::string& command,
                                     nlohmann::ordered_json params,
                                     std::vector<std::string> provenance) {
  nlohmann::ordered_json doc;
  doc["tool"] = "defml";
  doc["version"] = kVersion;
  doc["command"] = command;
  doc["params"] = std::move(params);
  doc["provenance"] = std::move(provenance);
  return doc;
}

}  // namespace defml::cli
