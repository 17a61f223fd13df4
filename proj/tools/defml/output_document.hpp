#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace defml::cli {

enum class OutputFormat { Json, Csv };

OutputFormat parse_format(const std::string& token);

/// A finished command result: one JSON document plus the equivalent CSV
/// table, carrying identical numeric content, and the process exit code
/// the command asks for. Key order is fixed and numbers are serialized
/// in shortest round-trip form, so identical invocations render
/// byte-identical output.
struct OutputDocument {
  nlohmann::ordered_json json;
  std::vector<std::string> csv_comment;          // "# key=value" lines
  std::vector<std::vector<std::string>> csv_rows;  // header first
  int exit_code = 0;

  std::string render(OutputFormat format) const;
};

/// Canonical (shortest round-trip) rendering of a double, identical to
/// its JSON serialization.
std::string format_number(double x);

nlohmann::ordered_json make_metadata(const std::string& command,
                                     nlohmann::ordered_json params,
                                     std::vector<std::string> provenance);

}  // namespace defml::cli
