#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dzeta/run_config.hpp"

namespace dzeta {

inline constexpr int SCHEMA_VERSION = 1;
inline constexpr const char* PROGRAM_VERSION = "0.1.0";

// Machine-readable report: schema-stable key order, shortest round-trip
// numbers, the fully resolved config embedded in every output. Identical
// config produces byte-identical bytes.
struct Report {
  using Cell = std::variant<double, std::int64_t, bool, std::string>;

  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::pair<std::string, Cell>> scalars;

  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void scalar(const std::string& key, Cell value) {
    scalars.emplace_back(key, std::move(value));
  }

  std::string to_csv() const;
  std::string to_json() const;
  std::string render(const std::string& format) const;  // "csv" | "json"
};

/// Writes to the path, or to `fallback` when the path is empty.
void write_output(const std::string& text, const std::string& path,
                  std::ostream& fallback);

}  // namespace dzeta
