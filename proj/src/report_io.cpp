#include "dzeta/report_io.hpp"

#include <fstream>
#include <ostream>

#include "json.hpp"

namespace dzeta {

namespace {

std::string cell_to_string(const Report::Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return v;
        }
      },
      cell);
}

nlohmann::ordered_json cell_to_json(const Report::Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json { return v; }, cell);
}

}  // namespace

std::string Report::to_csv() const {
  std::string out;
  out += "# dzeta " + command + "\n";
  out += "# schema_version," + std::to_string(SCHEMA_VERSION) + "\n";
  out += "# generator,dzeta " + std::string(PROGRAM_VERSION) + "\n";
  for (const auto& [key, value] : config) {
    out += "# config," + key + "," + value + "\n";
  }
  for (const auto& [key, value] : scalars) {
    out += "# " + key + "," + cell_to_string(value) + "\n";
  }
  if (!columns.empty()) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c > 0) out += ',';
      out += columns[c];
    }
    out += '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c > 0) out += ',';
        out += cell_to_string(row[c]);
      }
      out += '\n';
    }
  } else if (!scalars.empty()) {
    // Scalar-only reports become a single header + data row.
    std::string header, data;
    for (std::size_t i = 0; i < scalars.size(); ++i) {
      if (i > 0) {
        header += ',';
        data += ',';
      }
      header += scalars[i].first;
      data += cell_to_string(scalars[i].second);
    }
    out += header + "\n" + data + "\n";
  }
  return out;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = SCHEMA_VERSION;
  j["generator"] = std::string("dzeta ") + PROGRAM_VERSION;
  j["command"] = command;
  nlohmann::ordered_json jconfig;
  for (const auto& [key, value] : config) jconfig[key] = value;
  j["config"] = std::move(jconfig);
  for (const auto& [key, value] : scalars) j[key] = cell_to_json(value);
  if (!columns.empty()) {
    nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json jrow;
      for (std::size_t c = 0; c < row.size() && c < columns.size(); ++c) {
        jrow[columns[c]] = cell_to_json(row[c]);
      }
      jrows.push_back(std::move(jrow));
    }
    j["rows"] = std::move(jrows);
  }
  return j.dump(2) + "\n";
}

std::string Report::render(const std::string& format) const {
  if (format == "csv") return to_csv();
  if (format == "json") return to_json();
  throw std::invalid_argument("output format must be 'csv' or 'json'");
}

void write_output(const std::string& text, const std::string& path,
                  std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open output path '" + path + "'");
  }
  out << text;
}

}  // namespace dzeta
