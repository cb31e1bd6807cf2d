#include "dzeta/run_config.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace dzeta {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key +
                                "': cannot parse real value '" + value + "'");
  }
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const std::int64_t v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key +
                                "': cannot parse integer value '" + value +
                                "'");
  }
}

std::vector<std::pair<double, double>> parse_atoms(const std::string& key,
                                                   const std::string& value) {
  std::vector<std::pair<double, double>> atoms;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("config key '" + key +
                                  "': atoms must be 'h:p' pairs, got '" +
                                  item + "'");
    }
    atoms.emplace_back(parse_double(key, trim(item.substr(0, colon))),
                       parse_double(key, trim(item.substr(colon + 1))));
  }
  if (atoms.empty()) {
    throw std::invalid_argument("config key '" + key +
                                "': atom list is empty");
  }
  return atoms;
}

std::string format_atoms(const std::vector<std::pair<double, double>>& atoms) {
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i > 0) out += ',';
    out += format_double(atoms[i].first);
    out += ':';
    out += format_double(atoms[i].second);
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open config file '" + path + "'");
  }
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config file '" + path + "' line " +
                                  std::to_string(lineno) +
                                  ": expected 'key = value'");
    }
    cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "model.m0_sq") {
    model.m0_sq = parse_double(key, value);
  } else if (key == "model.lambda") {
    model.lambda = parse_double(key, value);
  } else if (key == "disorder.family") {
    disorder_family = value;
  } else if (key == "disorder.radius") {
    disorder_radius = parse_double(key, value);
  } else if (key == "disorder.sigma") {
    disorder_sigma = parse_double(key, value);
  } else if (key == "disorder.atoms") {
    disorder_atoms = parse_atoms(key, value);
  } else if (key == "series.a") {
    series.a = parse_double(key, value);
  } else if (key == "series.k_max") {
    series.k_max = static_cast<int>(parse_int(key, value));
  } else if (key == "series.term_tol") {
    series.term_tol = parse_double(key, value);
  } else if (key == "quadrature.abs_tol") {
    quadrature.abs_tol = parse_double(key, value);
  } else if (key == "quadrature.rel_tol") {
    quadrature.rel_tol = parse_double(key, value);
  } else if (key == "quadrature.max_subdivisions") {
    quadrature.max_subdivisions = static_cast<int>(parse_int(key, value));
  } else if (key == "quadrature.decay_cutoff") {
    quadrature.decay_cutoff = parse_double(key, value);
  } else if (key == "mc.n_samples") {
    mc.n_samples = parse_int(key, value);
  } else if (key == "mc.seed") {
    mc.seed = static_cast<std::uint64_t>(parse_int(key, value));
  } else if (key == "output.format") {
    if (value != "csv" && value != "json") {
      throw std::invalid_argument("output.format must be 'csv' or 'json'");
    }
    output_format = value;
  } else if (key == "output.path") {
    output_path = value;
  } else {
    throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

void RunConfig::validate() const {
  model.validate();
  series.validate();
  quadrature.validate();
  mc.validate();
  make_disorder();  // family and parameter checks
  if (output_format != "csv" && output_format != "json") {
    throw std::invalid_argument("output.format must be 'csv' or 'json'");
  }
}

DisorderDistribution RunConfig::make_disorder() const {
  if (disorder_family == "uniform") {
    return DisorderDistribution::uniform(disorder_radius);
  }
  if (disorder_family == "truncated_gaussian") {
    return DisorderDistribution::truncated_gaussian(disorder_sigma,
                                                    disorder_radius);
  }
  if (disorder_family == "atoms") {
    return DisorderDistribution::finite_atoms(disorder_atoms);
  }
  if (disorder_family == "gaussian" || disorder_family == "normal") {
    throw std::invalid_argument(
        "disorder.family '" + disorder_family +
        "' has non-compact support, which the moment growth bound and the "
        "series representation require; use 'truncated_gaussian' with a "
        "finite disorder.radius");
  }
  throw std::invalid_argument(
      "disorder.family must be one of: uniform, truncated_gaussian, atoms");
}

std::vector<std::pair<std::string, std::string>> RunConfig::resolved_entries()
    const {
  std::vector<std::pair<std::string, std::string>> entries;
  entries.emplace_back("model.m0_sq", format_double(model.m0_sq));
  entries.emplace_back("model.lambda", format_double(model.lambda));
  entries.emplace_back("disorder.family", disorder_family);
  if (disorder_family == "atoms") {
    entries.emplace_back("disorder.atoms", format_atoms(disorder_atoms));
  } else {
    entries.emplace_back("disorder.radius", format_double(disorder_radius));
    if (disorder_family == "truncated_gaussian") {
      entries.emplace_back("disorder.sigma", format_double(disorder_sigma));
    }
  }
  entries.emplace_back("series.a", format_double(series.a));
  entries.emplace_back("series.k_max", std::to_string(series.k_max));
  entries.emplace_back("series.term_tol", format_double(series.term_tol));
  entries.emplace_back("quadrature.abs_tol", format_double(quadrature.abs_tol));
  entries.emplace_back("quadrature.rel_tol", format_double(quadrature.rel_tol));
  entries.emplace_back("quadrature.max_subdivisions",
                       std::to_string(quadrature.max_subdivisions));
  entries.emplace_back("quadrature.decay_cutoff",
                       format_double(quadrature.decay_cutoff));
  entries.emplace_back("mc.n_samples", std::to_string(mc.n_samples));
  entries.emplace_back("mc.seed", std::to_string(mc.seed));
  entries.emplace_back("output.format", output_format);
  entries.emplace_back("output.path", output_path);
  return entries;
}

}  // namespace dzeta
