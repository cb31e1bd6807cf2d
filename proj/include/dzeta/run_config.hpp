#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dzeta/disorder.hpp"
#include "dzeta/model.hpp"
#include "dzeta/oracle.hpp"
#include "dzeta/zeta.hpp"

namespace dzeta {

// A run configuration: flat dotted keys in a plain text file, one
// `key = value` pair per line, '#' comments. CLI --set overrides file values.
// Unknown keys are rejected.
struct RunConfig {
  ModelParams model{};

  std::string disorder_family = "uniform";  // uniform | truncated_gaussian | atoms
  double disorder_radius = 1.0;
  double disorder_sigma = 1.0;
  // encoded in config files as "h1:p1,h2:p2,..."
  std::vector<std::pair<double, double>> disorder_atoms = {{-1.0, 0.5},
                                                           {1.0, 0.5}};

  SeriesConfig series{};
  QuadratureConfig quadrature{};
  McConfig mc{.n_samples = 100000, .seed = 12345};

  std::string output_format = "json";  // csv | json
  std::string output_path;             // empty = stdout

  static RunConfig from_file(const std::string& path);

  /// Applies one `key=value` override; throws std::invalid_argument on
  /// unknown keys or unparsable values.
  void set(const std::string& key, const std::string& value);

  /// Validates every component invariant.
  void validate() const;

  /// Builds the disorder measure; rejects non-compact requests.
  DisorderDistribution make_disorder() const;

  /// Fully resolved key/value pairs in fixed order, for embedding in reports.
  std::vector<std::pair<std::string, std::string>> resolved_entries() const;
};

/// Shortest decimal string that parses back to exactly `v` (%.17g-style).
std::string format_double(double v);

}  // namespace dzeta
