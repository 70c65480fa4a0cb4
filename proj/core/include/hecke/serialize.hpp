#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hecke/diagram.hpp"
#include "hecke/insertion.hpp"
#include "hecke/measures.hpp"
#include "hecke/tableau.hpp"

namespace hecke {

/// Parameters of a run. Timestamp is informational only and stays out of the
/// data files so that reruns are byte-identical.
struct RunManifest {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> parameters;  // in flag order
  std::uint64_t seed = 0;
  std::string version;
  std::string timestamp;  // ISO 8601, UTC

  std::string to_json() const;
  /// "# key=value" lines: subcommand, version, seed, then parameters.
  std::string csv_header() const;
};

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

/// Fixed-point formatting with `places` decimals, independent of locale.
std::string format_fixed(double value, int places = 6);

/// "4 3 2 1 1"
std::string shape_cell(const YoungDiagram& shape);

std::string to_json(const YoungDiagram& shape);
std::string to_json(const IncreasingTableau& t);
std::string to_json(const SetValuedTableau& t);
/// {"shape": [...], "p": [[...]], "q": [[[...]]]}
std::string to_json(const HeckePair& pq);
/// {"n", "q", "denominator", "entries": [{"shape", "num", "den", "left", "right"}], "expected_lis": {"num", "den"}}
std::string to_json(const ExactDistribution& d);

YoungDiagram diagram_from_json(const std::string& text);
HeckePair hecke_pair_from_json(const std::string& text);

}  // namespace hecke
