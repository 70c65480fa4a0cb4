#include "hecke/serialize.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <stdexcept>

#include "json.hpp"

namespace hecke {

using nlohmann::ordered_json;

namespace {

ordered_json rational_json(const Rational& r) {
  return {{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

}  // namespace

std::string RunManifest::to_json() const {
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  ordered_json j{{"subcommand", subcommand},
                 {"parameters", params},
                 {"seed", seed},
                 {"version", version},
                 {"timestamp", timestamp}};
  return j.dump(2) + "\n";
}

std::string RunManifest::csv_header() const {
  std::string out = "# subcommand=" + subcommand + "\n# version=" + version + "\n# seed=" + std::to_string(seed) + "\n";
  for (const auto& [k, v] : parameters) out += "# " + k + "=" + v + "\n";
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_fixed(double value, int places) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, value);
  std::string s = buf;
  // Avoid "-0.000000".
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

std::string shape_cell(const YoungDiagram& shape) {
  std::string out;
  for (std::size_t i = 0; i < shape.parts().size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(shape.parts()[i]);
  }
  return out;
}

std::string to_json(const YoungDiagram& shape) { return ordered_json(shape.parts()).dump(); }

std::string to_json(const IncreasingTableau& t) { return ordered_json(t.rows()).dump(); }

std::string to_json(const SetValuedTableau& t) { return ordered_json(t.rows()).dump(); }

std::string to_json(const HeckePair& pq) {
  ordered_json j{{"shape", pq.shape().parts()}, {"p", pq.p.rows()}, {"q", pq.q.rows()}};
  return j.dump();
}

std::string to_json(const ExactDistribution& d) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : d.entries) {
    entries.push_back({{"shape", e.shape.parts()},
                       {"num", numerator(e.probability).str()},
                       {"den", denominator(e.probability).str()},
                       {"left", e.left.str()},
                       {"right", e.right.str()}});
  }
  ordered_json j{{"n", d.n},
                 {"q", d.q},
                 {"denominator", d.denominator.str()},
                 {"entries", entries},
                 {"expected_lis", rational_json(expected_lis(d))}};
  return j.dump(2) + "\n";
}

YoungDiagram diagram_from_json(const std::string& text) {
  return YoungDiagram(ordered_json::parse(text).get<std::vector<int>>());
}

HeckePair hecke_pair_from_json(const std::string& text) {
  const auto j = ordered_json::parse(text);
  return {IncreasingTableau(j.at("p").get<Rows>()), SetValuedTableau(j.at("q").get<SetRows>())};
}

}  // namespace hecke
