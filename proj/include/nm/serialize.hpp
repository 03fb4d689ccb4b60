#pragma once

// JSON encoding of search tallies and checkpoint files.  Requires the
// single-header nlohmann json on the include path.

#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nm/arith.hpp"
#include "nm/error.hpp"
#include "nm/search.hpp"

namespace nm {

inline constexpr const char* schema_version = "nm/1";

/// Integers that may exceed 64 bits are written as decimal strings.
inline nlohmann::json big_to_json(const BigInt& n) {
  if (n <= BigInt(std::numeric_limits<std::int64_t>::max()) && n >= BigInt(std::numeric_limits<std::int64_t>::min()))
    return static_cast<std::int64_t>(n);
  return n.str();
}

inline nlohmann::json witness_to_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return {{"kunz", w->kunz.coords}, {"generators", w->generators}};
}

inline std::optional<Witness> witness_from_json(const nlohmann::json& j, std::int64_t m) {
  if (j.is_null()) return std::nullopt;
  Witness w;
  w.kunz = KunzVector{m, j.at("kunz").get<std::vector<std::int64_t>>()};
  w.generators = j.at("generators").get<std::vector<std::int64_t>>();
  return w;
}

inline nlohmann::json tally_to_json(const SearchTally& t) {
  return {{"best_rho", t.best_rho},
          {"rho_witness", witness_to_json(t.rho_witness)},
          {"best_type", t.best_type},
          {"type_witness", witness_to_json(t.type_witness)},
          {"scanned", t.scanned},
          {"matching", t.matching}};
}

inline SearchTally tally_from_json(const nlohmann::json& j, std::int64_t m) {
  SearchTally t;
  t.best_rho = j.at("best_rho").get<std::int64_t>();
  t.rho_witness = witness_from_json(j.at("rho_witness"), m);
  t.best_type = j.at("best_type").get<std::int64_t>();
  t.type_witness = witness_from_json(j.at("type_witness"), m);
  t.scanned = j.at("scanned").get<std::int64_t>();
  t.matching = j.at("matching").get<std::int64_t>();
  return t;
}

inline nlohmann::json search_result_to_json(const SearchResult& r) {
  return {{"e", r.e},
          {"m", r.m},
          {"kunz_bound", r.kunz_bound},
          {"best_rho", r.tally.best_rho},
          {"rho_witness", witness_to_json(r.tally.rho_witness)},
          {"best_type", r.tally.best_type},
          {"type_witness", witness_to_json(r.tally.type_witness)},
          {"scanned", r.tally.scanned},
          {"matching", r.tally.matching},
          {"exhausted", r.exhausted},
          {"cem", big_to_json(r.cem)},
          {"dem", big_to_json(r.dem)}};
}

/// One checkpoint line per finished work unit.
inline std::string checkpoint_record(std::int64_t e, std::int64_t m, std::int64_t bound, const KunzPrefix& prefix,
                                     const SearchTally& t) {
  nlohmann::json j = {{"schema_version", schema_version},
                      {"e", e},
                      {"m", m},
                      {"kunz_bound", bound},
                      {"prefix", prefix},
                      {"tally", tally_to_json(t)}};
  return j.dump();
}

/// Loads finished units for (e, m, K).  Lines for other parameters and a
/// truncated last line (interrupted write) are skipped.
inline std::map<KunzPrefix, SearchTally> load_checkpoint(const std::string& path, std::int64_t e, std::int64_t m,
                                                         std::int64_t bound) {
  std::map<KunzPrefix, SearchTally> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) continue;
    if (j.value("schema_version", "") != schema_version) continue;
    if (j.value("e", -1) != e || j.value("m", -1) != m || j.value("kunz_bound", -1) != bound) continue;
    out[j.at("prefix").get<KunzPrefix>()] = tally_from_json(j.at("tally"), m);
  }
  return out;
}

}  // namespace nm
