#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "modorbit/counting.hpp"
#include "modorbit/orbits.hpp"
#include "modorbit/qfield.hpp"

namespace modorbit {

inline constexpr const char* kVersion = "1.0.0";

/// One line of a verification sweep.
struct RunRecord {
  std::int64_t n = 0;
  std::int64_t h_formula = 0;
  std::int64_t g_formula = 0;
  std::int64_t h_oracle = 0;
  std::int64_t legacy_am2 = 0;
  bool agrees = false;
  std::optional<bool> congruent_mod8;
  std::int64_t elapsed_micros = 0;

  /// A record passes when formula and oracle agree and, for n >= 3, the
  /// count is divisible by 8.
  bool ok() const { return agrees && congruent_mod8.value_or(true); }
};

namespace detail {

inline std::int64_t narrow(Int value) {
  if (value > INT64_MAX || value < INT64_MIN) throw Error(ErrorCode::Overflow, "value exceeds 64 bits");
  return static_cast<std::int64_t>(value);
}

}  // namespace detail

inline RunRecord make_record(Int n) {
  const auto started = std::chrono::steady_clock::now();
  const OrbitCounts counts = orbit_counts(n);
  RunRecord r;
  r.n = detail::narrow(n);
  r.h_formula = detail::narrow(counts.h_formula);
  r.g_formula = detail::narrow(counts.g_formula);
  r.h_oracle = detail::narrow(count_h_orbits_oracle(n));
  r.legacy_am2 = detail::narrow(counts.legacy_am2);
  r.agrees = r.h_formula == r.h_oracle;
  r.congruent_mod8 = counts.congruent_mod8;
  r.elapsed_micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - started).count();
  return r;
}

/// Square-free n in [from, to], ascending; other n are skipped silently.
inline std::vector<RunRecord> sweep(Int from, Int to) {
  if (from < 1 || from > to) throw Error(ErrorCode::OutOfRange, "need 1 <= from <= to");
  std::vector<RunRecord> out;
  for (Int n = from; n <= to; ++n) {
    if (is_square_free(n)) out.push_back(make_record(n));
  }
  return out;
}

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const RunRecord& r) {
  ordered_json j;
  j["n"] = r.n;
  j["h_formula"] = r.h_formula;
  j["g_formula"] = r.g_formula;
  j["h_oracle"] = r.h_oracle;
  j["legacy_am2"] = r.legacy_am2;
  j["agrees"] = r.agrees;
  j["congruent_mod8"] = r.congruent_mod8 ? ordered_json(*r.congruent_mod8) : ordered_json(nullptr);
  j["elapsed_micros"] = r.elapsed_micros;
  return j;
}

inline ordered_json to_json(const std::vector<RunRecord>& records) {
  ordered_json j;
  j["version"] = kVersion;
  j["records"] = ordered_json::array();
  for (const auto& r : records) j["records"].push_back(to_json(r));
  return j;
}

inline RunRecord record_from_json(const ordered_json& j) {
  RunRecord r;
  r.n = j.at("n").get<std::int64_t>();
  r.h_formula = j.at("h_formula").get<std::int64_t>();
  r.g_formula = j.at("g_formula").get<std::int64_t>();
  r.h_oracle = j.at("h_oracle").get<std::int64_t>();
  r.legacy_am2 = j.at("legacy_am2").get<std::int64_t>();
  r.agrees = j.at("agrees").get<bool>();
  if (!j.at("congruent_mod8").is_null()) r.congruent_mod8 = j.at("congruent_mod8").get<bool>();
  r.elapsed_micros = j.at("elapsed_micros").get<std::int64_t>();
  return r;
}

inline constexpr const char* kCsvHeader = "n,h_formula,g_formula,h_oracle,legacy_am2,agrees,congruent_mod8";

inline void write_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.n << ',' << r.h_formula << ',' << r.g_formula << ',' << r.h_oracle << ',' << r.legacy_am2 << ','
        << (r.agrees ? "true" : "false") << ','
        << (r.congruent_mod8 ? (*r.congruent_mod8 ? "true" : "false") : "") << '\n';
  }
}

inline void write_text(std::ostream& out, const std::vector<RunRecord>& records) {
  for (const auto& r : records) {
    out << "n=" << r.n << " h_formula=" << r.h_formula << " g_formula=" << r.g_formula << " h_oracle=" << r.h_oracle
        << " legacy_am2=" << r.legacy_am2 << (r.n == 3 ? " (legacy out of scope)" : "")
        << " agrees=" << (r.agrees ? "yes" : "NO") << " mod8="
        << (r.congruent_mod8 ? (*r.congruent_mod8 ? "yes" : "NO") : "n/a") << '\n';
  }
}

/// Units grouped by kind, each unit as a list of display strings.
inline ordered_json units_to_json(Int n, const std::vector<SpecialUnit>& units) {
  ordered_json j;
  j["n"] = detail::narrow(n);
  j["norm_zero_pairs"] = ordered_json::array();
  j["positive_cycles"] = ordered_json::array();
  for (const auto& unit : units) {
    ordered_json members = ordered_json::array();
    if (const auto* pair = std::get_if<NormZeroPair>(&unit)) {
      members.push_back(display(pair->beta));
      if (!pair->self_paired()) members.push_back(display(pair->x_beta));
      j["norm_zero_pairs"].push_back(members);
    } else {
      for (const auto& e : std::get<PositiveCycle>(unit).cycle.members) members.push_back(display(e));
      j["positive_cycles"].push_back(members);
    }
  }
  return j;
}

}  // namespace modorbit
