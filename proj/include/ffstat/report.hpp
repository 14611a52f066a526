#ifndef FFSTAT_REPORT_HPP
#define FFSTAT_REPORT_HPP

// JSON and CSV rendering.  Objects use nlohmann::json's default (sorted)
// key order; rationals are strings "num/den"; integers too large for 64
// bits are decimal strings.

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include <json.hpp>

#include "ffstat/combinatorics.hpp"
#include "ffstat/statistics.hpp"
#include "ffstat/verify.hpp"

namespace ffstat {

inline constexpr const char* kToolVersion = "1.0.0";

inline nlohmann::json json_int(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) return v.convert_to<std::int64_t>();
  return v.str();
}

inline nlohmann::json json_rational(const Rational& r) { return to_string(r); }

inline nlohmann::json to_json(const Field& F) {
  return {{"p", F.p()}, {"nu", F.nu()}, {"modulus", F.modulus()}, {"q", F.q()}};
}

/// Every partition of k is listed, zero counts included.
inline nlohmann::json to_json(const TypeCensus& census, int k) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& lambda : partitions_of(k)) out[lambda.to_string()] = census.at(lambda);
  return out;
}

inline nlohmann::json to_json(const Coverage& c) {
  return {{"status", to_string(c.status)}, {"detail", c.detail}};
}

inline nlohmann::json excluded_json(const DeviationReport& r) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [status, s] : r.excluded)
    out[to_string(status)] = {{"cells", s.cells}, {"max_abs_dev", json_rational(s.max_abs_dev)}};
  return out;
}

inline nlohmann::json to_json(const DeviationReport& r) {
  nlohmann::json out = {
      {"mode", r.mode == ScanMode::Interval ? "interval" : "progression"},
      {"q", r.q},
      {"k", r.k},
      {"m", r.m},
      {"lambda", r.lambda.to_string()},
      {"cells", r.cells},
      {"covered_cells", r.covered_cells},
      {"max_abs_dev", json_rational(r.max_abs_dev)},
      {"normalized_constant", r.normalized_constant.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.normalized_constant)},
      {"total_count", r.total_count},
      {"aggregate_census", to_json(r.aggregate, r.k)},
      {"census_consistent", r.census_consistent},
      {"truncated", r.truncated},
  };
  if (!r.per_cell.empty()) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : r.per_cell)
      cells.push_back({{"cell_id", c.cell_id},
                       {"representative", c.label},
                       {"count", c.count},
                       {"census_total", c.census_total},
                       {"expected", json_rational(c.expected)},
                       {"abs_dev", json_rational(c.abs_dev)},
                       {"coverage", to_string(c.status)}});
    out["per_cell"] = std::move(cells);
  }
  return out;
}

inline nlohmann::json to_json(const CounterexampleResult& r) {
  return {{"q", r.q},
          {"k", r.k},
          {"expected", r.expected ? nlohmann::json(*r.expected) : nlohmann::json(nullptr)},
          {"actual", r.actual},
          {"agrees", r.agrees ? nlohmann::json(*r.agrees) : nlohmann::json(nullptr)}};
}

inline nlohmann::json to_json(const VarianceTrend& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& pt : t.per_q)
    rows.push_back({{"q", pt.q},
                    {"variance", json_rational(pt.variance)},
                    {"ratio", json_rational(pt.ratio)},
                    {"gap", json_rational(pt.gap)}});
  return {{"k", t.k}, {"m", t.m}, {"limit", t.limit}, {"per_q", std::move(rows)}};
}

inline nlohmann::json to_json(const NuDecomposition& d) {
  nlohmann::json terms = nlohmann::json::object();
  for (const auto& [dd, v] : d.proper_terms) terms[std::to_string(dd)] = v;
  return {{"k_pi", d.k_pi},
          {"proper_terms", std::move(terms)},
          {"epsilon", d.epsilon},
          {"reconstructed", d.reconstructed},
          {"reconstructed_plus_epsilon", d.reconstructed_plus_epsilon},
          {"nu", d.nu},
          {"identity_holds", d.reconstructed == d.nu}};
}

inline nlohmann::json to_json(const MeanVariance& mv) {
  return {{"mean", json_rational(mv.mean)}, {"variance", json_rational(mv.variance)}};
}

inline constexpr const char* kCsvHeader = "q,k,m,lambda,cell_id,count,expected_num,expected_den,abs_dev,covered";

/// Flattened per-cell table; the report must carry per_cell rows.
inline void write_csv(std::ostream& os, const DeviationReport& r) {
  os << kCsvHeader << '\n';
  for (const auto& c : r.per_cell) {
    os << r.q << ',' << r.k << ',' << r.m << ',' << r.lambda.to_string() << ',' << c.cell_id << ',' << c.count << ','
       << boost::multiprecision::numerator(c.expected) << ',' << boost::multiprecision::denominator(c.expected) << ','
       << to_string(c.abs_dev) << ',' << (c.status == CoverageStatus::Covered ? "true" : "false") << '\n';
  }
}

/// Top-level report document.
inline nlohmann::json make_document(const std::string& command, const Field* field, nlohmann::json params,
                                    nlohmann::json result, nlohmann::json excluded, std::int64_t timing_ms) {
  return {{"tool_version", kToolVersion},
          {"field", field ? to_json(*field) : nlohmann::json(nullptr)},
          {"command", command},
          {"params", std::move(params)},
          {"result", std::move(result)},
          {"excluded", std::move(excluded)},
          {"timing_ms", timing_ms}};
}

}  // namespace ffstat

#endif  // FFSTAT_REPORT_HPP
