#pragma once

/**
 * @file report.hpp
 * @brief JSON rendering of exact values and the line-delimited corpus format.
 *
 * Rationals are always strings in lowest terms ("7/2", or "4" when integral).
 * Integers are JSON numbers when they fit in 64 bits and strings otherwise.
 * Divisor-indexed tables are objects keyed by the divisor, ascending.
 */

#include "ztile/integer_set.hpp"
#include "ztile/numtheory.hpp"
#include "ztile/set_literal.hpp"
#include "ztile/spectra.hpp"
#include "ztile/tiling.hpp"

#include <json.hpp>

#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

namespace ztile {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(value));
  return Json(value.str());
}

inline Json to_json(const Rational& value) { return Json(to_string(value)); }

template <class Value>
Json to_json(const DivisorIndexed<Value>& table) {
  Json out = Json::object();
  for (std::size_t i = 0; i < table.size(); ++i) out[std::to_string(table.divisors[i])] = to_json(table.values[i]);
  return out;
}

/// One line of a tiling corpus.
struct CorpusRecord {
  std::int64_t modulus = 0;
  IntegerSet a;
  IntegerSet b;
  std::vector<std::int64_t> support_a;
  std::vector<std::int64_t> support_b;
  bool t1_a = false, t2_a = false, t1_b = false, t2_b = false;

  friend bool operator==(const CorpusRecord&, const CorpusRecord&) = default;
};

inline CorpusRecord make_corpus_record(std::int64_t modulus, const IntegerSet& a, const IntegerSet& b) {
  CorpusRecord rec;
  rec.modulus = modulus;
  rec.a = a;
  rec.b = b;
  const auto t1a = check_T1(a);
  const auto t1b = check_T1(b);
  rec.support_a = t1a.support;
  rec.support_b = t1b.support;
  rec.t1_a = t1a.holds;
  rec.t1_b = t1b.holds;
  rec.t2_a = check_T2(a).holds;
  rec.t2_b = check_T2(b).holds;
  return rec;
}

inline Json to_json(const CorpusRecord& rec) {
  return Json{{"M", rec.modulus},       {"A", format_set(rec.a)},   {"B", format_set(rec.b)},
              {"S_A", rec.support_a},   {"S_B", rec.support_b},     {"T1_A", rec.t1_a},
              {"T2_A", rec.t2_a},       {"T1_B", rec.t1_b},         {"T2_B", rec.t2_b}};
}

inline CorpusRecord corpus_record_from_json(const Json& j) {
  CorpusRecord rec;
  rec.modulus = j.at("M").get<std::int64_t>();
  rec.a = parse_set(j.at("A").get<std::string>());
  rec.b = parse_set(j.at("B").get<std::string>());
  rec.support_a = j.at("S_A").get<std::vector<std::int64_t>>();
  rec.support_b = j.at("S_B").get<std::vector<std::int64_t>>();
  rec.t1_a = j.at("T1_A").get<bool>();
  rec.t2_a = j.at("T2_A").get<bool>();
  rec.t1_b = j.at("T1_B").get<bool>();
  rec.t2_b = j.at("T2_B").get<bool>();
  return rec;
}

inline void write_corpus(std::ostream& out, const std::vector<CorpusRecord>& records) {
  for (const auto& rec : records) out << to_json(rec).dump() << '\n';
}

inline std::vector<CorpusRecord> read_corpus(std::istream& in) {
  std::vector<CorpusRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(corpus_record_from_json(Json::parse(line)));
    } catch (const std::exception& e) {
      throw parse_error("corpus line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace ztile
