#pragma once

/**
 * @file commands.hpp
 * @brief The operations behind each CLI subcommand.
 *
 * Every command returns a self-contained report plus its exit code:
 * 0 when the property is verified or something was found, 1 when it is
 * false or nothing was found, 2 on usage or precondition errors.
 */

#include "ztile/cyclotomic.hpp"
#include "ztile/integer_set.hpp"
#include "ztile/report.hpp"
#include "ztile/search.hpp"
#include "ztile/set_literal.hpp"
#include "ztile/spectra.hpp"
#include "ztile/threeprime.hpp"
#include "ztile/tiling.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ztile {

enum ExitCode : int { kVerified = 0, kRefuted = 1, kUsageError = 2 };

struct CommandResult {
  Json report;
  int exit_code = kVerified;

  std::string verdict() const { return report.value("verdict", std::string{}); }
};

namespace detail {

inline CommandResult make_result(const std::string& command, Json inputs, Json results, std::string verdict,
                                 int exit_code) {
  Json report;
  report["command"] = command;
  report["inputs"] = std::move(inputs);
  report["results"] = std::move(results);
  report["verdict"] = std::move(verdict);
  return {std::move(report), exit_code};
}

/// Runs `body`; precondition and parse failures become an exit-2 report.
inline CommandResult guarded(const std::string& command, const Json& inputs, const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const precondition_error& e) {
    CommandResult out = make_result(command, inputs, Json::object(), "error", kUsageError);
    out.report["error"] = e.what();
    return out;
  } catch (const parse_error& e) {
    CommandResult out = make_result(command, inputs, Json::object(), "error", kUsageError);
    out.report["error"] = e.what();
    return out;
  }
}

inline void require_nonempty(const IntegerSet& s, const char* name) {
  require(!s.empty(), std::string(name) + " must be nonempty");
}

}  // namespace detail

inline CommandResult cmd_verify(const IntegerSet& a, const IntegerSet& b, std::int64_t modulus) {
  const Json inputs{{"a", format_set(a)}, {"b", format_set(b)}, {"modulus", modulus}};
  return detail::guarded("verify", inputs, [&] {
    detail::require_nonempty(a, "A");
    detail::require_nonempty(b, "B");
    require(modulus >= 1, "modulus must be positive");
    const bool direct = is_tiling(a, b, modulus);
    const bool poly = is_tiling_poly(a, b, modulus);
    Json results;
    results["is_tiling"] = direct;
    results["is_tiling_poly"] = poly;
    bool agree = direct == poly;
    if (distinct_mod(a, modulus) && distinct_mod(b, modulus)) {
      const auto sands = sands_criterion(a, b, modulus);
      results["sands"] = Json{{"D_A", sands.divisors_a},
                              {"D_B", sands.divisors_b},
                              {"disjoint", sands.disjoint},
                              {"product_is_M", sands.product_is_M}};
      agree = agree && sands.tiles() == direct;
    } else {
      results["sands"] = Json{{"applicable", false}, {"reason", "elements not distinct modulo M"}};
    }
    results["routes_agree"] = agree;
    return detail::make_result("verify", inputs, std::move(results), direct ? "tiling" : "not-tiling",
                               direct ? kVerified : kRefuted);
  });
}

inline CommandResult cmd_conditions(const IntegerSet& a) {
  const Json inputs{{"a", format_set(a)}};
  return detail::guarded("conditions", inputs, [&] {
    detail::require_nonempty(a, "A");
    const auto t1 = check_T1(a);
    const auto t2 = check_T2(a);
    Json results;
    results["S_A"] = t1.support;
    results["T1"] = Json{{"holds", t1.holds}, {"lhs", to_json(t1.lhs)}, {"rhs", to_json(t1.rhs)}};
    results["T2"] = Json{{"holds", t2.holds}, {"products_checked", t2.products_checked}, {"witnesses", t2.witnesses}};
    std::string verdict = std::string("T1 ") + (t1.holds ? "holds" : "fails") + ", T2 " + (t2.holds ? "holds" : "fails");
    return detail::make_result("conditions", inputs, std::move(results), verdict,
                               t1.holds && t2.holds ? kVerified : kRefuted);
  });
}

inline CommandResult cmd_identity(const IntegerSet& a, const IntegerSet& b, std::int64_t modulus) {
  const Json inputs{{"a", format_set(a)}, {"b", format_set(b)}, {"modulus", modulus}};
  return detail::guarded("identity", inputs, [&] {
    detail::require_nonempty(a, "A");
    detail::require_nonempty(b, "B");
    require(modulus >= 1, "modulus must be positive");
    const auto check = verify_main_identity(a, b, modulus);
    Json results;
    results["A_m"] = to_json(difference_spectrum(a, modulus));
    results["B_m"] = to_json(difference_spectrum(b, modulus));
    results["power_A_d"] = to_json(power_spectrum(a, modulus));
    results["power_B_d"] = to_json(power_spectrum(b, modulus));
    results["lhs"] = to_json(check.lhs);
    results["rhs"] = to_json(check.rhs);
    results["equal"] = check.equal;
    return detail::make_result("identity", inputs, std::move(results), check.equal ? "equal" : "not-equal",
                               check.equal ? kVerified : kRefuted);
  });
}

/// A single c, or every c in [-2M, 2M] outside B when c is not given.
inline CommandResult cmd_constant(const IntegerSet& a, const IntegerSet& b, std::int64_t big_modulus,
                                  std::int64_t modulus, std::optional<std::int64_t> c) {
  Json inputs{{"a", format_set(a)}, {"b", format_set(b)}, {"M", big_modulus}, {"N", modulus}};
  inputs["c"] = c ? Json(*c) : Json("sweep");
  return detail::guarded("constant", inputs, [&] {
    detail::require_nonempty(a, "A");
    detail::require_nonempty(b, "B");
    require(big_modulus >= 1 && modulus >= 1, "moduli must be positive");
    require(big_modulus % modulus == 0, "N does not divide M");
    Json results;
    results["tiling"] = is_tiling(a, b, big_modulus);
    if (c) {
      const auto value = corollary_constant(a, b, big_modulus, modulus, *c);
      results["value"] = to_json(value);
      return detail::make_result("constant", inputs, std::move(results), to_string(value), kVerified);
    }
    const auto spectrum = difference_spectrum(a, modulus);
    Json values = Json::object();
    std::optional<Rational> first;
    bool constant = true;
    for (std::int64_t x = -2 * big_modulus; x <= 2 * big_modulus; ++x) {
      if (b.contains(x)) continue;
      const auto value = corollary_constant(spectrum, b, x);
      if (!first) first = value;
      constant = constant && value == *first;
      values[std::to_string(x)] = to_json(value);
    }
    require(first.has_value(), "no admissible c in the sweep range");
    results["values"] = std::move(values);
    results["constant"] = constant;
    if (modulus == big_modulus)
      results["equals_cardinality_of_A"] = constant && *first == Rational(static_cast<std::int64_t>(a.size()));
    return detail::make_result("constant", inputs, std::move(results),
                               constant ? "constant " + to_string(*first) : "not-constant",
                               constant ? kVerified : kRefuted);
  });
}

inline CommandResult cmd_search(const IntegerSet& a, std::int64_t max_modulus, std::size_t limit, unsigned jobs = 1) {
  const Json inputs{{"a", format_set(a)}, {"max_modulus", max_modulus}, {"limit", limit}};
  return detail::guarded("search", inputs, [&] {
    detail::require_nonempty(a, "A");
    require(max_modulus >= 1, "max_modulus must be positive");
    require(limit >= 1, "limit must be positive");
    const auto support = cyclotomic_support_prime_powers(a);
    Json found = Json::array();
    std::size_t count = 0;
    const auto k = static_cast<std::int64_t>(a.size());
    for (std::int64_t m = k; m <= max_modulus && count < limit; m += k) {
      if (!distinct_mod(a, m)) continue;
      if (std::any_of(support.begin(), support.end(), [&](std::int64_t s) { return m % s != 0; })) continue;
      for (const auto& b : find_complements(a, m, limit - count, jobs)) {
        found.push_back(Json{{"modulus", m}, {"complement", format_set(b)}});
        ++count;
      }
    }
    Json results;
    results["complements"] = std::move(found);
    return detail::make_result("search", inputs, std::move(results), count ? "found" : "none-found",
                               count ? kVerified : kRefuted);
  });
}

inline CommandResult cmd_theorem1(const IntegerSet& a, const IntegerSet& b, std::int64_t p, std::int64_t q,
                                  std::int64_t r) {
  const Json inputs{{"a", format_set(a)}, {"b", format_set(b)}, {"p", p}, {"q", q}, {"r", r}};
  return detail::guarded("theorem1", inputs, [&] {
    const ResidueCoordinates rc(p, q, r);
    const auto check = verify_theorem1(a, b, rc);
    Json divisibility = Json::object();
    for (const auto& [d, divides] : check.divisibility) divisibility[std::to_string(d)] = divides;
    Json results;
    results["hypotheses_hold"] = check.hypotheses_hold;
    results["conclusion_holds"] = check.conclusion_holds;
    results["consistent"] = check.consistent;
    results["divides_A"] = std::move(divisibility);
    return detail::make_result("theorem1", inputs, std::move(results),
                               check.consistent ? "consistent" : "inconsistent",
                               check.consistent ? kVerified : kRefuted);
  });
}

/// Structural cases of B in residue coordinates; B is first translated so min(B) = 0.
inline CommandResult cmd_classify(const IntegerSet& b, std::int64_t p, std::int64_t q, std::int64_t r) {
  const Json inputs{{"b", format_set(b)}, {"p", p}, {"q", q}, {"r", r}};
  return detail::guarded("classify", inputs, [&] {
    detail::require_nonempty(b, "B");
    const ResidueCoordinates rc(p, q, r);
    const IntegerSet shifted = b.translated(-b.min());
    const auto outcome = classify_support(shifted, rc);
    Json results;
    results["translated_b"] = format_set(shifted);
    if (const auto* bad = std::get_if<HypothesisViolation>(&outcome)) {
      results["violation"] = Json::array({bad->first, bad->second});
      return detail::make_result("classify", inputs, std::move(results), "hypothesis-fails", kRefuted);
    }
    const auto& c = std::get<SupportClassification>(outcome);
    results["axes"] = Json{{"holds", c.case_axes}, {"witnesses", c.axes_witnesses}};
    results["tetra"] = Json{{"holds", c.case_tetra}, {"witnesses", c.tetra_witnesses}};
    results["plane"] = Json{{"holds", c.case_plane}, {"planes", c.planes}};
    return detail::make_result("classify", inputs, std::move(results), c.any() ? "classified" : "unclassified",
                               c.any() ? kVerified : kRefuted);
  });
}

inline std::vector<CorpusRecord> build_corpus(std::int64_t max_modulus, unsigned jobs = 1) {
  const auto tilings = enumerate_tilings(max_modulus, jobs);
  return parallel_map(jobs, tilings.size(), [&](std::size_t i) {
    return make_corpus_record(tilings[i].modulus, tilings[i].a, tilings[i].b);
  });
}

inline CommandResult cmd_corpus(std::int64_t max_modulus, const std::string& path, unsigned jobs = 1) {
  const Json inputs{{"max_modulus", max_modulus}, {"output", path}};
  return detail::guarded("corpus", inputs, [&] {
    require(max_modulus >= 1, "max_modulus must be positive");
    std::ofstream out(path);
    require(static_cast<bool>(out), "cannot open " + path + " for writing");
    const auto records = build_corpus(max_modulus, jobs);
    write_corpus(out, records);
    out.flush();
    require(static_cast<bool>(out), "write to " + path + " failed");
    Json results;
    results["records"] = records.size();
    return detail::make_result("corpus", inputs, std::move(results), "written", kVerified);
  });
}

inline CommandResult cmd_decompose(const IntegerSet& a, const IntegerSet& b, std::int64_t modulus, std::int64_t p) {
  const Json inputs{{"a", format_set(a)}, {"b", format_set(b)}, {"modulus", modulus}, {"prime", p}};
  return detail::guarded("decompose", inputs, [&] {
    detail::require_nonempty(a, "A");
    detail::require_nonempty(b, "B");
    const auto d = decompose_tiling(a, b, modulus, p);
    Json parts = Json::array();
    for (const auto& s : d.parts) parts.push_back(format_set(s));
    Json results;
    results["offsets"] = d.offsets;
    results["parts"] = std::move(parts);
    results["reduced_complement"] = format_set(d.reduced_complement);
    results["reduced_modulus"] = d.reduced_modulus;
    results["invariants"] = Json{{"equal_cardinality", d.equal_cardinality},
                                 {"parts_tile", d.parts_tile},
                                 {"equal_support", d.equal_support},
                                 {"support_decomposes", d.support_decomposes}};
    return detail::make_result("decompose", inputs, std::move(results), d.valid() ? "valid" : "invalid",
                               d.valid() ? kVerified : kRefuted);
  });
}

}  // namespace ztile
