#pragma once

#include "swh/analysis.hpp"
#include "swh/milnor.hpp"
#include "swh/verdict.hpp"
#include "swh/zeta.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace swh {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { Text, Json };

struct RunConfig {
    unsigned truncation = kDefaultTruncationBound;
    std::vector<unsigned long> primes{5, 7, 11, 13};
    unsigned m_max = 4;
    bool toric = true;
    OutputFormat format = OutputFormat::Json;
    std::string fixture_path;

    // Throws Error unless every prime is >= 2 and m_max >= 1.
    void validate() const;
};

struct Input {
    Polynomial f;
    std::vector<std::string> variables;
    std::string text;
};

// Comma-separated integers, e.g. "2,3".
std::vector<long> parse_int_list(const std::string& text);
// Variables come from `vars` (comma separated) or, if empty, from the text sorted alphabetically.
Input parse_input(const std::string& f_text, const std::string& vars);
// Twist exponents; empty text means beta = 0.
Monomial parse_twist(const std::string& text, std::size_t nvars);

Json rational_json(const Rational& q);
Json pole_set_json(const PoleSet& p);
Json bfunction_json(const BFactorization& b);
Json zeta_expression_json(const ZetaExpression& z);
Json analysis_json(const SwhAnalysis& a, const Input& in);
Json zeta_report(const SwhAnalysis& a, const Input& in, const Monomial& beta, bool exact);
Json bfun_report(const SwhAnalysis& a, const Input& in, const Monomial& beta);
Json verdict_json(const Verdict& v);
Json explore_json(const ExploreReport& r, const SwhAnalysis& a);
// Point counts, good-prime reasons and Igusa predictions for each configured prime.
// Sets `agree` to false if a prediction differs from a count.
Json oracle_report(const Input& in, const RunConfig& cfg, bool& agree);

// 0 for PASS, 2 for NOT_APPLICABLE and UNKNOWN, 1 for FAIL.
int exit_code(Status s);

// Plain "key: value" rendering of a report.
std::string render_text(const Json& report);

struct FieldDiff {
    std::string fixture;
    std::string field;
    std::string expected;
    std::string actual;
};

struct FixtureSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::vector<FieldDiff> diffs;
};

// Runs every fixture of a JSON array file and compares each expected field exactly.
// An empty file holds zero fixtures. Throws Error on malformed files.
FixtureSummary fixtures_run(const std::string& path, const RunConfig& cfg);
Json fixture_summary_json(const FixtureSummary& s);

// Entry point of the swh command line tool. Writes the report to `out` and errors to `err`.
// Returns 0 on success or PASS, 2 on NOT_APPLICABLE or UNKNOWN, 1 on errors and FAIL,
// 3 on fixture mismatches.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace swh
