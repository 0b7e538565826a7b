#pragma once

#include "swh/analysis.hpp"
#include "swh/bfunction.hpp"
#include "swh/blowup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace swh {

enum class Status { Pass, Fail, NotApplicable, Unknown };

std::string to_string(Status s);

struct InferenceStep {
    std::string claim;
    std::string citation;
};

struct Verdict {
    Status status = Status::Unknown;
    PoleSet pole_set;  // candidate poles that must be covered
    BFactorization b_factors;
    std::vector<InferenceStep> chain;
    std::vector<std::string> diagnostics;
    std::optional<std::string> failing_condition;  // "eqmon" or "eqpa"
    std::optional<PoleSet> exact_poles;            // from the toric resolution when it applies
};

// Strong monodromy check for f: candidate poles against b-function facts.
Verdict smc_check(const SwhAnalysis& a);
// Same for the twisted zeta function of (f, x^beta).
Verdict twisted_check(const SwhAnalysis& a, const Monomial& beta);

// A PASS verdict covers each candidate pole by a b-root of at least the same
// multiplicity, and the b-facts carry a provenance.
bool audit(const Verdict& v);

struct ExploreEntry {
    Rational alpha;
    bool achieved = false;
    std::optional<Monomial> witness;        // x^beta with l(beta) = alpha passing both conditions
    std::vector<Monomial> tested;           // every x^beta with l(beta) = alpha within the bound
    std::optional<PoleSet> candidates;      // {-1, -alpha} for the witness
    std::optional<bool> toric_confirms;     // -alpha is an exact pole (two variables, nondegenerate)
    std::vector<std::string> notes;
};

struct ExploreReport {
    std::vector<ExploreEntry> entries;  // one per distinct spectral number
    unsigned bound = 0;
    std::string label;
};

// For each spectral number alpha, searches monomials x^beta of degree <= bound whose
// twisted zeta function has -alpha as its only candidate non-integral pole.
ExploreReport question_explore(const SwhAnalysis& a, unsigned bound);

}  // namespace swh
