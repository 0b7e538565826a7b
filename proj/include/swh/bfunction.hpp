#pragma once

#include "swh/analysis.hpp"

#include <optional>
#include <string>
#include <vector>

namespace swh {

enum class Completeness { Complete, DivisorOnly, TopRootOnly };

std::string to_string(Completeness c);

struct BRoot {
    Rational root;  // negative
    unsigned multiplicity = 1;
    bool top_root_only = false;  // largest root of the reduced b-function, nothing more claimed
};

// Known factors of a b-function: prod (s - root)^multiplicity, together with how much
// of the full polynomial they are known to be.
struct BFactorization {
    std::vector<BRoot> factors;  // sorted by decreasing root
    Completeness completeness = Completeness::DivisorOnly;
    std::string provenance;
    std::vector<std::string> diagnostics;

    // Multiplicity of `root` among the known factors (0 if absent).
    unsigned multiplicity(const Rational& root) const;
    bool has_root(const Rational& root) const { return multiplicity(root) > 0; }
};

// "(s+1)^2*(s+4/3)" style rendering.
std::string to_string(const BFactorization& b);

// Full b_f(s) = (s+1) prod_{alpha in distinct spectrum} (s+alpha) of an isolated
// weighted-homogeneous f. Throws HypothesisError when f has terms above degree d.
BFactorization qh_bfunction(const SwhAnalysis& a);
// The reduced b-function b_f(s)/(s+1) for the same case.
BFactorization qh_reduced_bfunction(const SwhAnalysis& a);

// (s+1)(s+|w|/d), a proven divisor of the local b-function.
BFactorization swh_divisor(const SwhAnalysis& a);

// b_{f,g} for g = x^beta: -1 is a root, and -level(x^beta) is the largest root of the
// reduced b-function when that level is finite.
BFactorization twisted_facts(const SwhAnalysis& a, const Monomial& beta);

// Full b-functions taken from the literature, kept as reference data for comparison.
struct ReferenceBFunction {
    std::string f;  // in variables x, y, ...
    std::vector<long> weights;
    std::vector<unsigned> beta;
    BFactorization b;
};

const std::vector<ReferenceBFunction>& reference_bfunctions();

// Reference data for (f, beta) if stored.
std::optional<ReferenceBFunction> find_reference_bfunction(const Polynomial& f, const Monomial& beta);

}  // namespace swh
