#pragma once

#include "swh/milnor.hpp"
#include "swh/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace swh {

// l(gamma) = sum w_i (gamma_i + 1) / d
Rational monomial_level(const Monomial& gamma, const WeightVector& w, unsigned long d);

// One monomial of the truncated local algebra together with its normal form in
// coordinates of the standard-monomial basis.
struct LevelEntry {
    Monomial gamma;
    Rational level;
    std::vector<Rational> coords;
};

struct SwhFlags {
    bool initial_isolated = false;
    bool initial_irreducible = false;
    bool is_weighted_homogeneous = false;
};

struct SwhAnalysis {
    Polynomial f;
    WeightVector w;
    unsigned long d = 0;
    Polynomial f_d;
    Polynomial higher;
    MilnorData milnor;          // of f at the origin
    MilnorData milnor_initial;  // of f_d
    std::vector<Rational> spectrum;  // sorted ascending, with multiplicity
    std::size_t n = 0;               // nvars = n + 1
    SwhFlags flags;
    std::vector<LevelEntry> level_table;  // every monomial of degree < truncation exponent of `milnor`

    std::size_t nvars() const noexcept { return n + 1; }
    // |w| / d
    Rational log_canonical_threshold_candidate() const;
};

// Validates f = f_d + f_{>d} with f_d an isolated (and, for two variables,
// irreducible) weighted-homogeneous singularity; throws HypothesisError otherwise.
SwhAnalysis analyze(const Polynomial& f, const WeightVector& w, unsigned max_truncation = kDefaultTruncationBound);

// Product formula prod (d / w_i - 1) for the Milnor number of an isolated
// weighted-homogeneous singularity of degree d.
Rational milnor_orlik_number(const WeightVector& w, unsigned long d);

struct LevelValue {
    std::optional<Rational> value;  // nullopt means bottom
    std::optional<Monomial> witness;

    bool is_bottom() const noexcept { return !value.has_value(); }
};

// Largest alpha with g in span{x^gamma : l(gamma) >= alpha} + (df) inside the local
// Milnor algebra of f. Bottom when g lies in (df).
LevelValue level(const SwhAnalysis& a, const Polynomial& g);

struct EqmonResult {
    bool ok = true;
    std::optional<Monomial> offender;  // term x_i x_j^k of f_d
    Rational offender_coefficient;
};

// f_d has no term x_i x_j^k (j != i, k > 0) for any i with beta_i != 0.
EqmonResult check_eqmon(const SwhAnalysis& a, const Monomial& beta);

struct EqpaResult {
    bool ok = false;
    Rational expected;  // l(beta)
    LevelValue actual;  // level of x^beta
};

// x^beta is not absorbed into higher levels modulo (df): level(x^beta) = l(beta).
EqpaResult check_eqpa(const SwhAnalysis& a, const Monomial& beta);

struct NondegeneracyReport {
    bool nondegenerate = true;
    std::vector<std::vector<Monomial>> compact_faces;  // support points of each compact face
    std::optional<std::size_t> degenerate_face;        // index into compact_faces
};

// Every compact face polynomial of the Newton polyhedron is free of critical points
// in the torus, decided by 1 in (df_tau/dx_i, t x_0...x_n - 1).
NondegeneracyReport newton_nondegeneracy(const Polynomial& f);
inline bool newton_nondegenerate(const Polynomial& f) { return newton_nondegeneracy(f).nondegenerate; }

}  // namespace swh
