#pragma once

#include "swh/analysis.hpp"
#include "swh/groebner.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace swh {

enum class PoleKind { Candidate, Exact };

// Pole locations (negative rationals) with orders: upper bounds for candidates,
// exact orders otherwise.
struct PoleSet {
    std::map<Rational, unsigned> entries;
    PoleKind kind = PoleKind::Candidate;

    bool contains(const Rational& s) const { return entries.count(s) != 0; }
    unsigned order(const Rational& s) const;
    // every entry of *this appears in `bound` with at least the same order
    bool within(const PoleSet& bound) const;
};

std::string to_string(const PoleSet& p);

// Chart x_i = 0 of the weighted blowup: the quotient C^{n+1} / mu_{w_i} of type
// (w_0, ..., -1, ..., w_n) with -1 at slot i.
struct QChart {
    std::size_t index = 0;
    unsigned long quotient_group_order = 0;
    std::vector<long> quotient_weights;
    unsigned long pulled_back_degree = 0;
    Polynomial residual;
    // Basis of (h, dh/du_j) with h the residual at x_i = 0; contains 1 iff the strict
    // transform meets this chart of the exceptional divisor smoothly.
    GroebnerBasis smooth_certificate;
};

struct QResolutionSummary {
    unsigned long N_E = 0;
    unsigned long nu_E = 0;
    unsigned long N_H = 1;
    unsigned long nu_H = 1;
    Monomial beta;
    bool valid = false;
    bool eqmon_ok = true;
    std::optional<Monomial> eqmon_offender;
    std::vector<QChart> charts;
    std::vector<std::string> diagnostics;

    Rational twist_level() const { return make_rational(static_cast<long>(nu_E), static_cast<long>(N_E)); }
};

// Weighted blowup of the origin with weights w, twisted by g = x^beta.
QResolutionSummary weighted_blowup(const SwhAnalysis& a, const Monomial& beta);

// {-1: 1, -l(beta): 1}, or {-1: 2} when l(beta) = 1. Throws on an invalid summary.
PoleSet candidate_poles(const QResolutionSummary& s);

}  // namespace swh
