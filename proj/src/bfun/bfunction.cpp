#include "swh/bfunction.hpp"

#include "swh/error.hpp"
#include "swh/parser.hpp"

#include <algorithm>
#include <map>

namespace swh {

std::string to_string(Completeness c) {
    switch (c) {
        case Completeness::Complete: return "complete";
        case Completeness::DivisorOnly: return "divisor_only";
        case Completeness::TopRootOnly: return "top_root_only";
    }
    return "?";
}

unsigned BFactorization::multiplicity(const Rational& root) const {
    unsigned m = 0;
    for (const auto& f : factors)
        if (f.root == root) m += f.multiplicity;
    return m;
}

std::string to_string(const BFactorization& b) {
    if (b.factors.empty()) return "1";
    std::string out;
    for (const auto& f : b.factors) {
        if (!out.empty()) out += "*";
        Rational c = -f.root;
        out += "(s+" + to_string(c) + ")";
        if (f.multiplicity > 1) out += "^" + std::to_string(f.multiplicity);
    }
    return out;
}

namespace {

BFactorization from_roots(const std::map<Rational, unsigned>& roots, Completeness c, std::string provenance) {
    BFactorization b;
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) b.factors.push_back({it->first, it->second, false});
    b.completeness = c;
    b.provenance = std::move(provenance);
    return b;
}

}  // namespace

BFactorization qh_reduced_bfunction(const SwhAnalysis& a) {
    if (!a.flags.is_weighted_homogeneous)
        throw HypothesisError("the closed-form b-function needs f weighted homogeneous; use the divisor for "
                              "semi-weighted-homogeneous input");
    std::map<Rational, unsigned> roots;
    for (const auto& alpha : a.spectrum) roots[-alpha] = 1;
    return from_roots(roots, Completeness::Complete, "reduced b-function of an isolated weighted-homogeneous germ: "
                                                     "distinct spectral numbers");
}

BFactorization qh_bfunction(const SwhAnalysis& a) {
    BFactorization reduced = qh_reduced_bfunction(a);
    std::map<Rational, unsigned> roots;
    for (const auto& r : reduced.factors) roots[r.root] += r.multiplicity;
    roots[Rational(-1)] += 1;
    return from_roots(roots, Completeness::Complete,
                      "b-function of an isolated weighted-homogeneous germ: (s+1) times the reduced b-function");
}

BFactorization swh_divisor(const SwhAnalysis& a) {
    std::map<Rational, unsigned> roots;
    roots[Rational(-1)] += 1;
    roots[-a.log_canonical_threshold_candidate()] += 1;
    auto b = from_roots(roots, Completeness::DivisorOnly,
                        "(s+1)(s+|w|/d) divides the local b-function of a semi-weighted-homogeneous germ");
    if (roots.size() == 1)
        b.diagnostics.push_back("|w|/d = 1: b = (s+1) * reduced b-function and the reduced b-function vanishes "
                                "at -1, so -1 has multiplicity 2");
    return b;
}

BFactorization twisted_facts(const SwhAnalysis& a, const Monomial& beta) {
    if (beta.size() != a.nvars()) throw Error("twisted_facts: twist has wrong length");
    if (a.f.is_monomial() && a.f.terms().begin()->first.divides(beta))
        throw HypothesisError("f divides the twist monomial");
    BFactorization b;
    b.completeness = Completeness::DivisorOnly;
    b.provenance = "b_{f,g} is divisible by s+1; the V-filtration level of g gives the largest root of "
                   "the reduced twisted b-function";
    auto lv = level(a, Polynomial::term(beta));
    if (lv.is_bottom()) {
        b.factors.push_back({Rational(-1), 1, false});
        b.diagnostics.push_back("g lies in the Jacobian ideal (level bottom); only (s+1) is guaranteed, unknown "
                                "beyond stated factors");
        return b;
    }
    Rational top = -*lv.value;
    if (top == -1) {
        b.factors.push_back({Rational(-1), 2, true});
        b.diagnostics.push_back("level 1: b = (s+1) * reduced b-function with reduced top root -1");
    } else if (top > -1) {
        b.factors.push_back({top, 1, true});
        b.factors.push_back({Rational(-1), 1, false});
    } else {
        b.factors.push_back({Rational(-1), 1, false});
        b.factors.push_back({top, 1, true});
    }
    if (lv.witness)
        b.diagnostics.push_back("level witness " + to_string(*lv.witness, default_names(a.nvars())));
    return b;
}

const std::vector<ReferenceBFunction>& reference_bfunctions() {
    static const std::vector<ReferenceBFunction> table = [] {
        std::vector<ReferenceBFunction> t;
        ReferenceBFunction cusp_y;
        cusp_y.f = "y^2 - x^3";
        cusp_y.weights = {2, 3};
        cusp_y.beta = {0, 1};
        cusp_y.b.factors = {{Rational(-1), 1, false}, {make_rational(-11, 6), 1, false}, {make_rational(-13, 6), 1, false}};
        cusp_y.b.completeness = Completeness::Complete;
        cusp_y.b.provenance = "literature: twisted b-function of the cusp with g = y";
        t.push_back(std::move(cusp_y));
        return t;
    }();
    return table;
}

std::optional<ReferenceBFunction> find_reference_bfunction(const Polynomial& f, const Monomial& beta) {
    for (const auto& ref : reference_bfunctions()) {
        if (ref.beta.size() != f.nvars() || Monomial(ref.beta) != beta) continue;
        if (parse_polynomial(ref.f, default_names(f.nvars())) == f) return ref;
    }
    return std::nullopt;
}

}  // namespace swh
