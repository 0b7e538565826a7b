#include "swh/verdict.hpp"

#include "swh/error.hpp"
#include "swh/zeta.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace swh {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::NotApplicable: return "NOT_APPLICABLE";
        case Status::Unknown: return "UNKNOWN";
    }
    return "?";
}

namespace {

std::string ratio_text(unsigned long nu, unsigned long N) { return std::to_string(nu) + "/" + std::to_string(N); }

std::string monomial_text(const SwhAnalysis& a, const Monomial& m) { return to_string(m, default_names(a.nvars())); }

// Marks every candidate pole as covered or not by the b-facts in v.
void cover(Verdict& v, const Rational& lct) {
    bool all = true;
    for (const auto& [sigma, order] : v.pole_set.entries) {
        unsigned mult = v.b_factors.multiplicity(sigma);
        if (mult < order) {
            all = false;
            v.diagnostics.push_back("b-function knowledge is incomplete at " + to_string(sigma) + ": need multiplicity " +
                                    std::to_string(order) + ", proven " + std::to_string(mult));
            continue;
        }
        std::string citation;
        if (sigma == -1 && order == 2)
            citation = "b = (s+1) times the reduced b-function, and the reduced b-function vanishes at -1";
        else if (sigma == -1)
            citation = "every b-function of a non-unit is divisible by s+1";
        else if (sigma == -lct)
            citation = "the largest root of the reduced b-function is minus the level of g";
        else
            citation = v.b_factors.provenance;
        v.chain.push_back({"pole " + to_string(sigma) + " of order at most " + std::to_string(order) +
                               " is a root of multiplicity " + std::to_string(mult),
                           citation});
    }
    v.status = all ? Status::Pass : Status::Unknown;
}

std::optional<PoleSet> toric_poles(const SwhAnalysis& a, const Monomial& beta) {
    if (a.nvars() != 2 || !newton_nondegenerate(a.f)) return std::nullopt;
    return poles(assemble_motivic(snc_resolution(a.f, beta)));
}

}  // namespace

Verdict smc_check(const SwhAnalysis& a) {
    Verdict v;
    auto s = weighted_blowup(a, Monomial(a.nvars()));
    v.pole_set = candidate_poles(s);
    v.chain.push_back({"candidate poles " + to_string(v.pole_set),
                       "pole bound from the weighted blowup Q-resolution of a semi-weighted-homogeneous germ"});
    v.b_factors = a.flags.is_weighted_homogeneous ? qh_bfunction(a) : swh_divisor(a);
    v.chain.push_back({"b-function facts " + to_string(v.b_factors) + " (" + to_string(v.b_factors.completeness) + ")",
                       v.b_factors.provenance});
    for (const auto& d : v.b_factors.diagnostics) v.diagnostics.push_back(d);
    cover(v, a.log_canonical_threshold_candidate());
    v.exact_poles = toric_poles(a, Monomial(a.nvars()));
    return v;
}

Verdict twisted_check(const SwhAnalysis& a, const Monomial& beta) {
    if (beta.size() != a.nvars()) throw Error("twisted_check: twist has wrong length");
    Verdict v;
    auto s = weighted_blowup(a, beta);
    const Rational l = monomial_level(beta, a.w, a.d);
    const std::string g = monomial_text(a, beta);
    v.b_factors = twisted_facts(a, beta);
    const auto ref = find_reference_bfunction(a.f, beta);
    v.exact_poles = toric_poles(a, beta);

    if (!s.valid) {
        v.status = Status::NotApplicable;
        v.failing_condition = "eqmon";
        v.diagnostics = s.diagnostics;
        return v;
    }
    v.pole_set = candidate_poles(s);
    v.chain.push_back({"candidate poles " + to_string(v.pole_set) + " for g = " + g,
                       "twisted pole bound from the weighted blowup; the monomial condition holds"});

    auto eq = check_eqpa(a, beta);
    if (!eq.ok) {
        v.status = Status::NotApplicable;
        v.failing_condition = "eqpa";
        std::string what = "non-absorption condition fails for g = " + g + " with l(beta) = " +
                           ratio_text(s.nu_E, s.N_E) + " = " + to_string(l);
        if (eq.actual.is_bottom())
            what += ": level bottom, g lies in the Jacobian ideal";
        else
            what += ": level " + to_string(*eq.actual.value) +
                    (eq.actual.witness ? " via " + monomial_text(a, *eq.actual.witness) + " in g + (df)" : "");
        v.diagnostics.push_back(what);
        if (ref) {
            bool has = ref->b.has_root(-l);
            v.diagnostics.push_back("stored b_{f,g} = " + to_string(ref->b) + " (" + ref->b.provenance + ") " +
                                    (has ? "has" : "lacks") + " the root -" + ratio_text(s.nu_E, s.N_E));
        }
        if (v.exact_poles)
            v.diagnostics.push_back("exact poles from the toric resolution: " + to_string(*v.exact_poles) +
                                    (v.exact_poles->contains(-l) ? ", including -" : ", excluding -") +
                                    ratio_text(s.nu_E, s.N_E));
        v.diagnostics.push_back("the candidate pole -" + ratio_text(s.nu_E, s.N_E) +
                                " need not be a root of b_{f,g}; the twisted strong monodromy statement does not apply");
        return v;
    }
    v.chain.push_back({"level of g = " + to_string(l) + " equals l(beta)",
                       "non-absorption condition: g is not absorbed into higher levels modulo (df)"});
    v.chain.push_back({"b-function facts " + to_string(v.b_factors), v.b_factors.provenance});
    for (const auto& d : v.b_factors.diagnostics) v.diagnostics.push_back(d);
    cover(v, l);

    if (ref) {
        for (const auto& [sigma, order] : v.pole_set.entries)
            if (ref->b.multiplicity(sigma) < v.b_factors.multiplicity(sigma)) {
                v.status = Status::Fail;
                v.diagnostics.push_back("stored b_{f,g} = " + to_string(ref->b) + " contradicts the derived root " +
                                        to_string(sigma));
            }
    }
    return v;
}

bool audit(const Verdict& v) {
    if (v.status != Status::Pass) return true;
    if (v.b_factors.provenance.empty()) return false;
    for (const auto& [sigma, order] : v.pole_set.entries)
        if (v.b_factors.multiplicity(sigma) < order) return false;
    return v.chain.size() >= v.pole_set.entries.size();
}

ExploreReport question_explore(const SwhAnalysis& a, unsigned bound) {
    ExploreReport r;
    r.bound = bound;
    r.label = "evidence only: a finite search does not decide the question";
    const std::size_t k = a.nvars();

    std::vector<Monomial> monos;
    Monomial m(k);
    for (;;) {
        monos.push_back(m);
        std::size_t i = 0;
        while (i < k) {
            if (m.total_degree() < bound) {
                m[i] += 1;
                break;
            }
            m[i] = 0;
            ++i;
        }
        if (i == k) break;
    }

    std::vector<LevelValue> levels(monos.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < monos.size();) levels[i] = level(a, Polynomial::term(monos[i]));
        });
    for (auto& t : pool) t.join();

    std::vector<Rational> alphas = a.spectrum;
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    const bool toric = k == 2 && newton_nondegenerate(a.f);

    for (const auto& alpha : alphas) {
        ExploreEntry e;
        e.alpha = alpha;
        for (std::size_t i = 0; i < monos.size(); ++i) {
            Rational l = monomial_level(monos[i], a.w, a.d);
            const auto& lv = levels[i];
            if (l != alpha) {
                if (lv.value && *lv.value == alpha)
                    e.notes.push_back(monomial_text(a, monos[i]) + " has level " + to_string(alpha) + " but l = " +
                                      to_string(l) + ", so it does not witness the non-absorption condition at " +
                                      to_string(alpha));
                continue;
            }
            e.tested.push_back(monos[i]);
            if (e.witness) continue;
            if (!check_eqmon(a, monos[i]).ok) {
                e.notes.push_back(monomial_text(a, monos[i]) + " fails the monomial condition");
                continue;
            }
            if (!lv.value || *lv.value != alpha) {
                e.notes.push_back(monomial_text(a, monos[i]) + " is absorbed: level " +
                                  (lv.value ? to_string(*lv.value) : std::string("bottom")));
                continue;
            }
            e.witness = monos[i];
        }
        if (e.witness) {
            e.achieved = true;
            e.candidates = candidate_poles(weighted_blowup(a, *e.witness));
            if (toric) e.toric_confirms = toric_poles(a, *e.witness)->contains(-alpha);
        }
        r.entries.push_back(std::move(e));
    }
    return r;
}

}  // namespace swh
