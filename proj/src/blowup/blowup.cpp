#include "swh/blowup.hpp"

#include "swh/error.hpp"

namespace swh {

unsigned PoleSet::order(const Rational& s) const {
    auto it = entries.find(s);
    return it == entries.end() ? 0 : it->second;
}

bool PoleSet::within(const PoleSet& bound) const {
    for (const auto& [s, k] : entries)
        if (bound.order(s) < k) return false;
    return true;
}

std::string to_string(const PoleSet& p) {
    std::string out = "{";
    for (const auto& [s, k] : p.entries) {
        if (out.size() > 1) out += ", ";
        out += to_string(s) + ": " + std::to_string(k);
    }
    return out + "}";
}

QResolutionSummary weighted_blowup(const SwhAnalysis& a, const Monomial& beta) {
    if (beta.size() != a.nvars()) throw Error("weighted_blowup: twist has wrong length");
    QResolutionSummary s;
    s.beta = beta;
    s.N_E = a.d;
    for (std::size_t i = 0; i < a.nvars(); ++i) s.nu_E += a.w[i] * (beta[i] + 1ul);

    bool smooth = true;
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        QChart c;
        c.index = i;
        c.quotient_group_order = a.w[i];
        for (std::size_t j = 0; j < a.nvars(); ++j) c.quotient_weights.push_back(j == i ? -1 : static_cast<long>(a.w[j]));
        auto pb = chart_substitute(a.f, a.w, i);
        c.pulled_back_degree = pb.d;
        c.residual = pb.residual;
        Polynomial h = substitute_value(pb.residual, i, 0);
        std::vector<Polynomial> gens{h};
        for (std::size_t j = 0; j < a.nvars(); ++j)
            if (j != i) gens.push_back(partial_derivative(h, j));
        c.smooth_certificate = groebner(gens, TermOrder::grevlex());
        if (!c.smooth_certificate.contains_one()) {
            smooth = false;
            s.diagnostics.push_back("chart " + std::to_string(i) + ": strict transform is singular on the exceptional divisor");
        }
        s.charts.push_back(std::move(c));
    }
    if (!smooth) throw HypothesisError("Jacobian criterion failed on the weighted blowup: f_d is not isolated");

    bool twisted = !beta.is_one();
    if (twisted) {
        auto eq = check_eqmon(a, beta);
        s.eqmon_ok = eq.ok;
        if (!eq.ok) {
            s.eqmon_offender = eq.offender;
            s.diagnostics.push_back("monomial condition fails: f_d contains " + to_string(eq.offender_coefficient) + "*" +
                                    to_string(*eq.offender, default_names(a.nvars())) +
                                    ", so the twisted pullback is not Q-normal crossings");
        }
    }
    s.valid = s.eqmon_ok;
    return s;
}

PoleSet candidate_poles(const QResolutionSummary& s) {
    if (!s.valid) throw HypothesisError("candidate poles need a valid Q-resolution summary");
    PoleSet p;
    p.kind = PoleKind::Candidate;
    Rational l = s.twist_level();
    if (l == 1) {
        p.entries[Rational(-1)] = 2;
    } else {
        p.entries[Rational(-1)] = 1;
        p.entries[-l] = 1;
    }
    return p;
}

}  // namespace swh
