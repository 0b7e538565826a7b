#include "swh/front.hpp"

#include "swh/bfunction.hpp"
#include "swh/error.hpp"
#include "swh/padic.hpp"
#include "swh/parser.hpp"
#include "swh/toric.hpp"

#include <future>
#include <sstream>

namespace swh {

void RunConfig::validate() const {
    if (m_max < 1) throw Error("m_max must be at least 1");
    for (auto p : primes)
        if (p < 2) throw Error("primes must be at least 2");
}

std::vector<long> parse_int_list(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(item, &pos);
        } catch (const std::exception&) {
            throw Error("expected a comma-separated list of integers, got \"" + text + "\"");
        }
        while (pos < item.size() && item[pos] == ' ') ++pos;
        if (pos != item.size()) throw Error("expected a comma-separated list of integers, got \"" + text + "\"");
        out.push_back(v);
    }
    if (out.empty()) throw Error("empty integer list");
    return out;
}

Input parse_input(const std::string& f_text, const std::string& vars) {
    Input in;
    in.text = f_text;
    if (vars.empty()) {
        in.variables = infer_variables(f_text);
    } else {
        std::stringstream ss(vars);
        std::string v;
        while (std::getline(ss, v, ',')) in.variables.push_back(v);
    }
    in.f = parse_polynomial(f_text, in.variables);
    return in;
}

Monomial parse_twist(const std::string& text, std::size_t nvars) {
    if (text.empty()) return Monomial(nvars);
    auto v = parse_int_list(text);
    if (v.size() != nvars)
        throw Error("twist has " + std::to_string(v.size()) + " entries for " + std::to_string(nvars) + " variables");
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
        if (v[i] < 0) throw Error("twist exponents must be non-negative");
        m[i] = static_cast<unsigned>(v[i]);
    }
    return m;
}

Json rational_json(const Rational& q) { return to_string(q); }

Json pole_set_json(const PoleSet& p) {
    Json j = Json::object();
    for (const auto& [s, k] : p.entries) j[to_string(s)] = k;
    return j;
}

Json bfunction_json(const BFactorization& b) {
    Json factors = Json::array();
    for (const auto& f : b.factors)
        factors.push_back({{"root", rational_json(f.root)}, {"multiplicity", f.multiplicity}, {"top_root_only", f.top_root_only}});
    return {{"text", to_string(b)},
            {"completeness", to_string(b.completeness)},
            {"factors", factors},
            {"provenance", b.provenance},
            {"diagnostics", b.diagnostics}};
}

Json zeta_expression_json(const ZetaExpression& z) {
    Json num = Json::array();
    const auto& c = z.numerator.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        Integer den = 1;
        for (const auto& x : c[k].coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
        Json coeffs = Json::array();
        for (const auto& x : c[k].coeffs()) coeffs.push_back(to_string(Integer(x * Rational(den))));
        num.push_back({coeffs, to_string(den), k});
    }
    Json den = Json::array();
    for (const auto& f : z.denominator) den.push_back({f.N, f.nu});
    return {{"numerator", num},
            {"denominator", den},
            {"prefactor", {{"L_power", -static_cast<long>(z.prefactor_exponent)}}}};
}

namespace {

Json weights_json(const WeightVector& w) {
    Json j = Json::array();
    for (auto x : w.entries()) j.push_back(x);
    return j;
}

Json monomial_json(const Monomial& m) {
    Json j = Json::array();
    for (auto e : m.exponents()) j.push_back(e);
    return j;
}

Json header(const SwhAnalysis& a, const Input& in) {
    return {{"schema", kSchemaVersion},
            {"f", to_string(a.f, in.variables)},
            {"variables", in.variables},
            {"weights", weights_json(a.w)}};
}

// "(4*s + 5)/((s + 1)*(6*s + 5))": the denominator split into the factors N s + nu.
std::string factored_text(const RationalFunction& r, const SncResolution& res) {
    UPoly rest = r.den();
    std::vector<std::string> parts;
    for (const auto& d : res.divisors) {
        if (d.N == 0) continue;
        Rational root = -make_rational(static_cast<long>(d.nu), static_cast<long>(d.N));
        UPoly lin = UPoly::linear(Rational(root.get_den()), Rational(-root.get_num()));
        while (rest.degree() > 0 && order_at(rest, root) > 0) {
            rest = divmod(rest, lin).first;
            parts.push_back("(" + to_string(lin) + ")");
        }
    }
    if (parts.empty() || rest.degree() > 0) return to_string(r);
    if (rest.coeff(0) != 1) parts.insert(parts.begin(), to_string(rest.coeff(0)));
    std::string den;
    for (const auto& part : parts) den += (den.empty() ? "" : "*") + part;
    if (parts.size() > 1) den = "(" + den + ")";
    return "(" + to_string(r.num()) + ")/" + den;
}

}  // namespace

Json analysis_json(const SwhAnalysis& a, const Input& in) {
    Json j = header(a, in);
    j["d"] = a.d;
    j["mu"] = a.milnor.mu;
    j["mu_initial"] = a.milnor_initial.mu;
    Json spec = Json::array();
    for (const auto& s : a.spectrum) spec.push_back(rational_json(s));
    j["spectrum"] = spec;
    j["weighted_homogeneous"] = a.flags.is_weighted_homogeneous;
    Rational lct = a.log_canonical_threshold_candidate();
    j["w_over_d"] = rational_json(lct);
    j["log_canonical_threshold"] = rational_json(lct < 1 ? lct : Rational(1));
    j["truncation_exponent"] = a.milnor.truncation_exponent;
    return j;
}

Json zeta_report(const SwhAnalysis& a, const Input& in, const Monomial& beta, bool exact) {
    Json j = header(a, in);
    j["twist"] = monomial_json(beta);
    j["l_beta"] = rational_json(monomial_level(beta, a.w, a.d));
    auto s = weighted_blowup(a, beta);
    j["q_resolution"] = {{"N_E", s.N_E}, {"nu_E", s.nu_E}, {"valid", s.valid}, {"diagnostics", s.diagnostics}};
    j["candidate_poles"] = s.valid ? pole_set_json(candidate_poles(s)) : Json(nullptr);
    if (!exact) return j;
    if (a.nvars() != 2) {
        j["exact"] = {{"available", false}, {"reason", "the toric resolution needs two variables"}};
        return j;
    }
    auto nd = newton_nondegeneracy(a.f);
    if (!nd.nondegenerate) {
        j["exact"] = {{"available", false}, {"reason", "f is Newton degenerate"}};
        return j;
    }
    auto res = snc_resolution(a.f, beta);
    auto z = assemble_motivic(res);
    auto top = topological(res);
    if (topological_from_motivic(z) != top) throw CertificationError("topological zeta: the two routes disagree");
    Json rays = Json::array();
    for (const auto& d : res.divisors)
        if (d.ray) rays.push_back({{"ray", {d.ray->a, d.ray->b}}, {"N", d.N}, {"nu", d.nu}, {"strict_transform_points", d.strict_transform_points}});
    j["exact"] = {{"available", true},
                  {"poles", pole_set_json(poles(z))},
                  {"topological", factored_text(top, res)},
                  {"motivic", zeta_expression_json(z)},
                  {"divisors", rays}};
    return j;
}

Json bfun_report(const SwhAnalysis& a, const Input& in, const Monomial& beta) {
    Json j = header(a, in);
    j["twist"] = monomial_json(beta);
    if (beta.is_one()) {
        if (a.flags.is_weighted_homogeneous) j["b_function"] = bfunction_json(qh_bfunction(a));
        j["divisor"] = bfunction_json(swh_divisor(a));
    } else {
        j["twisted"] = bfunction_json(twisted_facts(a, beta));
        if (auto ref = find_reference_bfunction(a.f, beta)) j["stored"] = bfunction_json(ref->b);
    }
    return j;
}

Json verdict_json(const Verdict& v) {
    Json chain = Json::array();
    for (const auto& s : v.chain) chain.push_back({{"claim", s.claim}, {"citation", s.citation}});
    return {{"schema", kSchemaVersion},
            {"status", to_string(v.status)},
            {"failing_condition", v.failing_condition ? Json(*v.failing_condition) : Json(nullptr)},
            {"pole_set", pole_set_json(v.pole_set)},
            {"exact_poles", v.exact_poles ? pole_set_json(*v.exact_poles) : Json(nullptr)},
            {"b_factors", bfunction_json(v.b_factors)},
            {"chain", chain},
            {"diagnostics", v.diagnostics}};
}

Json explore_json(const ExploreReport& r, const SwhAnalysis& a) {
    const auto names = default_names(a.nvars());
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json tested = Json::array();
        for (const auto& m : e.tested) tested.push_back(to_string(m, names));
        entries.push_back({{"alpha", rational_json(e.alpha)},
                           {"achieved", e.achieved},
                           {"witness", e.witness ? Json(to_string(*e.witness, names)) : Json(nullptr)},
                           {"candidates", e.candidates ? pole_set_json(*e.candidates) : Json(nullptr)},
                           {"toric_confirms", e.toric_confirms ? Json(*e.toric_confirms) : Json(nullptr)},
                           {"tested", tested},
                           {"notes", e.notes}});
    }
    return {{"schema", kSchemaVersion}, {"label", r.label}, {"bound", r.bound}, {"entries", entries}};
}

Json oracle_report(const Input& in, const RunConfig& cfg, bool& agree) {
    cfg.validate();
    const Polynomial& f = in.f;
    const Monomial zero(f.nvars());
    std::optional<SncResolution> res;
    std::string no_prediction;
    if (f.nvars() != 2)
        no_prediction = "predictions need the two-variable toric resolution";
    else if (!cfg.toric)
        no_prediction = "toric oracle disabled";
    else if (!newton_nondegenerate(f))
        no_prediction = "f is Newton degenerate";
    else
        res = snc_resolution(f, zero);

    std::vector<std::future<Json>> jobs;
    for (auto p : cfg.primes)
        jobs.push_back(std::async(std::launch::async, [&, p] {
            Json j = {{"p", p}};
            auto gp = good_prime(f, zero, p);
            j["good"] = gp.good;
            j["reasons"] = gp.reasons;
            std::vector<Integer> predicted;
            if (gp.good && res) predicted = predict_counts(igusa_global(*res, p), p, f.nvars(), cfg.m_max);
            Json counts = Json::array();
            bool ok = true;
            if (is_prime(p)) {
                Integer limit = 1;
                for (unsigned m = 1; m <= cfg.m_max; ++m) {
                    for (std::size_t i = 0; i < f.nvars(); ++i) limit *= p;
                    Json c = {{"m", m}, {"hensel", to_string(count_mod(f, p, m))}};
                    if (limit <= 1000000) {
                        Integer b = count_mod_brute(f, p, m);
                        c["brute"] = to_string(b);
                        ok = ok && to_string(b) == c["hensel"].get<std::string>();
                    }
                    if (!predicted.empty()) {
                        c["predicted"] = to_string(predicted[m - 1]);
                        ok = ok && c["predicted"] == c["hensel"];
                    }
                    counts.push_back(c);
                }
            }
            j["counts"] = counts;
            j["agree"] = ok;
            return j;
        }));
    Json primes = Json::array();
    agree = true;
    for (auto& job : jobs) {
        Json j = job.get();
        agree = agree && j["agree"].get<bool>();
        primes.push_back(std::move(j));
    }
    Json out = {{"schema", kSchemaVersion}, {"f", to_string(f, in.variables)}, {"variables", in.variables}};
    out["predictions"] = no_prediction.empty() ? Json("igusa") : Json(no_prediction);
    out["primes"] = primes;
    out["agree"] = agree;
    return out;
}

int exit_code(Status s) {
    switch (s) {
        case Status::Pass: return 0;
        case Status::NotApplicable:
        case Status::Unknown: return 2;
        case Status::Fail: return 1;
    }
    return 1;
}

std::string render_text(const Json& report) {
    std::string out;
    for (const auto& [key, value] : report.items())
        out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    return out;
}

}  // namespace swh
