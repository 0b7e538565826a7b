#include "swh/front.hpp"

#include "swh/error.hpp"
#include "swh/padic.hpp"

#include <fstream>
#include <future>
#include <sstream>

namespace swh {

namespace {

Json normalize_rationals(const Json& v) {
    if (v.is_string()) return to_string(parse_rational(v.get<std::string>()));
    Json out = v;
    if (v.is_array()) {
        out = Json::array();
        for (const auto& x : v) out.push_back(normalize_rationals(x));
    }
    return out;
}

// keys are pole locations
Json normalize_pole_keys(const Json& v) {
    if (!v.is_object()) return v;
    std::map<Rational, Json> sorted;
    for (const auto& [k, x] : v.items()) sorted[parse_rational(k)] = x;
    Json out = Json::object();
    for (const auto& [k, x] : sorted) out[to_string(k)] = x;
    return out;
}

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
    return out;
}

struct FixtureRun {
    std::string name;
    std::vector<FieldDiff> diffs;
};

FixtureRun run_one(const Json& fx, const RunConfig& cfg) {
    FixtureRun r;
    r.name = fx.at("name").get<std::string>();
    const Json& expected = fx.at("expected");
    if (!expected.is_object()) throw Error("fixture " + r.name + ": expected must be an object");
    for (const auto& [field, entry] : expected.items()) {
        if (!entry.is_object() || !entry.contains("value") || !entry.contains("provenance"))
            throw Error("fixture " + r.name + ": field " + field + " needs a value and a provenance");
        auto tag = entry["provenance"].get<std::string>();
        if (tag != "literature" && tag != "derived")
            throw Error("fixture " + r.name + ": field " + field + " has unknown provenance " + tag);
    }

    std::vector<std::string> vars;
    if (fx.contains("vars")) vars = fx["vars"].get<std::vector<std::string>>();
    Input in = parse_input(fx.at("f").get<std::string>(), join(vars));
    WeightVector w(fx.at("weights").get<std::vector<long>>());
    Monomial beta(in.f.nvars());
    if (fx.contains("twist")) beta = Monomial(fx["twist"].get<std::vector<unsigned>>());

    std::optional<SwhAnalysis> a;
    std::string rejection;
    try {
        a = analyze(in.f, w, cfg.truncation);
    } catch (const HypothesisError& e) {
        rejection = e.what();
    }

    auto diff = [&](const std::string& field, const Json& want, const Json& got) {
        if (want != got) r.diffs.push_back({r.name, field, want.dump(), got.dump()});
    };

    for (const auto& [field, entry] : expected.items()) {
        const Json& want = entry["value"];
        if (field == "rejected") {
            bool ok = !a && rejection.find(want.get<std::string>()) != std::string::npos;
            if (!ok) diff(field, want, a ? Json("accepted") : Json(rejection));
            continue;
        }
        if (field == "nondegenerate") {
            diff(field, want, newton_nondegenerate(in.f));
            continue;
        }
        if (field == "counts") {
            Json got = Json::array();
            for (const auto& c : want) {
                auto p = c.at("p").get<unsigned long>();
                auto m = c.at("m").get<unsigned>();
                got.push_back({{"p", p}, {"m", m}, {"N", to_string(count_mod(in.f, p, m))}});
            }
            Json norm = Json::array();
            for (const auto& c : want)
                norm.push_back({{"p", c.at("p")}, {"m", c.at("m")}, {"N", c.at("N").is_string() ? c.at("N") : Json(c.at("N").dump())}});
            diff(field, norm, got);
            continue;
        }
        if (!a) {
            diff(field, want, "rejected: " + rejection);
            continue;
        }
        try {
            if (field == "d" || field == "mu") {
                diff(field, want, analysis_json(*a, in)[field]);
            } else if (field == "spectrum") {
                diff(field, normalize_rationals(want), analysis_json(*a, in)["spectrum"]);
            } else if (field == "candidate_poles") {
                diff(field, normalize_pole_keys(want), zeta_report(*a, in, beta, false)["candidate_poles"]);
            } else if (field == "exact_poles" || field == "topological") {
                Json z = zeta_report(*a, in, beta, true)["exact"];
                Json got = z["available"].get<bool>() ? z[field == "exact_poles" ? "poles" : "topological"]
                                                      : Json("unavailable: " + z["reason"].get<std::string>());
                diff(field, field == "exact_poles" ? normalize_pole_keys(want) : want, got);
            } else if (field == "b_factors") {
                BFactorization b = !beta.is_one() ? twisted_facts(*a, beta)
                                   : a->flags.is_weighted_homogeneous ? qh_bfunction(*a)
                                                                      : swh_divisor(*a);
                diff(field, want, to_string(b));
            } else if (field == "stored_b") {
                auto ref = find_reference_bfunction(a->f, beta);
                diff(field, want, ref ? Json(to_string(ref->b)) : Json(nullptr));
            } else if (field == "verdict" || field == "failing_condition") {
                Verdict v = beta.is_one() ? smc_check(*a) : twisted_check(*a, beta);
                if (field == "verdict")
                    diff(field, want, to_string(v.status));
                else
                    diff(field, want, v.failing_condition ? Json(*v.failing_condition) : Json(nullptr));
            } else if (field == "level") {
                auto lv = level(*a, Polynomial::term(beta));
                diff(field, want.get<std::string>() == "bottom" ? want : normalize_rationals(want),
                     lv.is_bottom() ? Json("bottom") : rational_json(*lv.value));
            } else {
                r.diffs.push_back({r.name, field, want.dump(), "unknown field"});
            }
        } catch (const Error& e) {
            diff(field, want, std::string("error: ") + e.what());
        }
    }
    return r;
}

}  // namespace

FixtureSummary fixtures_run(const std::string& path, const RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open fixture file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    FixtureSummary s;
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) return s;

    Json all;
    try {
        all = Json::parse(text);
    } catch (const Json::exception& e) {
        throw Error("fixture file " + path + " is not valid JSON: " + e.what());
    }
    if (!all.is_array()) throw Error("fixture file must hold a JSON array");

    std::vector<std::future<FixtureRun>> jobs;
    for (const auto& fx : all) jobs.push_back(std::async(std::launch::async, [&fx, &cfg] { return run_one(fx, cfg); }));
    for (auto& j : jobs) {
        FixtureRun r;
        try {
            r = j.get();
        } catch (const Json::exception& e) {
            throw Error(std::string("malformed fixture: ") + e.what());
        }
        ++s.total;
        if (r.diffs.empty()) ++s.passed;
        s.diffs.insert(s.diffs.end(), r.diffs.begin(), r.diffs.end());
    }
    return s;
}

Json fixture_summary_json(const FixtureSummary& s) {
    Json diffs = Json::array();
    for (const auto& d : s.diffs)
        diffs.push_back({{"fixture", d.fixture}, {"field", d.field}, {"expected", d.expected}, {"actual", d.actual}});
    return {{"schema", kSchemaVersion},
            {"total", s.total},
            {"passed", s.passed},
            {"failed", s.total - s.passed},
            {"diffs", diffs}};
}

}  // namespace swh
