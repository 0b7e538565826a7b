#include "swh/front.hpp"

#include "swh/error.hpp"

#include <CLI11.hpp>

namespace swh {

namespace {

struct Args {
    std::string f;
    std::string weights;
    std::string twist;
    std::string vars;
    std::string format = "json";
    std::string primes;
    std::string fixture_path;
    unsigned bound = 6;
    bool exact = false;
    bool no_toric = false;
    RunConfig cfg;
};

void emit(std::ostream& out, const Json& report, const RunConfig& cfg) {
    if (cfg.format == OutputFormat::Text)
        out << render_text(report);
    else
        out << report.dump(2) << "\n";
}

SwhAnalysis analyzed(const Input& in, const Args& a) {
    return analyze(in.f, WeightVector(parse_int_list(a.weights)), a.cfg.truncation);
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Monodromy checks for semi-weighted-homogeneous singularities"};
    app.require_subcommand(1);
    app.fallthrough();
    Args a;
    app.add_option("--vars", a.vars, "comma-separated variable order");
    app.add_option("--format", a.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--truncation", a.cfg.truncation, "largest truncation exponent for the Milnor algebra");
    app.add_flag("--no-toric", a.no_toric, "disable the toric oracle");

    auto with_fw = [&](CLI::App* sub) {
        sub->add_option("f", a.f, "polynomial")->required();
        sub->add_option("w", a.weights, "comma-separated weights")->required();
    };
    auto* analyze_cmd = app.add_subcommand("analyze", "weights, Milnor number and spectrum");
    with_fw(analyze_cmd);
    auto* zeta_cmd = app.add_subcommand("zeta", "candidate and exact poles of the motivic zeta function");
    with_fw(zeta_cmd);
    zeta_cmd->add_option("--twist", a.twist, "exponents of g = x^beta");
    zeta_cmd->add_flag("--exact", a.exact, "compute exact poles from the toric resolution");
    auto* bfun_cmd = app.add_subcommand("bfun", "proven factors of the b-function");
    with_fw(bfun_cmd);
    bfun_cmd->add_option("--twist", a.twist, "exponents of g = x^beta");
    auto* check_cmd = app.add_subcommand("check", "monodromy verdict");
    with_fw(check_cmd);
    check_cmd->add_option("--twist", a.twist, "exponents of g = x^beta");
    auto* explore_cmd = app.add_subcommand("explore", "search levels of monomials for twisted counterexamples");
    with_fw(explore_cmd);
    explore_cmd->add_option("--bound", a.bound, "largest total degree of tested monomials");
    auto* oracle_cmd = app.add_subcommand("oracle", "point counts mod p^m against Igusa predictions");
    oracle_cmd->add_option("f", a.f, "polynomial")->required();
    oracle_cmd->add_option("--primes", a.primes, "comma-separated primes");
    oracle_cmd->add_option("--mmax", a.cfg.m_max, "largest m");
    auto* fixtures_cmd = app.add_subcommand("fixtures", "fixture corpus");
    fixtures_cmd->require_subcommand(1);
    auto* run_cmd = fixtures_cmd->add_subcommand("run", "run a fixture file");
    run_cmd->add_option("path", a.fixture_path, "JSON fixture file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        a.cfg.format = a.format == "text" ? OutputFormat::Text : OutputFormat::Json;
        a.cfg.toric = !a.no_toric;
        a.cfg.fixture_path = a.fixture_path;
        if (!a.primes.empty()) {
            a.cfg.primes.clear();
            for (long p : parse_int_list(a.primes)) {
                if (p < 2) throw Error("primes must be at least 2");
                a.cfg.primes.push_back(static_cast<unsigned long>(p));
            }
        }
        a.cfg.validate();

        if (*fixtures_cmd) {
            auto s = fixtures_run(a.fixture_path, a.cfg);
            emit(out, fixture_summary_json(s), a.cfg);
            return s.passed == s.total ? 0 : 3;
        }
        Input in = parse_input(a.f, a.vars);
        if (*oracle_cmd) {
            bool agree = true;
            emit(out, oracle_report(in, a.cfg, agree), a.cfg);
            return agree ? 0 : 1;
        }
        SwhAnalysis an = analyzed(in, a);
        Monomial beta = parse_twist(a.twist, an.nvars());
        if (*analyze_cmd) {
            emit(out, analysis_json(an, in), a.cfg);
        } else if (*zeta_cmd) {
            Json j = zeta_report(an, in, beta, a.exact && a.cfg.toric);
            if (a.exact && !a.cfg.toric) j["exact"] = {{"available", false}, {"reason", "toric oracle disabled"}};
            emit(out, j, a.cfg);
        } else if (*bfun_cmd) {
            emit(out, bfun_report(an, in, beta), a.cfg);
        } else if (*check_cmd) {
            Verdict v = beta.is_one() ? smc_check(an) : twisted_check(an, beta);
            emit(out, verdict_json(v), a.cfg);
            return exit_code(v.status);
        } else if (*explore_cmd) {
            emit(out, explore_json(question_explore(an, a.bound), an), a.cfg);
        }
        return 0;
    } catch (const HypothesisError& e) {
        err << "hypothesis not satisfied: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace swh
