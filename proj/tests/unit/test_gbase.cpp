#include "swh/error.hpp"
#include "swh/groebner.hpp"
#include "swh/milnor.hpp"
#include "swh/parser.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace swh;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};
Polynomial P(const std::string& s, const std::vector<std::string>& v = XY) { return parse_polynomial(s, v); }

GroebnerBasis gb_of(std::vector<Polynomial> gens) { return groebner(gens, TermOrder::grevlex()); }

// Every S-polynomial reduces to zero.
bool buchberger_closed(const GroebnerBasis& gb) {
    auto g = gb.generators();
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!normal_form(s_polynomial(g[i], g[j], gb.order()), gb).is_zero()) return false;
    return true;
}

// Every input generator lies in the ideal.
bool generators_reduce_to_zero(const GroebnerBasis& gb, const std::vector<Polynomial>& gens) {
    for (const auto& f : gens)
        if (!normal_form(f, gb).is_zero()) return false;
    return true;
}
}  // namespace

TEST_CASE("grevlex order") {
    auto o = TermOrder::grevlex();
    CHECK(o.greater(Monomial{0, 3}, Monomial{2, 0}));
    CHECK(o.greater(Monomial{2, 0}, Monomial{1, 1}));
    CHECK(o.greater(Monomial{1, 1, 0}, Monomial{1, 0, 1}));
    CHECK_FALSE(o.greater(Monomial{1, 1}, Monomial{1, 1}));
}

TEST_CASE("groebner basis of the cusp jacobian") {
    auto gb = gb_of({P("-3*x^2"), P("2*y")});
    auto gens = gb.generators();
    REQUIRE(gens.size() == 2);
    CHECK(std::find(gens.begin(), gens.end(), P("x^2")) != gens.end());
    CHECK(std::find(gens.begin(), gens.end(), P("y")) != gens.end());
    CHECK(normal_form(P("y"), gb).is_zero());
    CHECK(normal_form(P("1"), gb) == P("1"));
    CHECK(normal_form(P("x^3 + 2*x + y*x"), gb) == P("2*x"));
    auto std_mons = standard_monomials(gb);
    CHECK(std_mons == std::vector<Monomial>{Monomial{0, 0}, Monomial{1, 0}});
}

TEST_CASE("jacobian of y^3 - x^7 + x^5 y modulo a truncation") {
    Polynomial f = P("y^3 - x^7 + x^5*y");
    auto md = local_milnor_algebra(f);
    CHECK(md.mu == 12);
    CHECK(md.basis.size() == 12);
    // x^6 is congruent to 5/7 x^4 y in the local Milnor algebra.
    CHECK(normal_form(P("x^6"), md.groebner) == normal_form(P("5/7*x^4*y"), md.groebner));
    CHECK(normal_form(P("x^6 - 5/7*x^4*y"), md.groebner).is_zero());
    CHECK(buchberger_closed(md.groebner));
}

TEST_CASE("milnor numbers of the basic examples") {
    CHECK(local_milnor_algebra(P("y^2 - x^3")).mu == 2);
    auto q = local_milnor_algebra(P("x^2 + 2*x*y + y^2 + x*z + z^2", XYZ));
    CHECK(q.mu == 1);
    CHECK(q.basis == std::vector<Monomial>{Monomial{0, 0, 0}});
    CHECK(local_milnor_algebra(P("x^3 + y^3 + z^3", XYZ)).mu == 8);
    // A_k: mu = k
    CHECK(local_milnor_algebra(P("x^2 + y^6")).mu == 5);
    // D_4
    CHECK(local_milnor_algebra(P("x^2*y + y^3")).mu == 4);
}

TEST_CASE("local milnor number ignores points away from the origin") {
    // the second critical point at x = 3/4 lies away from the origin
    Polynomial f = P("y^2 - x^3 + x^4");
    CHECK(local_milnor_algebra(f).mu == 2);
    Polynomial g = P("x^2 - x^3 + y^2");  // A_1 at 0, another critical point at x = 2/3
    CHECK(local_milnor_algebra(g).mu == 1);
}

TEST_CASE("milnor algebra hypotheses") {
    CHECK_THROWS_AS(local_milnor_algebra(P("x + y^2")), HypothesisError);
    CHECK_THROWS_AS(local_milnor_algebra(P("1 + x^2 + y^2")), HypothesisError);
    CHECK_THROWS_AS(local_milnor_algebra(Polynomial(2)), HypothesisError);
    // non-isolated: y^2 has the x-axis as singular locus
    CHECK_THROWS_AS(local_milnor_algebra(P("y^2"), 12), HypothesisError);
    CHECK_THROWS_AS(local_milnor_algebra(P("x^2*y^2"), 12), HypothesisError);
}

TEST_CASE("infinite quotient is reported") {
    auto gb = gb_of({P("x^2")});
    CHECK_THROWS_AS(standard_monomials(gb), Error);
}

TEST_CASE("unit ideal") {
    auto gb = gb_of({P("x*y - 1"), P("x")});
    CHECK(gb.contains_one());
    CHECK(standard_monomials(gb).empty());
}

TEST_CASE("weighted order basis") {
    WeightVector w{2, 3};
    auto gb = groebner(std::vector<Polynomial>{P("y^2 - x^3"), P("x*y")}, TermOrder::weighted_grlex(w));
    CHECK(buchberger_closed(gb));
    CHECK(generators_reduce_to_zero(gb, {P("y^2 - x^3"), P("x*y")}));
}

TEST_CASE("property: random ideals are closed under S-pairs and NF is linear") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(testing::random_polynomial(rng, 3, 2, 3));
        bool all_zero = true;
        for (const auto& g : gens) all_zero = all_zero && g.is_zero();
        if (all_zero) continue;
        auto gb = gb_of(gens);
        CHECK(buchberger_closed(gb));
        CHECK(generators_reduce_to_zero(gb, gens));
        auto a = testing::random_polynomial(rng, 3, 3, 4);
        auto b = testing::random_polynomial(rng, 3, 3, 4);
        Rational c = testing::random_rational(rng);
        CHECK(normal_form(a + c * b, gb) == normal_form(a, gb) + c * normal_form(b, gb));
        // normal forms contain no leading monomial multiples
        Polynomial na = normal_form(a, gb);
        for (const auto& [m, coeff] : na.terms())
            for (const auto& lm : gb.leading_monomials()) CHECK_FALSE(lm.divides(m));
    }
}

TEST_CASE("property: milnor number of binomial swh germs is (a-1)(b-1)") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto bc = testing::random_binomial_swh(rng, 6, 2);
        unsigned long a = bc.w[0], b = bc.w[1];  // f = y^a - c x^b + h.o.t.
        auto md = local_milnor_algebra(bc.f);
        CHECK(md.mu == (a - 1) * (b - 1));
    }
}
