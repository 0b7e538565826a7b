#include "swh/error.hpp"
#include "swh/parser.hpp"
#include "swh/polynomial.hpp"
#include "swh/upoly.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace swh;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};
Polynomial P(const std::string& s, const std::vector<std::string>& v = XY) { return parse_polynomial(s, v); }
}  // namespace

TEST_CASE("parse: cusp") {
    Polynomial f = P("y^2 - x^3");
    CHECK(f.size() == 2);
    CHECK(f.coefficient(Monomial{0, 2}) == 1);
    CHECK(f.coefficient(Monomial{3, 0}) == -1);
}

TEST_CASE("parse: three terms with implicit structure") {
    Polynomial f = P("y^3 - x^7 + x^5*y");
    CHECK(f.size() == 3);
    CHECK(f.coefficient(Monomial{5, 1}) == 1);
}

TEST_CASE("parse: expands powers of sums") {
    Polynomial f = P("(x+y)^2 + x*z + z^2", XYZ);
    CHECK(f == P("x^2 + 2*x*y + y^2 + x*z + z^2", XYZ));
    CHECK(f.coefficient(Monomial{1, 1, 0}) == 2);
}

TEST_CASE("parse: rationals, implicit products and unary minus") {
    CHECK(P("5/7 x y") == Polynomial::term(Monomial{1, 1}, Rational(5, 7)));
    CHECK(P("-x^2") == Polynomial::term(Monomial{2, 0}, -1));
    CHECK(P("2(x+1)(x-1)") == P("2*x^2 - 2"));
    CHECK(P("6/4") == Polynomial::constant(2, Rational(3, 2)));
}

TEST_CASE("parse: errors carry positions") {
    CHECK_THROWS_AS(P("x + w"), ParseError);
    try {
        P("x + w");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(P("x^2 + 3/0"), ParseError);
    CHECK_THROWS_AS(P("1.5*x"), ParseError);
    CHECK_THROWS_AS(P("x + "), ParseError);
    CHECK_THROWS_AS(P("(x + y"), ParseError);
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("x^-1"), ParseError);
}

TEST_CASE("infer_variables sorts names") {
    CHECK(infer_variables("y^2 - x^3") == std::vector<std::string>{"x", "y"});
    CHECK(infer_variables("2x + u1*z") == std::vector<std::string>{"u1", "x", "z"});
}

TEST_CASE("printer emits graded-lex order") {
    CHECK(to_string(P("y^2 - x^3"), XY) == "-x^3 + y^2");
    CHECK(to_string(P("1/2 - x*y + 3*x"), XY) == "-x*y + 3*x + 1/2");
    CHECK(to_string(Polynomial(2), XY) == "0");
}

TEST_CASE("weighted_degree") {
    CHECK(weighted_degree(Monomial{3, 0}, WeightVector{2, 3}) == 6);
    CHECK(weighted_degree(Monomial{0, 2}, WeightVector{2, 3}) == 6);
    CHECK(weighted_degree(Monomial{5, 1}, WeightVector{3, 7}) == 22);
    CHECK_THROWS_AS(weighted_degree(Monomial{1, 1, 1}, WeightVector{2, 3}), Error);
}

TEST_CASE("weight vectors are normalized by their gcd") {
    WeightVector w{4, 6};
    CHECK(w.entries() == std::vector<unsigned long>{2, 3});
    CHECK(w.total() == 5);
    CHECK_THROWS_AS(WeightVector({0, 1}), Error);
}

TEST_CASE("weighted_parts") {
    auto parts = weighted_parts(P("y^2 - x^3 + x^4"), WeightVector{2, 3});
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(6) == P("y^2 - x^3"));
    CHECK(parts.at(8) == P("x^4"));

    auto f2 = weighted_parts(P("y^3 - x^7 + x^5*y"), WeightVector{3, 7});
    CHECK(f2.at(21) == P("y^3 - x^7"));
    CHECK(f2.at(22) == P("x^5*y"));

    auto q = weighted_parts(P("x^2+2*x*y+y^2+x*z+z^2", XYZ), WeightVector{1, 1, 1});
    CHECK(q.size() == 1);
    CHECK(q.count(2) == 1);
    CHECK_THROWS_AS(weighted_parts(Polynomial(2), WeightVector{1, 1}), Error);
}

TEST_CASE("partial_derivative") {
    CHECK(partial_derivative(P("y^2 - x^3"), 1) == P("2*y"));
    CHECK(partial_derivative(P("y^3 - x^7 + x^5*y"), 0) == P("-7*x^6 + 5*x^4*y"));
    CHECK(partial_derivative(P("7"), 0).is_zero());
    CHECK_THROWS_AS(partial_derivative(P("x"), 2), Error);
}

TEST_CASE("chart_substitute") {
    // residual lives in (x_chart, u_other) slots
    auto cx = chart_substitute(P("y^2 - x^3"), WeightVector{2, 3}, 0);
    CHECK(cx.d == 6);
    CHECK(cx.residual == P("y^2 - 1"));
    auto cy = chart_substitute(P("y^2 - x^3"), WeightVector{2, 3}, 1);
    CHECK(cy.d == 6);
    CHECK(cy.residual == P("1 - x^3"));
    auto c2 = chart_substitute(P("y^3 - x^7 + x^5*y"), WeightVector{3, 7}, 0);
    CHECK(c2.d == 21);
    CHECK(c2.residual == P("y^3 - 1 + x*y"));
    CHECK_THROWS_AS(chart_substitute(Polynomial(2), WeightVector{1, 1}, 0), Error);
}

TEST_CASE("eval_mod") {
    std::vector<Integer> p23{2, 3}, p11{1, 1}, p41{4, 1};
    CHECK(eval_mod(P("y^2 - x^3"), p23, 7) == 1);
    CHECK(eval_mod(P("y^2 - x^3"), p11, 7) == 0);
    CHECK(eval_mod(P("y^2 - x^3"), p41, 49) == 35);
    CHECK(eval_mod(P("1/3*x + y"), p11, 7) == (5 + 1) % 7);  // 1/3 = 5 mod 7
    CHECK_THROWS_AS(eval_mod(P("1/7*x"), p11, 49), Error);
}

TEST_CASE("property: ring laws and print/parse round trip") {
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 100; ++trial) {
        auto f = testing::random_polynomial(rng, 3, 3, 4);
        auto g = testing::random_polynomial(rng, 3, 3, 4);
        auto h = testing::random_polynomial(rng, 3, 2, 3);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * g == g * f);
        std::string text = to_string(f, XYZ);
        Polynomial back = parse_polynomial(text, XYZ);
        CHECK(back == f);
        CHECK(to_string(back, XYZ) == text);
    }
}

TEST_CASE("property: Euler relation for weighted-homogeneous parts") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> wd(1, 5);
    for (int trial = 0; trial < 100; ++trial) {
        WeightVector w{wd(rng), wd(rng), wd(rng)};
        unsigned long e = 6 + static_cast<unsigned long>(trial % 7);
        Polynomial p = testing::random_weighted_homogeneous(rng, w, e);
        Polynomial euler(3);
        for (std::size_t i = 0; i < 3; ++i)
            euler += Polynomial::variable(3, i) * partial_derivative(p, i) * Rational(static_cast<long>(w[i]));
        CHECK(euler == p * Rational(static_cast<long>(e)));
    }
}

TEST_CASE("property: chart residual at the chart variable 0 dehomogenizes f_d") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> wd(1, 4);
    for (int trial = 0; trial < 60; ++trial) {
        WeightVector w{wd(rng), wd(rng)};
        Polynomial fd = testing::random_weighted_homogeneous(rng, w, 12);
        Polynomial f = fd + testing::random_weighted_homogeneous(rng, w, 13) + testing::random_weighted_homogeneous(rng, w, 15);
        auto parts = weighted_parts(f, w);
        for (std::size_t chart = 0; chart < 2; ++chart) {
            auto pb = chart_substitute(f, w, chart);
            CHECK(pb.d == parts.begin()->first);
            CHECK(substitute_value(pb.residual, chart, 0) == substitute_value(parts.begin()->second, chart, 1));
        }
    }
}

TEST_CASE("univariate helpers") {
    UPoly p{-1, 0, 1};  // X^2 - 1
    CHECK(p.degree() == 2);
    CHECK(gcd(p, UPoly{1, 1}) == UPoly{1, 1});
    CHECK(squarefree_part(p * p) == p);
    CHECK(order_at(p * p * UPoly{1, 1}, -1) == 3);
    RationalFunction r(UPoly{5, 4}, UPoly{5, 11, 6});
    CHECK(r.den() == UPoly{5, 11, 6});
    RationalFunction half(UPoly{1}, UPoly{2});
    CHECK(half.num() == UPoly::constant(Rational(1, 2)));
    auto s = RationalFunction(UPoly{1}, UPoly{1, -1}).series(4);  // 1/(1-X)
    CHECK(s == std::vector<Rational>{1, 1, 1, 1});
}
