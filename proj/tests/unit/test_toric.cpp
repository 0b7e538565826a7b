#include "swh/blowup.hpp"
#include "swh/error.hpp"
#include "swh/parser.hpp"
#include "swh/toric.hpp"

#include "generators.hpp"

#include <doctest.h>

#include <numeric>

using namespace swh;

namespace {
const std::vector<std::string> XY{"x", "y"};
Polynomial P(const std::string& s) { return parse_polynomial(s, XY); }

const SncDivisor& on_ray(const SncResolution& r, Vec2 ray) {
    for (const auto& d : r.divisors)
        if (d.ray == ray) return d;
    throw std::runtime_error("ray not found");
}

void check_regular(const std::vector<Vec2>& rays) {
    for (std::size_t i = 1; i < rays.size(); ++i) CHECK(det(rays[i - 1], rays[i]) == 1);
}

// every inserted ray is needed: dropping it leaves a determinant > 1
void check_minimal(const std::vector<Vec2>& input, const std::vector<Vec2>& out) {
    for (std::size_t i = 1; i + 1 < out.size(); ++i) {
        if (std::find(input.begin(), input.end(), out[i]) != input.end()) continue;
        CHECK(det(out[i - 1], out[i + 1]) > 1);
    }
}
}  // namespace

TEST_CASE("Newton polygons") {
    auto cusp = newton_polygon(P("y^2 - x^3"));
    REQUIRE(cusp.edges.size() == 1);
    CHECK(cusp.edges[0].from == Vec2{0, 2});
    CHECK(cusp.edges[0].to == Vec2{3, 0});
    CHECK(cusp.edges[0].normal == Vec2{2, 3});
    CHECK(cusp.edges[0].lattice_length == 1);
    CHECK(cusp.edges[0].support_value == 6);
    CHECK(cusp.edges[0].edge_polynomial == UPoly{1, -1});

    auto f2 = newton_polygon(P("y^3 - x^7 + x^5*y"));
    REQUIRE(f2.edges.size() == 1);
    CHECK(f2.edges[0].normal == Vec2{3, 7});
    CHECK(dot(f2.edges[0].normal, Vec2{5, 1}) == 22);
    CHECK(f2.edges[0].support_value == 21);

    auto q = newton_polygon(P("x^2 + y^2"));
    REQUIRE(q.edges.size() == 1);
    CHECK(q.edges[0].normal == Vec2{1, 1});
    CHECK(q.edges[0].lattice_length == 2);
    CHECK(q.edges[0].edge_polynomial == UPoly{1, 0, 1});

    auto two = newton_polygon(P("x^5 + x^2*y^2 + y^5"));
    REQUIRE(two.edges.size() == 2);
    CHECK(two.edges[0].normal == Vec2{3, 2});
    CHECK(two.edges[1].normal == Vec2{2, 3});

    CHECK(newton_polygon(P("x*y")).edges.empty());
    CHECK_THROWS_AS(newton_polygon(parse_polynomial("x", {"x"})), Error);
    CHECK_THROWS_AS(newton_polygon(P("1 + x")), HypothesisError);
}

TEST_CASE("regular subdivision") {
    CHECK(regular_subdivision({{1, 0}, {2, 3}, {0, 1}}) == std::vector<Vec2>{{1, 0}, {1, 1}, {2, 3}, {1, 2}, {0, 1}});
    CHECK(regular_subdivision({{1, 0}, {1, 1}, {0, 1}}) == std::vector<Vec2>{{1, 0}, {1, 1}, {0, 1}});
    std::vector<Vec2> in{{1, 0}, {3, 7}, {0, 1}};
    auto out = regular_subdivision(in);
    check_regular(out);
    check_minimal(in, out);
    CHECK(std::find(out.begin(), out.end(), Vec2{3, 7}) != out.end());
    CHECK_THROWS_AS(regular_subdivision({{1, 0}, {0, 1}, {1, 1}}), Error);
    CHECK_THROWS_AS(regular_subdivision({{1, 0}, {2, 2}, {0, 1}}), Error);
}

TEST_CASE("toric resolution of the cusp") {
    auto r = snc_resolution(P("y^2 - x^3"), Monomial{0, 0});
    CHECK(r.rays() == std::vector<Vec2>{{1, 0}, {1, 1}, {2, 3}, {1, 2}, {0, 1}});
    CHECK(on_ray(r, {1, 1}).N == 2);
    CHECK(on_ray(r, {1, 1}).nu == 2);
    CHECK(on_ray(r, {2, 3}).N == 6);
    CHECK(on_ray(r, {2, 3}).nu == 5);
    CHECK(on_ray(r, {1, 2}).N == 3);
    CHECK(on_ray(r, {1, 2}).nu == 3);
    CHECK(on_ray(r, {2, 3}).strict_transform_points == 1);
    CHECK(on_ray(r, {1, 1}).strict_transform_points == 0);
    CHECK(on_ray(r, {1, 0}).kind == DivisorKind::Axis);
    CHECK(on_ray(r, {1, 0}).N == 0);
    CHECK(on_ray(r, {1, 0}).nu == 1);
    CHECK(r.divisors.back().kind == DivisorKind::StrictTransform);
    CHECK(r.divisors.back().N == 1);
    CHECK(r.divisors.back().nu == 1);

    auto t = snc_resolution(P("y^2 - x^3"), Monomial{0, 1});
    CHECK(on_ray(t, {2, 3}).N == 6);
    CHECK(on_ray(t, {2, 3}).nu == 8);
    CHECK(on_ray(t, {0, 1}).nu == 2);
}

TEST_CASE("toric resolution of f2 twisted by x^6") {
    auto r = snc_resolution(P("y^3 - x^7 + x^5*y"), Monomial{6, 0});
    CHECK(on_ray(r, {3, 7}).N == 21);
    CHECK(on_ray(r, {3, 7}).nu == 28);
    check_regular(r.rays());
}

TEST_CASE("degenerate input is refused") {
    CHECK_THROWS_AS(snc_resolution(P("(y^2 - x^3)^2 - x^5*y"), Monomial{0, 0}), HypothesisError);
    CHECK_THROWS_AS(snc_resolution(P("(x + y)^2 + x^3"), Monomial{0, 0}), HypothesisError);
}

TEST_CASE("one-variable coordinate hyperplane") {
    auto r = coordinate_hyperplane_resolution();
    REQUIRE(r.divisors.size() == 1);
    CHECK(r.strata.size() == 1);
    CHECK(r.stratum_class(r.strata[0]) == UPoly{1});
}

TEST_CASE("property: subdivisions are regular and minimal") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> coord(1, 40);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Vec2> mid;
        for (int k = 0; k < 3; ++k) {
            Vec2 v{coord(rng), coord(rng)};
            long g = std::gcd(v.a, v.b);
            mid.push_back({v.a / g, v.b / g});
        }
        std::sort(mid.begin(), mid.end(), [](const Vec2& p, const Vec2& q) { return det(p, q) > 0; });
        mid.erase(std::unique(mid.begin(), mid.end()), mid.end());
        std::vector<Vec2> in{{1, 0}};
        in.insert(in.end(), mid.begin(), mid.end());
        in.push_back({0, 1});
        auto out = regular_subdivision(in);
        check_regular(out);
        check_minimal(in, out);
        for (const auto& v : in) CHECK(std::find(out.begin(), out.end(), v) != out.end());
    }
}

TEST_CASE("property: strict-transform points count branches") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        // prod_i (y^a - c_i x^b), gcd(a, b) = 1 and distinct c_i: r branches, possibly
        // times a second family with another slope
        unsigned a = 1 + rng() % 4, b = a + 1 + rng() % 4;
        while (std::gcd(a, b) != 1) ++b;
        unsigned r1 = 1 + rng() % 3, r2 = rng() % 3;
        Polynomial f = Polynomial::constant(2, 1);
        for (unsigned i = 0; i < r1; ++i) f = f * (P("y^" + std::to_string(a)) - make_rational(static_cast<long>(i + 1)) * P("x^" + std::to_string(b)));
        for (unsigned i = 0; i < r2; ++i) f = f * (P("y") - make_rational(static_cast<long>(i + 2)) * P("x^" + std::to_string(b + 3)));
        auto res = snc_resolution(f, Monomial{0, 0});
        unsigned long points = 0, lengths = 0;
        for (const auto& d : res.divisors) points += d.strict_transform_points;
        for (const auto& e : res.polygon.edges) lengths += e.lattice_length;
        CHECK(points == lengths);
        CHECK(points == r1 + r2);
        check_regular(res.rays());
        // Euler characteristic of the exceptional fibre: a chain of k lines has k + 1
        Rational chi = 0;
        for (const auto& s : res.strata) chi += res.stratum_class(s).eval(1);
        CHECK(chi == static_cast<long>(res.rays().size()) - 1);
    }
}

TEST_CASE("property: toric and weighted blowup agree on (N, nu) and refinement keeps data") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        auto bc = testing::random_binomial_swh(rng, 7, 2);
        auto a = analyze(bc.f, bc.w);
        if (!newton_nondegenerate(a.f)) continue;
        Monomial beta{static_cast<unsigned>(rng() % 5), static_cast<unsigned>(rng() % 5)};
        auto res = snc_resolution(a.f, beta);
        auto s = weighted_blowup(a, beta);
        Vec2 wr{static_cast<long>(a.w[0]), static_cast<long>(a.w[1])};
        CHECK(on_ray(res, wr).N == s.N_E);
        CHECK(on_ray(res, wr).nu == s.nu_E);

        auto fan = res.rays();
        std::size_t i = rng() % (fan.size() - 1);
        fan.insert(fan.begin() + static_cast<long>(i) + 1, Vec2{fan[i].a + fan[i + 1].a, fan[i].b + fan[i + 1].b});
        auto refined = snc_resolution_on_fan(a.f, beta, fan);
        for (const auto& d : res.divisors) {
            if (!d.ray) continue;
            CHECK(on_ray(refined, *d.ray).N == d.N);
            CHECK(on_ray(refined, *d.ray).nu == d.nu);
        }
    }
}
