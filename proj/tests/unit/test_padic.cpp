#include "swh/error.hpp"
#include "swh/padic.hpp"
#include "swh/parser.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace swh;

namespace {
const std::vector<std::string> XY{"x", "y"};
Polynomial P(const std::string& s) { return parse_polynomial(s, XY); }

unsigned long brute_roots(const UPoly& u, unsigned long p) {
    unsigned long n = 0;
    for (unsigned long x = 0; x < p; ++x) {
        // Horner mod p on integer-cleared coefficients
        Integer acc = 0;
        for (int i = u.degree(); i >= 0; --i) acc = (acc * x + Integer(u.coeff(static_cast<std::size_t>(i)).get_num())) % Integer(p);
        if (acc == 0) ++n;
    }
    return n;
}
}  // namespace

TEST_CASE("counts of the cusp and linear forms") {
    CHECK(count_mod(P("y^2 - x^3"), 7, 1) == 7);
    CHECK(count_mod(P("y^2 - x^3"), 7, 2) == 91);
    CHECK(count_mod_brute(P("y^2 - x^3"), 7, 1) == 7);
    CHECK(count_mod_brute(P("y^2 - x^3"), 7, 2) == 91);
    CHECK(count_mod(P("x"), 5, 3) == 125);
    CHECK(count_mod(parse_polynomial("x", {"x"}), 5, 3) == 1);
    CHECK(count_mod(P("1/2*x - y"), 5, 2) == 25);
    CHECK_THROWS_AS(count_mod(P("1/5*x - y"), 5, 2), Error);
    CHECK_THROWS_AS(count_mod(P("x"), 6, 2), Error);
}

TEST_CASE("count report") {
    auto r = count_report(P("y^2 - x^3"), 7, 3, CountMethod::Hensel);
    REQUIRE(r.counts.size() == 3);
    CHECK(r.counts[0].count == 7);
    CHECK(r.counts[1].count == 91);
    Integer bound = 1;
    for (const auto& e : r.counts) {
        bound *= 49;
        CHECK(e.count <= bound);
    }
    for (std::size_t i = 1; i < r.counts.size(); ++i) CHECK(r.counts[i].count <= r.counts[i - 1].count * 49);
}

TEST_CASE("residue-field root counts") {
    CHECK(root_count_fp(UPoly{-1, 0, 1}, 7) == 2);
    CHECK(root_count_fp(UPoly{-1, 0, 1}, 2) == 1);
    CHECK(root_count_fp(UPoly{-1, 0, 0, 1}, 7) == 3);
    CHECK(root_count_fp(UPoly{-1, 0, 0, 1}, 5) == 1);
    CHECK(root_count_fp(UPoly{3}, 5) == 0);
    CHECK_THROWS_AS(root_count_fp(UPoly{5, 10}, 5), Error);
}

TEST_CASE("good primes") {
    auto cusp = P("y^2 - x^3");
    CHECK(good_prime(cusp, Monomial{0, 0}, 7).good);
    CHECK(good_prime(cusp, Monomial{0, 0}, 5).good);
    CHECK_FALSE(good_prime(cusp, Monomial{0, 0}, 2).good);
    CHECK_FALSE(good_prime(cusp, Monomial{0, 0}, 3).good);
    auto f2 = P("y^3 - x^7 + x^5*y");
    CHECK_FALSE(good_prime(f2, Monomial{0, 0}, 7).good);
    CHECK_FALSE(good_prime(f2, Monomial{0, 0}, 3).good);
    CHECK(good_prime(f2, Monomial{0, 0}, 11).good);
    CHECK_FALSE(good_prime(P("y^2 - x^3 + 5*x^2*y"), Monomial{0, 0}, 5).good);
    // singular at (1, 0) over every field
    auto r = good_prime(P("y^2 - x^3*(x - 1)^2"), Monomial{0, 0}, 7);
    CHECK_FALSE(r.good);
    CHECK_FALSE(r.reasons.empty());
    CHECK_FALSE(good_prime(cusp, Monomial{0, 0}, 8).good);
}

TEST_CASE("property: Hensel recursion equals enumeration") {
    std::mt19937 rng(5);
    const unsigned long primes[] = {2, 3, 5, 7};
    int cases = 0;
    for (int trial = 0; trial < 200 && cases < 120; ++trial) {
        std::size_t nv = 1 + rng() % 3;
        unsigned long p = primes[rng() % 4];
        unsigned m = 1 + rng() % 4;
        Integer points = 1;
        for (unsigned i = 0; i < m * nv; ++i) points *= p;
        if (points > 1000000) continue;
        Polynomial f(nv);
        for (int t = 0; t < 4; ++t) {
            Monomial mono(nv);
            for (std::size_t i = 0; i < nv; ++i) mono[i] = rng() % 4;
            f.add_term(mono, make_rational(static_cast<long>(rng() % 7) - 3));
        }
        CHECK(count_mod(f, p, m) == count_mod_brute(f, p, m));
        ++cases;
    }
    CHECK(cases >= 100);
}

TEST_CASE("property: smooth hypersurfaces follow the closed form") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        // x - g(y) is smooth at every point
        Polynomial f = P("x");
        for (unsigned k = 0; k < 4; ++k) f.add_term(Monomial{0, k}, make_rational(static_cast<long>(rng() % 9) - 4));
        unsigned long p = trial % 2 ? 5 : 7;
        Integer n1 = count_mod(f, p, 1);
        for (unsigned m = 2; m <= 4; ++m) {
            Integer expected = n1;
            for (unsigned i = 1; i < m; ++i) expected *= p;
            CHECK(count_mod(f, p, m) == expected);
        }
    }
}

TEST_CASE("property: root counts agree with enumeration") {
    std::mt19937 rng(13);
    const unsigned long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (int trial = 0; trial < 200; ++trial) {
        unsigned long p = primes[rng() % 25];
        std::vector<Rational> c;
        std::size_t deg = 1 + rng() % 6;
        for (std::size_t i = 0; i <= deg; ++i) c.push_back(make_rational(static_cast<long>(rng() % 201) - 100));
        long lead = 1 + static_cast<long>(rng() % 50);
        if (lead % static_cast<long>(p) == 0) ++lead;
        c.back() = lead;
        UPoly u(c);
        bool zero_mod_p = true;
        for (const auto& x : u.coeffs()) zero_mod_p = zero_mod_p && x.get_num() % Integer(p) == 0;
        if (zero_mod_p) continue;
        CHECK(root_count_fp(u, p) == brute_roots(u, p));
    }
}
