#include "swh/padic.hpp"

#include "swh/error.hpp"
#include "swh/toric.hpp"

#include <chrono>
#include <future>

namespace swh {

namespace {

using u64 = unsigned long;
using Fp = std::vector<u64>;  // dense, coefficient i of X^i, no trailing zeros

constexpr u64 kMaxPrime = 1ul << 31;

u64 residue(const Rational& q, u64 p) {
    Integer P(p);
    Integer den = q.get_den();
    if (den % P == 0) throw Error("coefficient denominator " + to_string(den) + " is divisible by p = " + std::to_string(p));
    Integer inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
    Integer r = (Integer(q.get_num()) * inv) % P;
    if (r < 0) r += P;
    return r.get_ui();
}

void trim(Fp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 inverse(u64 a, u64 p) {
    u64 r = 1, e = p - 2;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

Fp mod_poly(Fp a, const Fp& b, u64 p) {
    u64 inv = inverse(b.back(), p);
    while (a.size() >= b.size()) {
        u64 c = a.back() * inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - c * b[i] % p) % p;
        trim(a);
    }
    return a;
}

Fp mul_mod(const Fp& a, const Fp& b, const Fp& u, u64 p) {
    if (a.empty() || b.empty()) return {};
    Fp c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    trim(c);
    return mod_poly(std::move(c), u, p);
}

Fp gcd_poly(Fp a, Fp b, u64 p) {
    while (!b.empty()) {
        Fp r = mod_poly(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Integer pow_int(u64 p, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

// f scaled to integer coefficients
Polynomial integral(const Polynomial& f, u64 p) {
    Integer D = denominator_lcm(f);
    if (D % Integer(p) == 0) throw Error("coefficient denominators are divisible by p = " + std::to_string(p));
    return f * Rational(D);
}

// Calls visit(point) for every point of (Z/modulus)^k.
template <class Visit>
void for_each_point(std::size_t k, u64 modulus, Visit&& visit) {
    std::vector<Integer> x(k, 0);
    for (;;) {
        visit(x);
        std::size_t i = 0;
        while (i < k && x[i] == modulus - 1) x[i++] = 0;
        if (i == k) return;
        x[i] += 1;
    }
}

unsigned valuation(const Integer& z, u64 p) {
    if (z == 0) return ~0u;
    return static_cast<unsigned>(mpz_remove(Integer().get_mpz_t(), z.get_mpz_t(), Integer(p).get_mpz_t()));
}

// g(a + p y) for integer a
Polynomial shift_scale(const Polynomial& g, const std::vector<Integer>& a, u64 p) {
    const std::size_t k = g.nvars();
    std::vector<std::vector<Polynomial>> powers(k);
    for (std::size_t i = 0; i < k; ++i) {
        Polynomial lin = Polynomial::variable(k, i) * Rational(Integer(p)) + Polynomial::constant(k, Rational(a[i]));
        powers[i].push_back(Polynomial::constant(k, 1));
        powers[i].push_back(lin);
    }
    Polynomial out(k);
    for (const auto& [m, c] : g.terms()) {
        Polynomial t = Polynomial::constant(k, c);
        for (std::size_t i = 0; i < k; ++i) {
            while (powers[i].size() <= m[i]) powers[i].push_back(powers[i].back() * powers[i][1]);
            t = t * powers[i][m[i]];
        }
        out += t;
    }
    return out;
}

Integer hensel(const Polynomial& g, u64 p, unsigned m) {
    const std::size_t k = g.nvars();
    Integer P(p);
    std::vector<Polynomial> grad;
    for (std::size_t i = 0; i < k; ++i) grad.push_back(partial_derivative(g, i));
    Integer total = 0;
    for_each_point(k, p, [&](const std::vector<Integer>& a) {
        if (eval_mod(g, a, P) != 0) return;
        bool smooth = false;
        for (const auto& d : grad)
            if (eval_mod(d, a, P) != 0) smooth = true;
        if (smooth) {
            total += pow_int(p, static_cast<unsigned long>(m - 1) * (k - 1));
            return;
        }
        Polynomial h = shift_scale(g, a, p);
        unsigned v = ~0u;
        for (const auto& [mono, c] : h.terms()) v = std::min(v, valuation(c.get_num(), p));
        if (v >= m) {
            total += pow_int(p, static_cast<unsigned long>(k) * (m - 1));
            return;
        }
        Polynomial hv = h * Rational(Integer(1), pow_int(p, v));
        total += hensel(hv, p, m - v) * pow_int(p, static_cast<unsigned long>(k) * (v - 1));
    });
    return total;
}

void check_prime(u64 p) {
    if (!is_prime(p)) throw Error(std::to_string(p) + " is not a prime");
    if (p >= kMaxPrime) throw Error("prime " + std::to_string(p) + " is too large");
}

}  // namespace

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

Integer count_mod(const Polynomial& f, unsigned long p, unsigned m) {
    check_prime(p);
    if (m == 0) return 1;
    return hensel(integral(f, p), p, m);
}

Integer count_mod_brute(const Polynomial& f, unsigned long p, unsigned m) {
    check_prime(p);
    Polynomial g = integral(f, p);
    Integer modulus = pow_int(p, m);
    if (pow_int(p, static_cast<unsigned long>(m) * g.nvars()) > 10000000)
        throw Error("brute-force count over more than 10^7 points");
    Integer total = 0;
    for_each_point(g.nvars(), modulus.get_ui(), [&](const std::vector<Integer>& x) {
        if (eval_mod(g, x, modulus) == 0) total += 1;
    });
    return total;
}

CountReport count_report(const Polynomial& f, unsigned long p, unsigned m_max, CountMethod method) {
    CountReport r;
    r.p = p;
    r.method = method;
    std::vector<std::future<CountEntry>> jobs;
    for (unsigned m = 1; m <= m_max; ++m)
        jobs.push_back(std::async(std::launch::async, [&f, p, m, method] {
            auto start = std::chrono::steady_clock::now();
            CountEntry e;
            e.m = m;
            e.count = method == CountMethod::Hensel ? count_mod(f, p, m) : count_mod_brute(f, p, m);
            e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return e;
        }));
    for (auto& j : jobs) r.counts.push_back(j.get());
    return r;
}

unsigned long root_count_fp(const UPoly& u, unsigned long p) {
    check_prime(p);
    Fp a;
    for (const auto& c : u.coeffs()) a.push_back(residue(c, p));
    trim(a);
    if (a.empty()) throw Error("polynomial vanishes identically mod " + std::to_string(p));
    if (a.size() == 1) return 0;
    // X^p mod a by repeated squaring
    Fp result{1}, base = mod_poly(Fp{0, 1}, a, p);
    for (u64 e = p; e; e >>= 1) {
        if (e & 1) result = mul_mod(result, base, a, p);
        base = mul_mod(base, base, a, p);
    }
    if (result.size() < 2) result.resize(2, 0);
    result[1] = (result[1] + p - 1) % p;
    trim(result);
    return static_cast<unsigned long>(gcd_poly(a, result, p).size() - 1);
}

GoodPrimeReport good_prime(const Polynomial& f, const Monomial& beta, unsigned long p) {
    GoodPrimeReport r;
    auto reject = [&](std::string why) {
        r.good = false;
        r.reasons.push_back(std::move(why));
    };
    if (beta.size() != f.nvars()) throw Error("good_prime: twist has wrong length");
    if (!is_prime(p) || p >= kMaxPrime) {
        reject(std::to_string(p) + " is not a usable prime");
        return r;
    }
    const Integer P(p);
    for (const auto& [m, c] : f.terms()) {
        if (c.get_den() % P == 0 || c.get_num() % P == 0) {
            reject("p divides the coefficient " + to_string(c));
            break;
        }
    }
    if (!r.good) return r;

    if (f.nvars() == 2) {
        auto np = newton_polygon(f);
        for (const auto& e : np.edges) {
            if (e.normal.a % static_cast<long>(p) == 0 || e.normal.b % static_cast<long>(p) == 0)
                reject("p divides an entry of the edge normal (" + std::to_string(e.normal.a) + "," +
                       std::to_string(e.normal.b) + ")");
            if (e.support_value % p == 0) reject("p divides the edge degree " + std::to_string(e.support_value));
            Fp a, da;
            for (const auto& c : e.edge_polynomial.coeffs()) a.push_back(residue(c, p));
            trim(a);
            if (static_cast<int>(a.size()) - 1 != e.edge_polynomial.degree()) {
                reject("edge polynomial drops degree mod p");
                continue;
            }
            for (std::size_t i = 1; i < a.size(); ++i) da.push_back(a[i] * (i % p) % p);
            trim(da);
            if (da.empty() || gcd_poly(a, da, p).size() > 1)
                reject("edge polynomial " + to_string(e.edge_polynomial, "z") + " has a repeated root mod p");
        }
    }
    if (!r.good) return r;

    // no singular point of f mod p besides the origin
    if (pow_int(p, f.nvars()) > 2000000) {
        reject("residue field too large to certify the singular locus");
        return r;
    }
    Polynomial g = integral(f, p);
    std::vector<Polynomial> grad;
    for (std::size_t i = 0; i < g.nvars(); ++i) grad.push_back(partial_derivative(g, i));
    bool found = false;
    for_each_point(g.nvars(), p, [&](const std::vector<Integer>& x) {
        if (found) return;
        bool origin = true;
        for (const auto& xi : x) origin = origin && xi == 0;
        if (origin || eval_mod(g, x, P) != 0) return;
        for (const auto& d : grad)
            if (eval_mod(d, x, P) != 0) return;
        found = true;
    });
    if (found) reject("f has a singular zero mod p away from the origin");
    return r;
}

}  // namespace swh
