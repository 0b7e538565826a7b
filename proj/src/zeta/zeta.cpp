#include "swh/zeta.hpp"

#include "swh/error.hpp"
#include "swh/padic.hpp"

#include <map>
#include <numeric>
#include <set>

namespace swh {

LTPoly::LTPoly(std::vector<UPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

void LTPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

LTPoly LTPoly::binomial(unsigned long N, unsigned long nu) {
    LTPoly b = term(UPoly::monomial(1, nu), 0);
    b += term(UPoly::constant(-1), N);
    return b;
}

LTPoly LTPoly::term(const UPoly& c, unsigned long k) {
    std::vector<UPoly> v(k + 1);
    v[k] = c;
    return LTPoly(std::move(v));
}

LTPoly& LTPoly::operator+=(const LTPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

LTPoly operator*(const LTPoly& a, const LTPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<UPoly> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return LTPoly(std::move(c));
}

std::optional<LTPoly> LTPoly::divide_by_binomial(unsigned long N, unsigned long nu) const {
    if (N == 0) {
        UPoly d = UPoly::monomial(1, nu) - UPoly::constant(1);
        std::vector<UPoly> q;
        for (const auto& c : c_) {
            auto [qq, r] = divmod(c, d);
            if (!r.is_zero()) return std::nullopt;
            q.push_back(qq);
        }
        return LTPoly(std::move(q));
    }
    return divide_exact(binomial(N, nu));
}

std::optional<LTPoly> LTPoly::divide_exact(const LTPoly& divisor) const {
    if (divisor.is_zero() || divisor.c_.back().degree() != 0) throw Error("divide_exact: divisor is not monic in T");
    const std::size_t n = divisor.c_.size() - 1;
    const Rational inv = 1 / divisor.c_.back().coeff(0);
    std::vector<UPoly> r = c_;
    std::vector<UPoly> q(r.size() > n ? r.size() - n : 0);
    for (std::size_t k = r.size(); k-- > n;) {
        if (r[k].is_zero()) continue;
        UPoly c = r[k] * inv;
        for (std::size_t j = 0; j <= n; ++j) r[k - n + j] -= c * divisor.c_[j];
        q[k - n] = std::move(c);
    }
    for (const auto& c : r)
        if (!c.is_zero()) return std::nullopt;
    return LTPoly(std::move(q));
}

UPoly LTPoly::at_L(const Rational& value) const {
    std::vector<Rational> t;
    for (const auto& c : c_) t.push_back(c.eval(value));
    return UPoly(std::move(t));
}

namespace {

bool trivial_factor(const SncDivisor& d) { return d.N == 0 && d.nu == 1; }

Rational pow_q(const Rational& base, unsigned long e) {
    Rational r = 1;
    for (unsigned long i = 0; i < e; ++i) r *= base;
    return r;
}

// Phi_k over Q
UPoly cyclotomic(unsigned long k) {
    UPoly p = UPoly::monomial(1, k) - UPoly::constant(1);
    for (unsigned long e = 1; e < k; ++e)
        if (k % e == 0) p = divmod(p, cyclotomic(e)).first;
    return p;
}

// multiplicity of `factor` in `a`, capped at `cap`
unsigned valuation(LTPoly a, const LTPoly& factor, unsigned cap) {
    unsigned v = 0;
    while (v < cap) {
        auto q = a.divide_exact(factor);
        if (!q) break;
        a = std::move(*q);
        ++v;
    }
    return v;
}

unsigned valuation(UPoly a, const UPoly& factor, unsigned cap) {
    unsigned v = 0;
    while (v < cap && !a.is_zero()) {
        auto [q, r] = divmod(a, factor);
        if (!r.is_zero()) break;
        a = std::move(q);
        ++v;
    }
    return v;
}

// binom(a - b s, j) as a polynomial in s
UPoly binom_shift(long a, long b, unsigned j) {
    UPoly out = UPoly::constant(1);
    Rational fact = 1;
    for (unsigned i = 0; i < j; ++i) {
        out = out * UPoly::linear(make_rational(-b), make_rational(a - static_cast<long>(i)));
        fact *= i + 1;
    }
    return out * (1 / fact);
}

}  // namespace

ZetaExpression assemble_motivic(const SncResolution& res) {
    ZetaExpression z;
    z.prefactor_exponent = static_cast<unsigned>(res.nvars);
    std::vector<bool> used(res.divisors.size(), false);
    for (const auto& s : res.strata)
        for (auto i : s.divisors) used[i] = true;
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < res.divisors.size(); ++i)
        if (used[i] && !trivial_factor(res.divisors[i])) active.push_back(i);

    const UPoly Lm1{-1, 1};
    LTPoly A;
    for (const auto& s : res.strata) {
        LTPoly term = LTPoly::constant(res.stratum_class(s));
        for (auto i : active) {
            const auto& d = res.divisors[i];
            bool incident = std::find(s.divisors.begin(), s.divisors.end(), i) != s.divisors.end();
            term = term * (incident ? LTPoly::term(Lm1, d.N) : LTPoly::binomial(d.N, d.nu));
        }
        A += term;
    }
    for (auto i : active) z.denominator.push_back({res.divisors[i].N, res.divisors[i].nu});

    for (std::size_t k = 0; k < z.denominator.size();) {
        auto q = A.divide_by_binomial(z.denominator[k].N, z.denominator[k].nu);
        if (q) {
            A = std::move(*q);
            z.denominator.erase(z.denominator.begin() + static_cast<long>(k));
        } else {
            ++k;
        }
    }
    z.numerator = std::move(A);
    return z;
}

LTPoly cyclotomic_component(unsigned long k, unsigned long N0, unsigned long nu0) {
    UPoly phi = cyclotomic(k);
    const unsigned long deg = static_cast<unsigned long>(phi.degree());
    LTPoly out;
    for (unsigned long j = 0; j <= deg; ++j)
        if (phi.coeff(j) != 0) out += LTPoly::term(UPoly::monomial(phi.coeff(j), nu0 * (deg - j)), N0 * j);
    return out;
}

PoleSet poles(const ZetaExpression& z) {
    std::map<Rational, std::vector<unsigned long>> classes;  // sigma = nu / N -> g = N / N0
    for (const auto& f : z.denominator) {
        if (f.N == 0) continue;
        Rational sigma = make_rational(static_cast<long>(f.nu), static_cast<long>(f.N));
        classes[sigma].push_back(f.N / sigma.get_den().get_ui());
    }

    PoleSet out;
    out.kind = PoleKind::Exact;
    for (const auto& [sigma, gs] : classes) {
        const unsigned long nu0 = sigma.get_num().get_ui(), N0 = sigma.get_den().get_ui();
        std::set<unsigned long> ks;
        for (auto g : gs)
            for (unsigned long k = 1; k <= g; ++k)
                if (g % k == 0) ks.insert(k);
        unsigned order = 0;
        for (auto k : ks) {
            unsigned c = 0;
            for (auto g : gs) c += g % k == 0;
            const LTPoly psi = cyclotomic_component(k, N0, nu0);
            const unsigned need = c - valuation(z.numerator, psi, c);

            for (long r : {2l, 3l, 5l}) {
                const Rational q = pow_q(r, N0);
                const UPoly psi_q = psi.at_L(q);
                unsigned den = 0;
                for (const auto& f : z.denominator) {
                    UPoly factor = UPoly::constant(pow_q(q, f.nu)) - UPoly::monomial(1, f.N);
                    den += valuation(factor, psi_q, 1);
                }
                unsigned num = valuation(z.numerator.at_L(q), psi_q, den);
                if (den - num != need)
                    throw CertificationError("pole -" + to_string(sigma) + ", component " + std::to_string(k) +
                                             ": symbolic order " + std::to_string(need) + ", specialization at L = " +
                                             std::to_string(r) + "^" + std::to_string(N0) + " gives " +
                                             std::to_string(den - num));
            }
            order = std::max(order, need);
        }
        if (order > 0) out.entries[-sigma] = order;
    }
    return out;
}

RationalFunction topological(const SncResolution& res) {
    RationalFunction sum;
    for (const auto& s : res.strata) {
        Rational chi = res.stratum_class(s).eval(1);
        if (chi == 0) continue;
        RationalFunction term = RationalFunction::constant(chi);
        for (auto i : s.divisors) {
            const auto& d = res.divisors[i];
            term = term / RationalFunction(UPoly::linear(make_rational(static_cast<long>(d.N)), make_rational(static_cast<long>(d.nu))),
                                           UPoly::constant(1));
        }
        sum = sum + term;
    }
    return sum;
}

RationalFunction topological_from_motivic(const ZetaExpression& z) {
    // L = 1 + e, T = L^-s: L^a T^b = (1 + e)^(a - b s) = sum_j binom(a - b s, j) e^j, and
    // each denominator factor is e (nu + N s) + O(e^2).
    const unsigned k = static_cast<unsigned>(z.denominator.size());
    for (unsigned j = 0; j <= k; ++j) {
        UPoly aj;
        const auto& c = z.numerator.coeffs();
        for (std::size_t b = 0; b < c.size(); ++b)
            for (std::size_t a = 0; a < c[b].coeffs().size(); ++a) {
                const Rational& cab = c[b].coeffs()[a];
                if (cab != 0) aj += binom_shift(static_cast<long>(a), static_cast<long>(b), j) * cab;
            }
        if (j < k) {
            if (!aj.is_zero())
                throw CertificationError("motivic expression has a pole at L = 1 of order above the factor count");
            continue;
        }
        UPoly den = UPoly::constant(1);
        for (const auto& f : z.denominator)
            den = den * UPoly::linear(make_rational(static_cast<long>(f.N)), make_rational(static_cast<long>(f.nu)));
        return RationalFunction(aj, den);
    }
    return {};
}

RationalFunction igusa_specialize(const SncResolution& res, unsigned long p) {
    if (res.nvars == 2) {
        auto gp = good_prime(res.f, res.beta, p);
        if (!gp) throw HypothesisError("bad prime " + std::to_string(p) + ": " + gp.reasons.front());
    } else if (!is_prime(p)) {
        throw HypothesisError(std::to_string(p) + " is not a prime");
    }
    const Rational P(Integer{p});
    RationalFunction sum;
    for (const auto& s : res.strata) {
        Rational c = s.base_class.eval(P);
        if (s.h_sign != 0 && s.h_divisor) {
            const auto& d = res.divisors[*s.h_divisor];
            const auto& ep = res.polygon.edges.at(*d.edge).edge_polynomial;
            c += s.h_sign * static_cast<long>(root_count_fp(ep, p));
        }
        if (c == 0) continue;
        RationalFunction term = RationalFunction::constant(c);
        for (auto i : s.divisors) {
            const auto& d = res.divisors[i];
            UPoly num = UPoly::monomial(P - 1, d.N);
            UPoly den = UPoly::constant(pow_q(P, d.nu)) - UPoly::monomial(1, d.N);
            term = term * RationalFunction(num, den);
        }
        sum = sum + term;
    }
    return sum * RationalFunction::constant(1 / pow_q(P, res.nvars));
}

RationalFunction igusa_global(const SncResolution& res, unsigned long p) {
    if (!res.beta.is_one()) throw Error("igusa_global: only the untwisted zeta function counts solutions");
    RationalFunction z = igusa_specialize(res, p);
    const std::size_t k = res.nvars;
    const Integer modulus(p);
    unsigned long nonzero = 0, smooth_zero = 0;
    Integer denom = denominator_lcm(res.f);
    Polynomial g = res.f * Rational(denom);
    std::vector<Integer> x(k, 0);
    for (;;) {
        std::size_t i = 0;
        while (i < k && x[i] == p - 1) x[i++] = 0;
        if (i == k) break;
        x[i] += 1;
        if (eval_mod(g, x, modulus) != 0) ++nonzero;
        else ++smooth_zero;  // singular zeros besides the origin are excluded by good_prime
    }
    const Rational P(Integer{p});
    Rational unit = 1 / pow_q(P, k);
    z = z + RationalFunction::constant(unit * static_cast<long>(nonzero));
    // p^-k (1 - 1/p) t / (1 - t/p)
    RationalFunction smooth(UPoly::monomial(unit * (1 - 1 / P) * P, 1), UPoly::linear(-1, P));
    return z + smooth * RationalFunction::constant(make_rational(static_cast<long>(smooth_zero)));
}

std::vector<Integer> predict_counts(const RationalFunction& igusa, unsigned long p, std::size_t nvars, unsigned m_max) {
    // P(t) = (1 - t Z(t)) / (1 - t)
    RationalFunction t(UPoly::monomial(1, 1), UPoly::constant(1));
    RationalFunction one = RationalFunction::constant(1);
    RationalFunction series_fn = (one - t * igusa) / (one - t);
    auto coeffs = series_fn.series(m_max + 1);
    std::vector<Integer> out;
    Rational scale = 1;
    for (std::size_t i = 0; i < nvars; ++i) scale *= static_cast<long>(p);
    Rational s = 1;
    for (unsigned m = 1; m <= m_max; ++m) {
        s *= scale;
        Rational n = coeffs[m] * s;
        if (n.get_den() != 1)
            throw CertificationError("predicted count N_" + std::to_string(m) + " = " + to_string(n) + " is not an integer");
        out.push_back(n.get_num());
    }
    return out;
}

}  // namespace swh
