#include "swh/polynomial.hpp"

#include "swh/error.hpp"

#include <algorithm>
#include <numeric>

namespace swh {

// ---------------------------------------------------------------- Monomial

unsigned Monomial::total_degree() const noexcept {
    unsigned s = 0;
    for (auto v : e_) s += v;
    return s;
}

bool Monomial::is_one() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](unsigned v) { return v == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += other.e_[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= other.e_[i];
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    return r;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    return a > b;
}

// ---------------------------------------------------------------- weights

WeightVector::WeightVector(std::vector<long> weights) {
    if (weights.empty()) throw Error("weight vector must be non-empty");
    long g = 0;
    for (long v : weights) {
        if (v < 1) throw Error("weights must be positive integers");
        g = std::gcd(g, v);
    }
    w_.reserve(weights.size());
    for (long v : weights) w_.push_back(static_cast<unsigned long>(v / g));
}

unsigned long WeightVector::total() const noexcept {
    return std::accumulate(w_.begin(), w_.end(), 0UL);
}

unsigned long WeightVector::max() const noexcept {
    return w_.empty() ? 0 : *std::max_element(w_.begin(), w_.end());
}

unsigned long weighted_degree(const Monomial& m, const WeightVector& w) {
    if (m.size() != w.size())
        throw Error("weighted_degree: monomial has " + std::to_string(m.size()) +
                    " variables but weight vector has " + std::to_string(w.size()));
    unsigned long s = 0;
    for (std::size_t i = 0; i < m.size(); ++i) s += w[i] * m[i];
    return s;
}

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p(m.size());
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw Error("variable index out of range");
    Monomial m(nvars);
    m[i] = 1;
    return term(m);
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(nvars_)); }

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

unsigned Polynomial::order() const {
    if (terms_.empty()) throw Error("order of the zero polynomial");
    unsigned d = ~0U;
    for (const auto& [m, c] : terms_) d = std::min(d, m.total_degree());
    return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != nvars_) throw Error("monomial arity does not match polynomial");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_context(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw Error("polynomials live in different variable contexts");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_context(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_context(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_context(b);
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial operator*(const Polynomial& a, const Monomial& m) {
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), ma * m, ca);
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = constant(nvars_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k) base = base * base;
    }
    return result;
}

// ---------------------------------------------------------------- operations

Polynomial partial_derivative(const Polynomial& f, std::size_t i) {
    if (i >= f.nvars())
        throw Error("partial_derivative: index " + std::to_string(i) + " out of range");
    Polynomial r(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        if (m[i] == 0) continue;
        Monomial d(m);
        d[i] -= 1;
        r.add_term(d, c * m[i]);
    }
    return r;
}

std::map<unsigned long, Polynomial> weighted_parts(const Polynomial& f, const WeightVector& w) {
    if (f.is_zero()) throw Error("weighted_parts: zero polynomial");
    std::map<unsigned long, Polynomial> parts;
    for (const auto& [m, c] : f.terms()) {
        auto [it, _] = parts.try_emplace(weighted_degree(m, w), f.nvars());
        it->second.add_term(m, c);
    }
    return parts;
}

bool is_weighted_homogeneous(const Polynomial& f, const WeightVector& w) {
    return f.is_zero() || weighted_parts(f, w).size() == 1;
}

ChartPullback chart_substitute(const Polynomial& f, const WeightVector& w, std::size_t chart) {
    if (f.is_zero()) throw Error("chart_substitute: zero polynomial");
    if (chart >= f.nvars() || w.size() != f.nvars())
        throw Error("chart_substitute: chart index or weight length invalid");
    unsigned long d = ~0UL;
    for (const auto& [m, c] : f.terms()) d = std::min(d, weighted_degree(m, w));
    ChartPullback out{d, Polynomial(f.nvars())};
    for (const auto& [m, c] : f.terms()) {
        Monomial r(m);
        r[chart] = static_cast<unsigned>(weighted_degree(m, w) - d);
        out.residual.add_term(r, c);
    }
    return out;
}

Polynomial substitute_value(const Polynomial& f, std::size_t i, const Rational& value) {
    Polynomial r(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        Monomial k(m);
        k[i] = 0;
        Rational factor = 1;
        for (unsigned e = 0; e < m[i]; ++e) factor *= value;
        r.add_term(k, c * factor);
    }
    return r;
}

Polynomial drop_variable(const Polynomial& f, std::size_t i) {
    Polynomial r(f.nvars() - 1);
    for (const auto& [m, c] : f.terms()) {
        if (m[i] != 0) throw Error("drop_variable: variable still occurs");
        std::vector<unsigned> e = m.exponents();
        e.erase(e.begin() + static_cast<std::ptrdiff_t>(i));
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

Polynomial extend_variables(const Polynomial& f, std::size_t extra) {
    Polynomial r(f.nvars() + extra);
    for (const auto& [m, c] : f.terms()) {
        std::vector<unsigned> e = m.exponents();
        e.resize(e.size() + extra, 0);
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

Integer eval_mod(const Polynomial& f, std::span<const Integer> point, const Integer& modulus) {
    if (point.size() != f.nvars()) throw Error("eval_mod: point has wrong dimension");
    if (modulus <= 0) throw Error("eval_mod: modulus must be positive");
    Integer acc = 0;
    for (const auto& [m, c] : f.terms()) {
        Integer inv;
        Integer den = c.get_den();
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0 && modulus != 1)
            throw Error("eval_mod: denominator " + den.get_str() + " not invertible modulo " +
                        modulus.get_str());
        Integer term = c.get_num() * inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            Integer pw;
            mpz_powm_ui(pw.get_mpz_t(), point[i].get_mpz_t(), m[i], modulus.get_mpz_t());
            term = (term * pw) % modulus;
        }
        acc = (acc + term) % modulus;
    }
    acc %= modulus;
    if (acc < 0) acc += modulus;
    return acc;
}

Integer denominator_lcm(const Polynomial& f) {
    Integer l = 1;
    for (const auto& [m, c] : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

// ---------------------------------------------------------------- printing

std::vector<std::string> default_names(std::size_t nvars) {
    static const char* first[] = {"x", "y", "z"};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i)
        names.push_back(i < 3 ? std::string(first[i]) : "x" + std::to_string(i));
    return names;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += names.at(i);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    std::vector<std::pair<Monomial, Rational>> sorted(f.terms().begin(), f.terms().end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return grlex_greater(a.first, b.first); });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : sorted) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + '*';
            out += to_string(m, names);
        }
    }
    return out;
}

}  // namespace swh
