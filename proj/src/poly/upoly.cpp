#include "swh/upoly.hpp"

#include "swh/error.hpp"

namespace swh {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UPoly(std::move(v));
}

UPoly UPoly::linear(const Rational& c1, const Rational& c0) { return UPoly(std::vector<Rational>{c0, c1}); }

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rational& c) {
    for (auto& v : c_) v *= c;
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
}

UPoly UPoly::operator-() const {
    UPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

Rational UPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    UPoly r(*this);
    Rational inv = 1 / lead();
    return r *= inv;
}

UPoly UPoly::pow(unsigned k) const {
    UPoly r = constant(1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error("UPoly division by zero");
    if (a.degree() < b.degree()) return {UPoly{}, a};
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const Rational inv = 1 / b.lead();
    const auto bd = static_cast<std::size_t>(b.degree());
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rational q = rem[k + bd] * inv;
        quo[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= bd; ++j) rem[k + j] -= q * b.coeffs()[j];
    }
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 0) return p.monic();
    return divmod(p, gcd(p, p.derivative())).first.monic();
}

unsigned order_at(const UPoly& p, const Rational& x) {
    if (p.is_zero()) throw Error("order_at: zero polynomial");
    unsigned k = 0;
    UPoly cur = p;
    const UPoly lin = UPoly::linear(1, -x);
    for (;;) {
        auto [q, r] = divmod(cur, lin);
        if (!r.is_zero()) return k;
        ++k;
        cur = std::move(q);
    }
}

UPoly primitive_integer_part(const UPoly& p) {
    if (p.is_zero()) return p;
    Integer l = 1, g = 0;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Rational> v;
    for (const auto& c : p.coeffs()) {
        Rational s = c * l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num_mpz_t());
        v.push_back(s);
    }
    if (p.lead() < 0) g = -g;
    for (auto& c : v) c /= g;
    return UPoly(std::move(v));
}

std::string to_string(const UPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (i == 0 || mag != 1) out += to_string(mag);
        if (i > 0) {
            if (mag != 1) out += '*';
            out += var;
            if (i > 1) out += '^' + std::to_string(i);
        }
    }
    return out;
}

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(UPoly num, UPoly den) {
    if (den.is_zero()) throw Error("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = {};
        den_ = UPoly::constant(1);
        return;
    }
    UPoly g = gcd(num, den);
    num = divmod(num, g).first;
    den = divmod(den, g).first;
    UPoly pden = primitive_integer_part(den);
    Rational scale = pden.lead() / den.lead();
    num_ = num * scale;
    den_ = std::move(pden);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw Error("rational function division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

std::vector<Rational> RationalFunction::series(std::size_t count) const {
    const Rational d0 = den_.coeff(0);
    if (d0 == 0) throw Error("series expansion: denominator vanishes at 0");
    std::vector<Rational> a(count);
    for (std::size_t k = 0; k < count; ++k) {
        Rational acc = num_.coeff(k);
        for (std::size_t j = 1; j <= k && j < den_.coeffs().size(); ++j) acc -= den_.coeffs()[j] * a[k - j];
        a[k] = acc / d0;
    }
    return a;
}

std::string to_string(const RationalFunction& r, const std::string& var) {
    if (r.den() == UPoly::constant(1)) return to_string(r.num(), var);
    return "(" + to_string(r.num(), var) + ")/(" + to_string(r.den(), var) + ")";
}

}  // namespace swh
