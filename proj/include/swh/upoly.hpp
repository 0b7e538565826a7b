#pragma once

#include "swh/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace swh {

// Dense univariate polynomial over Q; coeffs()[i] multiplies X^i. No trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    UPoly(std::initializer_list<long> coeffs);
    static UPoly constant(const Rational& c);
    static UPoly monomial(const Rational& c, std::size_t degree);
    // c0 + c1*X for the linear factor (c1*X + c0)
    static UPoly linear(const Rational& c1, const Rational& c0);

    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const Rational& c);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
    UPoly operator-() const;
    bool operator==(const UPoly&) const = default;

    Rational eval(const Rational& x) const;
    UPoly derivative() const;
    UPoly monic() const;
    UPoly pow(unsigned k) const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Quotient and remainder; divisor must be non-zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// Monic gcd (zero if both are zero).
UPoly gcd(UPoly a, UPoly b);
// p / gcd(p, p'), monic.
UPoly squarefree_part(const UPoly& p);
// Order of vanishing of p at x (p non-zero).
unsigned order_at(const UPoly& p, const Rational& x);
// Scales p to a primitive integer polynomial with positive leading coefficient.
UPoly primitive_integer_part(const UPoly& p);

std::string to_string(const UPoly& p, const std::string& var = "s");

// Reduced quotient of univariate polynomials: gcd(num, den) = 1, and den is a
// primitive integer polynomial with positive leading coefficient.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(UPoly::constant(1)) {}
    RationalFunction(UPoly num, UPoly den);
    static RationalFunction constant(const Rational& c) { return {UPoly::constant(c), UPoly::constant(1)}; }

    const UPoly& num() const noexcept { return num_; }
    const UPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    bool operator==(const RationalFunction&) const = default;

    // Power-series coefficients a_0..a_{count-1} at X = 0; requires den(0) != 0.
    std::vector<Rational> series(std::size_t count) const;

private:
    UPoly num_, den_;
};

std::string to_string(const RationalFunction& r, const std::string& var = "s");

}  // namespace swh
