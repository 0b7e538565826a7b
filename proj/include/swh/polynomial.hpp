#pragma once

#include "swh/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace swh {

// Exponent vector x^e. Comparison is lexicographic on the exponents.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exponents) : e_(std::move(exponents)) {}
    Monomial(std::initializer_list<unsigned> exponents) : e_(exponents) {}

    std::size_t size() const noexcept { return e_.size(); }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    unsigned& operator[](std::size_t i) { return e_[i]; }
    const std::vector<unsigned>& exponents() const noexcept { return e_; }

    unsigned total_degree() const noexcept;
    bool is_one() const noexcept;
    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    // Requires divides(*this, other) in the sense other | *this.
    Monomial operator/(const Monomial& other) const;

    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);

    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<unsigned> e_;
};

// Graded lexicographic comparison: total degree first, then lex. Used for printing.
bool grlex_greater(const Monomial& a, const Monomial& b);

// Positive integer weights, stored divided by their common gcd.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<long> weights);
    WeightVector(std::initializer_list<long> weights) : WeightVector(std::vector<long>(weights)) {}

    std::size_t size() const noexcept { return w_.size(); }
    unsigned long operator[](std::size_t i) const { return w_[i]; }
    const std::vector<unsigned long>& entries() const noexcept { return w_; }
    unsigned long total() const noexcept;  // |w|
    unsigned long max() const noexcept;

    bool operator==(const WeightVector&) const = default;

private:
    std::vector<unsigned long> w_;
};

unsigned long weighted_degree(const Monomial& m, const WeightVector& w);

// Sparse multivariate polynomial over Q. Zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial term(const Monomial& m, const Rational& c = 1);
    static Polynomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;
    unsigned total_degree() const;
    // Minimum total degree of a term (order at the origin); requires non-zero.
    unsigned order() const;
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;
    Polynomial pow(unsigned k) const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Monomial& m);

    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

private:
    void check_context(const Polynomial& o) const;

    std::size_t nvars_ = 0;
    TermMap terms_;
};

Polynomial partial_derivative(const Polynomial& f, std::size_t i);

// Splits f by weighted degree. Keys are the distinct weighted degrees present.
std::map<unsigned long, Polynomial> weighted_parts(const Polynomial& f, const WeightVector& w);

bool is_weighted_homogeneous(const Polynomial& f, const WeightVector& w);

struct ChartPullback {
    unsigned long d = 0;  // exponent of the chart variable factored out
    Polynomial residual;  // same slots: chart variable at `chart`, u_j elsewhere
};

// Pullback along x_chart <- x_chart^{w_chart}, x_j <- x_chart^{w_j} u_j.
ChartPullback chart_substitute(const Polynomial& f, const WeightVector& w, std::size_t chart);

// Sets x_i := value, keeping the number of variables.
Polynomial substitute_value(const Polynomial& f, std::size_t i, const Rational& value);

// Drops variable i (which must not occur) from the context.
Polynomial drop_variable(const Polynomial& f, std::size_t i);

// Appends `extra` variables to the context.
Polynomial extend_variables(const Polynomial& f, std::size_t extra);

// f(point) mod modulus; throws if a coefficient denominator is not invertible.
Integer eval_mod(const Polynomial& f, std::span<const Integer> point, const Integer& modulus);

// Least common multiple of coefficient denominators.
Integer denominator_lcm(const Polynomial& f);

// Canonical text in graded-lex order, e.g. "-x^3 + y^2".
std::string to_string(const Polynomial& f, const std::vector<std::string>& names);
std::string to_string(const Monomial& m, const std::vector<std::string>& names);

// Default variable names x, y, z, then x3, x4, ...
std::vector<std::string> default_names(std::size_t nvars);

}  // namespace swh
