#pragma once

#include "swh/polynomial.hpp"

#include <optional>
#include <span>
#include <vector>

namespace swh {

// Monomial order compatible with multiplication.
class TermOrder {
public:
    enum class Kind { GradedReverseLex, WeightedGradedLex };

    static TermOrder grevlex() { return TermOrder(Kind::GradedReverseLex, {}); }
    static TermOrder weighted_grlex(const WeightVector& w) { return TermOrder(Kind::WeightedGradedLex, w); }

    Kind kind() const noexcept { return kind_; }
    const WeightVector& weights() const noexcept { return w_; }

    // a > b in this order.
    bool greater(const Monomial& a, const Monomial& b) const;

private:
    TermOrder(Kind k, WeightVector w) : kind_(k), w_(std::move(w)) {}
    Kind kind_;
    WeightVector w_;
};

struct Term {
    Monomial m;
    Rational c;
};

// Reduced, monic Groebner basis. Generators are sorted by decreasing leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis() : order_(TermOrder::grevlex()), nvars_(0) {}
    GroebnerBasis(TermOrder order, std::vector<std::vector<Term>> gens, std::vector<Polynomial> original,
                  std::size_t nvars);

    const TermOrder& order() const noexcept { return order_; }
    std::size_t nvars() const noexcept { return nvars_; }
    std::size_t size() const noexcept { return gens_.size(); }
    std::vector<Polynomial> generators() const;
    const std::vector<Polynomial>& original() const noexcept { return original_; }
    const std::vector<Monomial>& leading_monomials() const noexcept { return leads_; }
    const std::vector<std::vector<Term>>& ordered_generators() const noexcept { return gens_; }

    bool contains_one() const;

private:
    TermOrder order_;
    std::vector<std::vector<Term>> gens_;
    std::vector<Monomial> leads_;
    std::vector<Polynomial> original_;
    std::size_t nvars_;
};

Monomial leading_monomial(const Polynomial& f, const TermOrder& order);

// Buchberger with the normal selection strategy and both Buchberger criteria.
GroebnerBasis groebner(std::span<const Polynomial> gens, const TermOrder& order);

// Remainder of full multivariate division; zero iff g lies in the ideal.
Polynomial normal_form(const Polynomial& g, const GroebnerBasis& gb);

// Monomials outside the leading-term ideal. Throws when the quotient is infinite-dimensional,
// naming a variable that has no pure-power leading monomial.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

// All monomials in nvars variables of total degree exactly k, in lex-descending order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned k);

// S-polynomial of two basis elements (exposed for post-hoc Buchberger-criterion checks).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

}  // namespace swh
