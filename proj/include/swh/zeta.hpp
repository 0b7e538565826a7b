#pragma once

#include "swh/blowup.hpp"
#include "swh/toric.hpp"
#include "swh/upoly.hpp"

#include <optional>
#include <vector>

namespace swh {

// Polynomial in L and T over Q: coeffs()[k] is the coefficient of T^k, a polynomial in L.
class LTPoly {
public:
    LTPoly() = default;
    explicit LTPoly(std::vector<UPoly> coeffs);
    static LTPoly constant(const UPoly& c) { return LTPoly({c}); }
    // L^nu - T^N
    static LTPoly binomial(unsigned long N, unsigned long nu);
    // c(L) T^k
    static LTPoly term(const UPoly& c, unsigned long k);

    const std::vector<UPoly>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int t_degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

    LTPoly& operator+=(const LTPoly& o);
    friend LTPoly operator+(LTPoly a, const LTPoly& b) { return a += b; }
    friend LTPoly operator*(const LTPoly& a, const LTPoly& b);
    bool operator==(const LTPoly&) const = default;

    // Exact quotient by L^nu - T^N, or nullopt if it does not divide.
    std::optional<LTPoly> divide_by_binomial(unsigned long N, unsigned long nu) const;
    // Exact quotient by a divisor whose leading T coefficient is a non-zero constant.
    std::optional<LTPoly> divide_exact(const LTPoly& divisor) const;
    // The polynomial in T obtained from L := value.
    UPoly at_L(const Rational& value) const;

private:
    void trim();
    std::vector<UPoly> c_;
};

struct ZetaFactor {
    unsigned long N = 0;
    unsigned long nu = 0;
    bool operator==(const ZetaFactor&) const = default;
};

// L^-prefactor_exponent * numerator / prod (L^nu - T^N), with T = L^-s.
// Each factor stands for 1 - L^-nu T^N up to the unit L^nu.
struct ZetaExpression {
    unsigned prefactor_exponent = 0;
    LTPoly numerator;
    std::vector<ZetaFactor> denominator;
};

// Sum over strata of [E_I^o] prod_{i in I} (L-1) T^N_i / (L^nu_i - T^N_i), times
// L^-(nvars); factors that divide the numerator are cancelled.
ZetaExpression assemble_motivic(const SncResolution& res);

// Homogenized cyclotomic factor L^(nu0 phi(k)) Phi_k(T^N0 / L^nu0). The factors of
// ratio nu0/N0 are L^(g nu0) - T^(g N0) = -prod_{k | g} cyclotomic_component(k, ...).
LTPoly cyclotomic_component(unsigned long k, unsigned long N0, unsigned long nu0);

// A pole -nu0/N0 has the least number of factors of ratio nu0/N0 that any presentation
// needs: the largest, over cyclotomic components k, of (#factors containing component k)
// minus (multiplicity of the component in the numerator). Each count is checked against
// the specializations L = r^N0 for r = 2, 3, 5.
PoleSet poles(const ZetaExpression& z);

// sum_I chi(E_I^o) prod 1/(N_i s + nu_i)
RationalFunction topological(const SncResolution& res);
// L -> 1 limit of the motivic expression with T = L^-s, by expansion in L - 1.
RationalFunction topological_from_motivic(const ZetaExpression& z);

// Local Igusa zeta function at the origin, as a rational function of t = p^-s.
// Requires a good prime.
RationalFunction igusa_specialize(const SncResolution& res, unsigned long p);
// Igusa zeta function over all of Z_p^n (untwisted): the local part plus the residue
// classes away from the origin, which are smooth or non-vanishing at good primes.
RationalFunction igusa_global(const SncResolution& res, unsigned long p);

// N_1..N_m_max from the Poincare series (1 - t Z(t)) / (1 - t) of a global Igusa zeta
// function; throws CertificationError if a count is not an integer.
std::vector<Integer> predict_counts(const RationalFunction& igusa, unsigned long p, std::size_t nvars,
                                    unsigned m_max);

}  // namespace swh
