#include "swh/milnor.hpp"

#include "swh/error.hpp"

#include <algorithm>

namespace swh {

std::vector<Polynomial> jacobian(const Polynomial& f) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(partial_derivative(f, i));
    return out;
}

namespace {

GroebnerBasis truncated_basis(const std::vector<Polynomial>& jac, std::size_t nvars, unsigned k) {
    std::vector<Polynomial> gens = jac;
    for (const auto& m : monomials_of_degree(nvars, k)) gens.push_back(Polynomial::term(m));
    return groebner(gens, TermOrder::grevlex());
}

}  // namespace

MilnorData local_milnor_algebra(const Polynomial& f, unsigned max_exponent) {
    if (f.is_zero()) throw HypothesisError("f is the zero polynomial");
    if (f.constant_term() != 0) throw HypothesisError("f does not vanish at the origin");
    const std::size_t n = f.nvars();
    auto jac = jacobian(f);
    for (const auto& d : jac)
        if (d.constant_term() != 0) throw HypothesisError("f is smooth at the origin (mu = 0)");

    // m^N in (df) + m^{N+1} iff m^N in (df) + m^K for any K > N, so one basis per K
    // suffices; K doubles until the bound is reached.
    for (unsigned K = std::min(4u, max_exponent + 1);; K = std::min(2 * K, max_exponent + 1)) {
        GroebnerBasis gb = truncated_basis(jac, n, K);
        for (unsigned N = 1; N < K; ++N) {
            bool certified = true;
            for (const auto& m : monomials_of_degree(n, N)) {
                if (!normal_form(Polynomial::term(m), gb).is_zero()) {
                    certified = false;
                    break;
                }
            }
            if (!certified) continue;
            // here (df) + m^N = (df) + m^K
            auto basis = standard_monomials(gb);
            std::size_t mu = basis.size();
            return MilnorData{std::move(basis), mu, N, std::move(gb)};
        }
        if (K == max_exponent + 1) break;
    }
    throw HypothesisError("no truncation exponent N <= " + std::to_string(max_exponent) +
                          " certifies m^N in (df); the singularity is possibly not isolated");
}

}  // namespace swh
