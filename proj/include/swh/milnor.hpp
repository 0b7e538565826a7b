#pragma once

#include "swh/groebner.hpp"

#include <optional>
#include <vector>

namespace swh {

// Local Milnor algebra O/(df) at the origin, realized as Q[x]/((df) + m^N) where the
// truncation exponent N carries the certificate m^N ⊆ (df) + m^{N+1} (hence m^N ⊆ (df)
// in the local ring by Nakayama).
struct MilnorData {
    std::vector<Monomial> basis;  // standard monomials of `groebner`
    std::size_t mu = 0;
    unsigned truncation_exponent = 0;
    GroebnerBasis groebner;  // grevlex basis of an ideal equal to (df) + m^N
};

inline constexpr unsigned kDefaultTruncationBound = 40;

// Throws HypothesisError if f is smooth at 0 (mu = 0) or no N <= max_exponent certifies
// an isolated singularity.
MilnorData local_milnor_algebra(const Polynomial& f, unsigned max_exponent = kDefaultTruncationBound);

// Jacobian ideal generators (df/dx_0, ..., df/dx_n).
std::vector<Polynomial> jacobian(const Polynomial& f);

}  // namespace swh
