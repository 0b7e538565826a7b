#pragma once

#include <gmpxx.h>

#include <string>

namespace swh {

using Integer = mpz_class;
using Rational = mpq_class;  // canonicalized: gcd(num, den) = 1, den > 0

// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "n" or "n/d" with optional leading sign; throws swh::Error.
Rational parse_rational(const std::string& text);

inline Rational make_rational(long num, long den = 1) {
    Rational q{Integer(num), Integer(den)};
    q.canonicalize();
    return q;
}

}  // namespace swh
