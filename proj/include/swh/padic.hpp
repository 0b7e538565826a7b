#pragma once

#include "swh/polynomial.hpp"
#include "swh/upoly.hpp"

#include <string>
#include <vector>

namespace swh {

bool is_prime(unsigned long p);

// #{x in (Z/p^m)^nvars : f(x) = 0 mod p^m} by Hensel recursion on the residue classes
// mod p. Coefficient denominators must be prime to p.
Integer count_mod(const Polynomial& f, unsigned long p, unsigned m);
// Same count by enumeration; refuses more than 10^7 points.
Integer count_mod_brute(const Polynomial& f, unsigned long p, unsigned m);

enum class CountMethod { Brute, Hensel };

struct CountEntry {
    unsigned m = 0;
    Integer count;
    double seconds = 0;
};

struct CountReport {
    unsigned long p = 0;
    CountMethod method = CountMethod::Hensel;
    std::vector<CountEntry> counts;  // m = 1..m_max
};

// Counts for m = 1..m_max, computed concurrently.
CountReport count_report(const Polynomial& f, unsigned long p, unsigned m_max, CountMethod method);

// Number of distinct roots of u in F_p, as deg gcd(u mod p, X^p - X).
unsigned long root_count_fp(const UPoly& u, unsigned long p);

struct GoodPrimeReport {
    bool good = true;
    std::vector<std::string> reasons;  // why p was rejected
    explicit operator bool() const noexcept { return good; }
};

// Conservative test that the toric resolution of f has good reduction at p.
GoodPrimeReport good_prime(const Polynomial& f, const Monomial& beta, unsigned long p);

}  // namespace swh
