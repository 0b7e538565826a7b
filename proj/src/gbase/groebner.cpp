#include "swh/groebner.hpp"

#include "swh/error.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace swh {

bool TermOrder::greater(const Monomial& a, const Monomial& b) const {
    if (kind_ == Kind::GradedReverseLex) {
        unsigned da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
    auto da = weighted_degree(a, w_), db = weighted_degree(b, w_);
    if (da != db) return da > db;
    return a > b;
}

namespace {

using OPoly = std::vector<Term>;  // sorted by decreasing monomial

OPoly to_ordered(const Polynomial& f, const TermOrder& order) {
    OPoly p;
    p.reserve(f.size());
    for (const auto& [m, c] : f.terms()) p.push_back({m, c});
    std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return order.greater(a.m, b.m); });
    return p;
}

Polynomial from_ordered(const OPoly& p, std::size_t nvars) {
    Polynomial f(nvars);
    for (const auto& t : p) f.add_term(t.m, t.c);
    return f;
}

void make_monic(OPoly& p) {
    if (p.empty() || p.front().c == 1) return;
    Rational inv = 1 / p.front().c;
    for (auto& t : p) t.c *= inv;
}

// p - c * m * g, merging sorted term lists.
OPoly sub_scaled(const OPoly& p, const Rational& c, const Monomial& m, const OPoly& g, const TermOrder& order) {
    OPoly out;
    out.reserve(p.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() || j < g.size()) {
        if (j == g.size()) {
            out.push_back(p[i++]);
            continue;
        }
        Monomial gm = g[j].m * m;
        if (i == p.size() || order.greater(gm, p[i].m)) {
            out.push_back({std::move(gm), -c * g[j].c});
            ++j;
        } else if (order.greater(p[i].m, gm)) {
            out.push_back(p[i++]);
        } else {
            Rational v = p[i].c - c * g[j].c;
            if (v != 0) out.push_back({std::move(gm), std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

// Full reduction of p by basis (optionally skipping index `skip`).
OPoly reduce(OPoly p, const std::vector<OPoly>& basis, const TermOrder& order, std::size_t skip = ~std::size_t{0}) {
    OPoly rem;
    while (!p.empty()) {
        const Term& lead = p.front();
        std::size_t k = 0;
        for (; k < basis.size(); ++k)
            if (k != skip && !basis[k].empty() && basis[k].front().m.divides(lead.m)) break;
        if (k == basis.size()) {
            rem.push_back(lead);
            p.erase(p.begin());
            continue;
        }
        const OPoly& g = basis[k];
        Rational c = lead.c / g.front().c;
        Monomial q = lead.m / g.front().m;
        p = sub_scaled(p, c, q, g, order);
    }
    return rem;
}

// Keeps earlier elements tail-reduced against the newest one; without this the
// coefficients of intermediate elements grow exponentially on dense inputs.
void tail_reduce_by_last(std::vector<OPoly>& g, const TermOrder& order) {
    const Monomial& lead = g.back().front().m;
    for (std::size_t k = 0; k + 1 < g.size(); ++k) {
        OPoly& p = g[k];
        bool hit = false;
        for (std::size_t t = 1; t < p.size() && !hit; ++t) hit = lead.divides(p[t].m);
        if (!hit) continue;
        OPoly tail(p.begin() + 1, p.end());
        OPoly rt = reduce(std::move(tail), g, order, k);
        p.resize(1);
        p.insert(p.end(), rt.begin(), rt.end());
    }
}

OPoly spoly(const OPoly& f, const OPoly& g, const TermOrder& order) {
    Monomial l = lcm(f.front().m, g.front().m);
    OPoly a = sub_scaled(OPoly{}, -1 / f.front().c, l / f.front().m, f, order);
    return sub_scaled(a, 1 / g.front().c, l / g.front().m, g, order);
}

}  // namespace

GroebnerBasis::GroebnerBasis(TermOrder order, std::vector<std::vector<Term>> gens, std::vector<Polynomial> original,
                             std::size_t nvars)
    : order_(std::move(order)), gens_(std::move(gens)), original_(std::move(original)), nvars_(nvars) {
    for (const auto& g : gens_) leads_.push_back(g.front().m);
}

std::vector<Polynomial> GroebnerBasis::generators() const {
    std::vector<Polynomial> out;
    for (const auto& g : gens_) out.push_back(from_ordered(g, nvars_));
    return out;
}

bool GroebnerBasis::contains_one() const {
    return std::any_of(leads_.begin(), leads_.end(), [](const Monomial& m) { return m.is_one(); });
}

Monomial leading_monomial(const Polynomial& f, const TermOrder& order) {
    if (f.is_zero()) throw Error("leading monomial of zero");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : f.terms())
        if (!best || order.greater(m, *best)) best = &m;
    return *best;
}

GroebnerBasis groebner(std::span<const Polynomial> gens, const TermOrder& order) {
    std::vector<Polynomial> original(gens.begin(), gens.end());
    std::size_t nvars = 0;
    std::vector<OPoly> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        nvars = g.nvars();
        OPoly p = to_ordered(g, order);
        make_monic(p);
        basis.push_back(std::move(p));
    }
    if (basis.empty()) throw Error("groebner: all generators are zero");

    // Inter-reduce the input first so that the pair set starts small.
    std::vector<OPoly> g;
    for (auto& p : basis) {
        OPoly r = reduce(p, g, order);
        if (r.empty()) continue;
        make_monic(r);
        g.push_back(std::move(r));
    }

    struct Pair {
        Monomial lcm;
        std::size_t i, j;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (order.greater(b.lcm, a.lcm)) return true;
        if (order.greater(a.lcm, b.lcm)) return false;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };
    std::set<Pair, decltype(pair_less)> queue(pair_less);
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto add_pair = [&](std::size_t i, std::size_t j) {
        if (g[i].size() == 1 && g[j].size() == 1) return;  // S-pair of two terms is zero
        queue.insert(Pair{lcm(g[i].front().m, g[j].front().m), i, j});
        pending.emplace(i, j);
    };
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) add_pair(i, j);

    auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) != 0; };

    while (!queue.empty()) {
        Pair top = *queue.begin();
        queue.erase(queue.begin());
        const std::size_t i = top.i, j = top.j;
        pending.erase({i, j});
        if (gcd(g[i].front().m, g[j].front().m).is_one()) continue;  // product criterion
        bool chain = false;
        for (std::size_t k = 0; k < g.size() && !chain; ++k) {
            if (k == i || k == j) continue;
            if (g[k].front().m.divides(top.lcm) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
        }
        if (chain) continue;
        OPoly s = reduce(spoly(g[i], g[j], order), g, order);
        if (s.empty()) continue;
        make_monic(s);
        std::size_t n = g.size();
        g.push_back(std::move(s));
        tail_reduce_by_last(g, order);
        for (std::size_t k = 0; k < n; ++k) add_pair(k, n);
    }

    // Minimalize then inter-reduce.
    std::vector<OPoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
            if (k == i) continue;
            const Monomial& lk = g[k].front().m;
            const Monomial& li = g[i].front().m;
            if (lk.divides(li) && (lk != li || k < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        OPoly head{minimal[i].front()};
        OPoly tail(minimal[i].begin() + 1, minimal[i].end());
        OPoly rt = reduce(tail, minimal, order, i);
        head.insert(head.end(), rt.begin(), rt.end());
        minimal[i] = std::move(head);
        make_monic(minimal[i]);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const OPoly& a, const OPoly& b) { return order.greater(a.front().m, b.front().m); });
    return GroebnerBasis(order, std::move(minimal), std::move(original), nvars);
}

Polynomial normal_form(const Polynomial& g, const GroebnerBasis& gb) {
    if (g.is_zero()) return g;
    if (g.nvars() != gb.nvars()) throw Error("normal_form: variable context mismatch");
    return from_ordered(reduce(to_ordered(g, gb.order()), gb.ordered_generators(), gb.order()), g.nvars());
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
    return from_ordered(spoly(to_ordered(f, order), to_ordered(g, order), order), f.nvars());
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned k) {
    std::vector<Monomial> out;
    Monomial m(nvars);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == nvars) {
            m[i] = left;
            out.push_back(m);
            return;
        }
        for (unsigned e = left + 1; e-- > 0;) {
            m[i] = e;
            self(self, i + 1, left - e);
        }
    };
    if (nvars == 0) return out;
    rec(rec, 0, k);
    return out;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
    const std::size_t n = gb.nvars();
    std::vector<unsigned> bound(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        bool found = false;
        for (const auto& lm : gb.leading_monomials()) {
            bool pure = true;
            for (std::size_t k = 0; k < n; ++k)
                if (k != i && lm[k] != 0) pure = false;
            if (pure && (!found || lm[i] < bound[i])) {
                bound[i] = lm[i];
                found = true;
            }
        }
        if (!found)
            throw Error("quotient is infinite-dimensional: no pure power of variable " + std::to_string(i) +
                        " is a leading monomial");
    }
    std::vector<Monomial> out;
    Monomial m(n);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            for (const auto& lm : gb.leading_monomials())
                if (lm.divides(m)) return;
            out.push_back(m);
            return;
        }
        for (unsigned e = 0; e < bound[i]; ++e) {
            m[i] = e;
            self(self, i + 1);
        }
        m[i] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grlex_greater(b, a); });
    return out;
}

}  // namespace swh
