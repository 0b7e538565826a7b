#include "swh/analysis.hpp"

#include "swh/error.hpp"
#include "swh/linalg.hpp"
#include "swh/upoly.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace swh {

Rational monomial_level(const Monomial& gamma, const WeightVector& w, unsigned long d) {
    if (gamma.size() != w.size()) throw Error("monomial_level: length mismatch");
    unsigned long s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * (gamma[i] + 1ul);
    return make_rational(static_cast<long>(s), static_cast<long>(d));
}

Rational SwhAnalysis::log_canonical_threshold_candidate() const {
    return make_rational(static_cast<long>(w.total()), static_cast<long>(d));
}

Rational milnor_orlik_number(const WeightVector& w, unsigned long d) {
    Rational mu = 1;
    for (std::size_t i = 0; i < w.size(); ++i)
        mu *= make_rational(static_cast<long>(d), static_cast<long>(w[i])) - 1;
    return mu;
}

namespace {

// Two-variable criterion: f_d is irreducible over C iff it is divisible by neither
// variable and f_d(1, u) = c (u^{w_0} - a) with a != 0.
bool binary_form_irreducible(const Polynomial& fd, const WeightVector& w) {
    bool has_pure_y = false, has_pure_x = false;
    for (const auto& [m, c] : fd.terms()) {
        if (m[0] == 0) has_pure_y = true;
        if (m[1] == 0) has_pure_x = true;
    }
    if (!has_pure_x || !has_pure_y) return false;
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : fd.terms()) {
        if (coeffs.size() <= m[1]) coeffs.resize(m[1] + 1);
        coeffs[m[1]] += c;
    }
    UPoly g(coeffs);
    if (g.degree() != static_cast<int>(w[0])) return false;
    for (int k = 1; k < g.degree(); ++k)
        if (g.coeff(static_cast<std::size_t>(k)) != 0) return false;
    return g.coeff(0) != 0;
}

// Upper bound for the truncation exponent of an isolated weighted-homogeneous germ:
// monomials above the socle degree (n+1)d - 2|w| lie in the Jacobian ideal.
unsigned initial_truncation_bound(const WeightVector& w, unsigned long d, unsigned cap) {
    long socle = static_cast<long>(w.size() * d) - 2 * static_cast<long>(w.total());
    unsigned long wmin = *std::min_element(w.entries().begin(), w.entries().end());
    unsigned long bound = static_cast<unsigned long>(std::max(socle, 0l)) / wmin + 2;
    return static_cast<unsigned>(std::min<unsigned long>(bound, cap));
}

std::vector<Rational> coordinates(const Polynomial& nf, const std::map<Monomial, std::size_t>& index) {
    std::vector<Rational> v(index.size());
    for (const auto& [m, c] : nf.terms()) {
        auto it = index.find(m);
        if (it == index.end()) throw Error("normal form leaves the standard-monomial basis");
        v[it->second] = c;
    }
    return v;
}

}  // namespace

SwhAnalysis analyze(const Polynomial& f, const WeightVector& w, unsigned max_truncation) {
    if (f.nvars() < 2) throw HypothesisError("at least two variables are required");
    if (w.size() != f.nvars())
        throw Error("weight vector has " + std::to_string(w.size()) + " entries for " + std::to_string(f.nvars()) +
                    " variables");
    if (f.is_zero()) throw HypothesisError("f is the zero polynomial");
    if (f.constant_term() != 0) throw HypothesisError("f does not vanish at the origin");
    for (const auto& [m, c] : f.terms())
        if (m.total_degree() == 1) throw HypothesisError("f is smooth at the origin");

    SwhAnalysis a;
    a.f = f;
    a.w = w;
    a.n = f.nvars() - 1;
    auto parts = weighted_parts(f, w);
    a.d = parts.begin()->first;
    a.f_d = parts.begin()->second;
    a.higher = f - a.f_d;
    a.flags.is_weighted_homogeneous = a.higher.is_zero();

    try {
        a.milnor_initial = local_milnor_algebra(a.f_d, initial_truncation_bound(w, a.d, max_truncation));
    } catch (const HypothesisError&) {
        throw HypothesisError("initial part f_" + std::to_string(a.d) + " = " + to_string(a.f_d, default_names(f.nvars())) +
                              " has no isolated singularity at the origin; f is not semi-weighted homogeneous "
                              "for these weights");
    }
    a.flags.initial_isolated = true;

    if (a.n == 1) {
        a.flags.initial_irreducible = binary_form_irreducible(a.f_d, w);
        if (!a.flags.initial_irreducible)
            throw HypothesisError("initial part f_d is reducible; reducible two-variable initial parts require a "
                                  "classification up to coordinate change that is not supported");
    } else {
        a.flags.initial_irreducible = true;  // automatic for isolated hypersurfaces in >= 3 variables
    }

    // The socle bound of f_d also certifies f: reducing a monomial above it by the
    // relations of f_d leaves terms of strictly larger weighted degree.
    a.milnor = local_milnor_algebra(f, initial_truncation_bound(w, a.d, max_truncation));

    for (const auto& gamma : a.milnor_initial.basis) a.spectrum.push_back(monomial_level(gamma, w, a.d));
    std::sort(a.spectrum.begin(), a.spectrum.end());

    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < a.milnor.basis.size(); ++i) index.emplace(a.milnor.basis[i], i);
    for (unsigned k = 0; k < a.milnor.truncation_exponent; ++k) {
        for (const auto& gamma : monomials_of_degree(a.nvars(), k)) {
            Polynomial nf = normal_form(Polynomial::term(gamma), a.milnor.groebner);
            a.level_table.push_back({gamma, monomial_level(gamma, w, a.d), coordinates(nf, index)});
        }
    }
    return a;
}

LevelValue level(const SwhAnalysis& a, const Polynomial& g) {
    if (g.nvars() != a.nvars()) throw Error("level: variable context mismatch");
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < a.milnor.basis.size(); ++i) index.emplace(a.milnor.basis[i], i);
    QVector target = coordinates(normal_form(g, a.milnor.groebner), index);
    if (std::all_of(target.begin(), target.end(), [](const Rational& x) { return x == 0; })) return {};

    std::map<Rational, std::vector<std::size_t>, std::greater<>> by_level;
    for (std::size_t i = 0; i < a.level_table.size(); ++i) by_level[a.level_table[i].level].push_back(i);

    const std::size_t dim = a.milnor.basis.size();
    const std::size_t kNoLabel = static_cast<std::size_t>(-1);
    EchelonSpan above(dim);  // span of levels strictly above the current one
    for (const auto& [alpha, entries] : by_level) {
        EchelonSpan at(above);
        for (std::size_t e : entries) at.insert(a.level_table[e].coords, e);
        auto red = at.reduce(target);
        if (!red.in_span()) {
            above = std::move(at);
            continue;
        }
        // target sits at level alpha; read off a level-alpha monomial it genuinely uses.
        EchelonSpan labelled(dim);
        for (const auto& [beta, others] : by_level) {
            if (beta <= alpha) break;
            for (std::size_t e : others) labelled.insert(a.level_table[e].coords, kNoLabel);
        }
        for (std::size_t e : entries) labelled.insert(a.level_table[e].coords, e);
        LevelValue out{alpha, std::nullopt};
        for (const auto& [label, c] : labelled.reduce(target).combination) {
            if (label == kNoLabel || c == 0) continue;
            out.witness = a.level_table[label].gamma;
            break;
        }
        return out;
    }
    return {};
}

EqmonResult check_eqmon(const SwhAnalysis& a, const Monomial& beta) {
    if (beta.size() != a.nvars()) throw Error("check_eqmon: twist has wrong length");
    std::vector<std::pair<Monomial, Rational>> terms(a.f_d.terms().begin(), a.f_d.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return grlex_greater(x.first, y.first); });
    for (const auto& [m, c] : terms) {
        std::size_t support = 0;
        for (std::size_t k = 0; k < m.size(); ++k) support += m[k] != 0;
        if (support != 2) continue;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] == 1 && beta[i] != 0) return {false, m, c};
    }
    return {};
}

EqpaResult check_eqpa(const SwhAnalysis& a, const Monomial& beta) {
    if (beta.size() != a.nvars()) throw Error("check_eqpa: twist has wrong length");
    EqpaResult r;
    r.expected = monomial_level(beta, a.w, a.d);
    r.actual = level(a, Polynomial::term(beta));
    r.ok = r.actual.value && *r.actual.value == r.expected;
    return r;
}

namespace {

Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rational t = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= t * m[c][k];
        }
    }
    return det;
}

// Generalized cross product of k-1 vectors in Z^k; zero if they are dependent.
std::vector<Integer> normal_of(const std::vector<std::vector<long>>& rows, std::size_t k) {
    std::vector<Integer> a(k);
    for (std::size_t col = 0; col < k; ++col) {
        std::vector<std::vector<Rational>> minor;
        for (const auto& r : rows) {
            std::vector<Rational> row;
            for (std::size_t j = 0; j < k; ++j)
                if (j != col) row.push_back(Rational(r[j]));
            minor.push_back(std::move(row));
        }
        Rational det = rows.empty() ? Rational(1) : determinant(std::move(minor));
        a[col] = det.get_num();
        if (col % 2 == 1) a[col] = -a[col];
    }
    return a;
}

}  // namespace

NondegeneracyReport newton_nondegeneracy(const Polynomial& f) {
    if (f.is_zero() || f.constant_term() != 0) throw HypothesisError("Newton polyhedron needs f(0) = 0, f != 0");
    const std::size_t k = f.nvars();
    std::vector<Monomial> support;
    for (const auto& [m, c] : f.terms()) support.push_back(m);

    std::vector<std::vector<long>> dirs;
    for (std::size_t i = 0; i < support.size(); ++i)
        for (std::size_t j = i + 1; j < support.size(); ++j) {
            std::vector<long> v(k);
            for (std::size_t t = 0; t < k; ++t) v[t] = static_cast<long>(support[j][t]) - static_cast<long>(support[i][t]);
            dirs.push_back(std::move(v));
        }
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<long> e(k, 0);
        e[i] = 1;
        dirs.push_back(std::move(e));
    }

    // Supporting normals from every (k-1)-subset of directions.
    std::set<std::vector<Integer>> normals;
    std::vector<std::size_t> pick(k - 1);
    auto rec = [&](auto&& self, std::size_t slot, std::size_t from) -> void {
        if (slot == k - 1) {
            std::vector<std::vector<long>> rows;
            for (std::size_t s : pick) rows.push_back(dirs[s]);
            auto a = normal_of(rows, k);
            Integer g = 0;
            bool pos = false, neg = false;
            for (const auto& x : a) {
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
                pos = pos || x > 0;
                neg = neg || x < 0;
            }
            if (g == 0 || (pos && neg)) return;
            for (auto& x : a) {
                x /= g;
                if (neg) x = -x;
            }
            normals.insert(std::move(a));
            return;
        }
        for (std::size_t s = from; s < dirs.size(); ++s) {
            pick[slot] = s;
            self(self, slot + 1, s + 1);
        }
    };
    rec(rec, 0, 0);

    auto pairing = [&](const std::vector<Integer>& a, const Monomial& m) {
        Integer s = 0;
        for (std::size_t i = 0; i < k; ++i) s += a[i] * m[i];
        return s;
    };
    auto argmin = [&](const std::vector<Integer>& a) {
        std::set<std::size_t> out;
        Integer best;
        for (std::size_t i = 0; i < support.size(); ++i) {
            Integer v = pairing(a, support[i]);
            if (out.empty() || v < best) {
                best = v;
                out = {i};
            } else if (v == best) {
                out.insert(i);
            }
        }
        return out;
    };

    std::vector<std::vector<Integer>> facet_normals(normals.begin(), normals.end());
    std::vector<std::set<std::size_t>> facet_sets;
    for (const auto& a : facet_normals) facet_sets.push_back(argmin(a));

    // Faces as intersections of supporting sets; closed under pairwise intersection.
    std::set<std::set<std::size_t>> faces(facet_sets.begin(), facet_sets.end());
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<std::set<std::size_t>> current(faces.begin(), faces.end());
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                std::set<std::size_t> both;
                std::set_intersection(current[i].begin(), current[i].end(), current[j].begin(), current[j].end(),
                                      std::inserter(both, both.begin()));
                if (!both.empty() && faces.insert(both).second) grew = true;
            }
    }

    NondegeneracyReport report;
    for (const auto& face : faces) {
        // compact iff the sum of the normals of all supporting sets containing it is positive
        std::vector<Integer> sum(k, 0);
        for (std::size_t t = 0; t < facet_sets.size(); ++t)
            if (std::includes(facet_sets[t].begin(), facet_sets[t].end(), face.begin(), face.end()))
                for (std::size_t i = 0; i < k; ++i) sum[i] += facet_normals[t][i];
        if (std::any_of(sum.begin(), sum.end(), [](const Integer& x) { return x <= 0; })) continue;
        if (argmin(sum) != face) continue;
        std::vector<Monomial> pts;
        for (std::size_t i : face) pts.push_back(support[i]);
        report.compact_faces.push_back(pts);
        if (pts.size() < 2 || !report.nondegenerate) continue;

        Polynomial ft(k);
        for (const auto& m : pts) ft.add_term(m, f.coefficient(m));
        std::vector<Polynomial> gens;
        for (std::size_t i = 0; i < k; ++i) gens.push_back(extend_variables(partial_derivative(ft, i), 1));
        Monomial torus(k + 1);
        for (std::size_t i = 0; i <= k; ++i) torus[i] = 1;
        gens.push_back(Polynomial::term(torus) - Polynomial::constant(k + 1, 1));
        if (!groebner(gens, TermOrder::grevlex()).contains_one()) {
            report.nondegenerate = false;
            report.degenerate_face = report.compact_faces.size() - 1;
        }
    }
    return report;
}

}  // namespace swh
