#include "swh/toric.hpp"

#include "swh/analysis.hpp"
#include "swh/error.hpp"

#include <algorithm>
#include <numeric>

namespace swh {

namespace {

bool primitive(const Vec2& v) { return v.a >= 0 && v.b >= 0 && std::gcd(v.a, v.b) == 1; }

}  // namespace

NewtonPolygon newton_polygon(const Polynomial& f) {
    if (f.nvars() != 2) throw Error("newton_polygon: expected two variables");
    if (f.is_zero()) throw HypothesisError("newton_polygon: f is zero");
    if (f.constant_term() != 0) throw HypothesisError("newton_polygon: f(0) != 0");
    NewtonPolygon np;
    for (const auto& [m, c] : f.terms()) np.support.push_back({static_cast<long>(m[0]), static_cast<long>(m[1])});
    std::sort(np.support.begin(), np.support.end());

    // gift wrapping along the lower-left boundary
    Vec2 v = np.support.front();
    np.vertices.push_back(v);
    for (;;) {
        std::optional<Vec2> best;
        for (const auto& p : np.support) {
            if (p.a <= v.a || p.b >= v.b) continue;
            if (!best) {
                best = p;
                continue;
            }
            Vec2 dp{p.a - v.a, p.b - v.b}, db{best->a - v.a, best->b - v.b};
            long c = det(db, dp);  // < 0: p is below the line to best
            if (c < 0 || (c == 0 && p.a > best->a)) best = p;
        }
        if (!best) break;
        v = *best;
        np.vertices.push_back(v);
    }

    for (std::size_t i = 0; i + 1 < np.vertices.size(); ++i) {
        NewtonEdge e;
        e.from = np.vertices[i];
        e.to = np.vertices[i + 1];
        long dx = e.to.a - e.from.a, dy = e.from.b - e.to.b;
        long g = std::gcd(dx, dy);
        e.lattice_length = static_cast<unsigned long>(g);
        e.normal = {dy / g, dx / g};
        e.support_value = static_cast<unsigned long>(dot(e.normal, e.from));
        std::vector<Rational> c;
        for (long k = 0; k <= g; ++k) {
            Monomial m{static_cast<unsigned>(e.from.a + k * (dx / g)), static_cast<unsigned>(e.from.b - k * (dy / g))};
            c.push_back(f.coefficient(m));
        }
        e.edge_polynomial = UPoly(std::move(c));
        np.edges.push_back(std::move(e));
    }
    return np;
}

std::vector<Vec2> regular_subdivision(const std::vector<Vec2>& rays) {
    if (rays.size() < 2 || rays.front() != Vec2{1, 0} || rays.back() != Vec2{0, 1})
        throw Error("regular_subdivision: rays must run from (1,0) to (0,1)");
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (!primitive(rays[i])) throw Error("regular_subdivision: ray is not primitive");
        if (i && det(rays[i - 1], rays[i]) <= 0) throw Error("regular_subdivision: rays are not ordered");
    }
    std::vector<Vec2> out{rays.front()};
    for (std::size_t i = 1; i < rays.size(); ++i) {
        Vec2 p = rays[i - 1];
        const Vec2 q = rays[i];
        for (long D = det(p, q); D > 1; D = det(p, q)) {
            // the unique u = (k p + q) / D with 0 <= k < D; det(p, u) = 1
            long k = 0;
            while ((k * p.a + q.a) % D != 0 || (k * p.b + q.b) % D != 0) ++k;
            Vec2 u{(k * p.a + q.a) / D, (k * p.b + q.b) / D};
            out.push_back(u);
            p = u;
        }
        out.push_back(q);
    }
    return out;
}

UPoly SncResolution::stratum_class(const Stratum& s) const {
    UPoly c = s.base_class;
    if (s.h_sign != 0 && s.h_divisor) {
        long h = static_cast<long>(divisors[*s.h_divisor].strict_transform_points);
        c += UPoly::constant(make_rational(s.h_sign * h));
    }
    return c;
}

std::vector<Vec2> SncResolution::rays() const {
    std::vector<Vec2> out;
    for (const auto& d : divisors)
        if (d.ray) out.push_back(*d.ray);
    return out;
}

SncResolution snc_resolution_on_fan(const Polynomial& f, const Monomial& beta, const std::vector<Vec2>& fan) {
    if (f.nvars() != 2) throw Error("snc_resolution: expected two variables");
    if (beta.size() != 2) throw Error("snc_resolution: twist has wrong length");
    SncResolution r;
    r.nvars = 2;
    r.f = f;
    r.beta = beta;
    r.polygon = newton_polygon(f);
    auto report = newton_nondegeneracy(f);
    if (!report.nondegenerate)
        throw HypothesisError("f is Newton degenerate: a compact face polynomial has a critical point in the torus");

    if (fan.empty() || fan.front() != Vec2{1, 0} || fan.back() != Vec2{0, 1})
        throw Error("snc_resolution: fan must run from (1,0) to (0,1)");
    for (std::size_t i = 1; i < fan.size(); ++i)
        if (det(fan[i - 1], fan[i]) != 1) throw Error("snc_resolution: fan is not regular");

    for (const auto& ray : fan) {
        SncDivisor d;
        d.ray = ray;
        bool axis = ray == Vec2{1, 0} || ray == Vec2{0, 1};
        d.kind = axis ? DivisorKind::Axis : DivisorKind::Exceptional;
        long N = -1;
        for (const auto& p : r.polygon.support) {
            long v = dot(ray, p);
            if (N < 0 || v < N) N = v;
        }
        d.N = static_cast<unsigned long>(N);
        d.nu = static_cast<unsigned long>(ray.a * (beta[0] + 1l) + ray.b * (beta[1] + 1l));
        for (std::size_t e = 0; e < r.polygon.edges.size(); ++e) {
            if (r.polygon.edges[e].normal != ray) continue;
            const auto& ep = r.polygon.edges[e].edge_polynomial;
            UPoly sf = squarefree_part(ep);
            if (sf.degree() != ep.degree())
                throw HypothesisError("edge polynomial " + to_string(ep, "z") + " has a repeated root");
            d.edge = e;
            d.strict_transform_points = static_cast<unsigned long>(sf.degree());
        }
        r.divisors.push_back(d);
    }
    for (std::size_t e = 0; e < r.polygon.edges.size(); ++e)
        if (std::find(fan.begin(), fan.end(), r.polygon.edges[e].normal) == fan.end())
            throw Error("snc_resolution: fan misses an edge normal");

    const std::size_t H = r.divisors.size();
    SncDivisor strict;
    strict.kind = DivisorKind::StrictTransform;
    strict.N = 1;
    strict.nu = 1;
    r.divisors.push_back(strict);

    for (std::size_t i = 0; i < H; ++i) {
        const auto& d = r.divisors[i];
        if (d.kind == DivisorKind::Exceptional) {
            // P^1 minus its two torus-fixed points and the strict-transform points
            Stratum s{UPoly{-1, 1}, 0, std::nullopt, {i}};
            if (d.strict_transform_points) {
                s.h_sign = -1;
                s.h_divisor = i;
            }
            r.strata.push_back(std::move(s));
        }
        if (i + 1 < H) r.strata.push_back({UPoly{1}, 0, std::nullopt, {i, i + 1}});
        if (d.strict_transform_points) r.strata.push_back({UPoly{}, 1, i, {i, H}});
    }
    return r;
}

SncResolution snc_resolution(const Polynomial& f, const Monomial& beta) {
    auto np = newton_polygon(f);
    std::vector<Vec2> rays{{1, 0}};
    for (const auto& e : np.edges) rays.push_back(e.normal);
    rays.push_back({0, 1});
    return snc_resolution_on_fan(f, beta, regular_subdivision(rays));
}

SncResolution coordinate_hyperplane_resolution() {
    SncResolution r;
    r.nvars = 1;
    r.f = Polynomial::variable(1, 0);
    r.beta = Monomial{0};
    SncDivisor h;
    h.kind = DivisorKind::StrictTransform;
    h.N = 1;
    h.nu = 1;
    r.divisors.push_back(h);
    r.strata.push_back({UPoly{1}, 0, std::nullopt, {0}});
    return r;
}

}  // namespace swh
