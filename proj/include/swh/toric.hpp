#pragma once

#include "swh/polynomial.hpp"
#include "swh/upoly.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace swh {

// Lattice vector in Z^2; used both for exponents and for dual-fan rays.
struct Vec2 {
    long a = 0;
    long b = 0;
    auto operator<=>(const Vec2&) const = default;
};

inline long det(const Vec2& p, const Vec2& q) { return p.a * q.b - p.b * q.a; }
inline long dot(const Vec2& p, const Vec2& q) { return p.a * q.a + p.b * q.b; }

struct NewtonEdge {
    Vec2 from;  // smaller x exponent
    Vec2 to;
    Vec2 normal;  // primitive, positive entries
    unsigned long lattice_length = 0;
    unsigned long support_value = 0;  // <normal, from> = <normal, to>
    UPoly edge_polynomial;            // sum_k c_k z^k over the lattice points from + k * step
};

struct NewtonPolygon {
    std::vector<Vec2> support;
    std::vector<Vec2> vertices;  // left to right
    std::vector<NewtonEdge> edges;
};

// Lower boundary of the Newton polyhedron of a two-variable f with f(0) = 0.
NewtonPolygon newton_polygon(const Polynomial& f);

// Inserts rays until consecutive determinants are 1. Input: primitive rays in
// counterclockwise order from (1,0) to (0,1).
std::vector<Vec2> regular_subdivision(const std::vector<Vec2>& rays);

enum class DivisorKind { Axis, Exceptional, StrictTransform };

struct SncDivisor {
    DivisorKind kind = DivisorKind::Exceptional;
    std::optional<Vec2> ray;
    unsigned long N = 0;
    unsigned long nu = 0;
    unsigned long strict_transform_points = 0;
    std::optional<std::size_t> edge;  // index into the Newton polygon edges
};

// Locally closed piece E_I^o over the origin. Its class in L is
// base_class + h_sign * h, with h the number of strict-transform points on
// divisor h_divisor (zero when absent).
struct Stratum {
    UPoly base_class;
    int h_sign = 0;
    std::optional<std::size_t> h_divisor;
    std::vector<std::size_t> divisors;
};

struct SncResolution {
    std::size_t nvars = 0;
    Polynomial f;
    Monomial beta;
    NewtonPolygon polygon;
    std::vector<SncDivisor> divisors;
    std::vector<Stratum> strata;

    // Class polynomial in L with strict-transform counts filled in.
    UPoly stratum_class(const Stratum& s) const;
    std::vector<Vec2> rays() const;
};

// Toric embedded resolution of a Newton nondegenerate two-variable f, twisted by x^beta.
SncResolution snc_resolution(const Polynomial& f, const Monomial& beta);
// Same, on a caller-chosen regular fan that must contain every edge normal.
SncResolution snc_resolution_on_fan(const Polynomial& f, const Monomial& beta, const std::vector<Vec2>& fan);
// f = x in one variable: the identity resolution with the single divisor N = nu = 1.
SncResolution coordinate_hyperplane_resolution();

}  // namespace swh
