#pragma once

#include <vector>

#include "hyperovals/plane.hpp"

namespace hyperovals {

/// q + 2 points, every line meeting them in 0 or 2. Points kept sorted.
struct Hyperoval {
    std::vector<PlanePoint> points;

    Hyperoval() = default;
    explicit Hyperoval(std::vector<PlanePoint> pts);

    bool contains(const PlanePoint& p) const;
    std::size_t size() const { return points.size(); }
    friend bool operator==(const Hyperoval&, const Hyperoval&) = default;
};

/// q + 2 lines, every point on 0 or 2 of them. Lines kept sorted.
struct LineHyperoval {
    std::vector<PlaneLine> lines;

    LineHyperoval() = default;
    explicit LineHyperoval(std::vector<PlaneLine> ls);

    bool contains(const PlaneLine& l) const;
    std::size_t size() const { return lines.size(); }
};

/// Throws WrongSize if the set does not have q + 2 elements.
bool is_hyperoval(const Presemifield& s, const Hyperoval& o);
bool is_hyperoval(const Presemifield& s, const LineHyperoval& o);

Hyperoval transform(const Presemifield& s, const Collineation& g, const Hyperoval& o);

/// {(x, f(x))} + {(0), (inf)}
Hyperoval type_a_hyperoval(const Presemifield& s, const LinearizedPoly& f);
/// {(f(y), y)} + {(0), (alpha)}
Hyperoval type_b_hyperoval(const Presemifield& s, const LinearizedPoly& f, FieldElement alpha);

/// {(x, x*x)} + {(0), (inf)}; throws NonCommutative.
Hyperoval standard_hyperoval(const Presemifield& s);
/// {(y^2 + y, y)} + {(0), (1)} in the Knuth plane.
Hyperoval og_hyperoval(const FieldContext& ctx);
/// {(y^(2^d) + y, y)} + {(0), (1)} in the plane of x o y; throws BadShift unless gcd(d, n) = 1, 0 < d < n.
Hyperoval od_hyperoval(const FieldContext& ctx, int d);

/// The map y -> m with (y^(2^d) + y) o m = y on GF(q) \ {0, 1}; 0 and 1 map to themselves.
FieldElement od_mu(const FieldContext& ctx, int d, FieldElement y);

/// {l_{m, adj(L)(m)}} + {l_0, l_inf} in the plane of x o y, without checking L.
LineHyperoval adjoint_line_set_a(const FieldContext& ctx, const LinearizedPoly& L);
/// {l_{adj(L)(m), m}} + {l_0, l_alpha} in the plane of x o y, without checking L.
LineHyperoval adjoint_line_set_b(const FieldContext& ctx, const LinearizedPoly& L, FieldElement alpha);

/// As above, after confirming L defines a type-(a) hyperoval in the Knuth plane; throws NotTypeA.
LineHyperoval dualize_type_a(const FieldContext& ctx, const LinearizedPoly& L);
/// As above for type (b) with carrier (alpha); throws NotTypeB.
LineHyperoval dualize_type_b(const FieldContext& ctx, const LinearizedPoly& L, FieldElement alpha);

/// Reads lines of the plane of s as points of the plane of its dual presemifield:
/// l_{m,b} -> (m, b), l_a -> (a), l_inf -> (inf).
Hyperoval dual_points(const LineHyperoval& lines);

} // namespace hyperovals
