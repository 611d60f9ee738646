#include "hyperovals/plane.hpp"

namespace hyperovals {

std::uint32_t PlanePoint::code(std::uint32_t q) const {
    switch (kind) {
    case Kind::Infinity: return 0;
    case Kind::AtInfinity: return 1 + x.bits;
    case Kind::Affine: return 1 + q + x.bits * q + y.bits;
    }
    return 0;
}

PlanePoint PlanePoint::from_code(std::uint32_t code, std::uint32_t q) {
    if (code == 0) return infinity();
    if (code <= q) return at_infinity(FieldElement{code - 1});
    const std::uint32_t r = code - 1 - q;
    if (r >= q * q) throw Error(ErrorCode::BadInput, "point code out of range");
    return affine(FieldElement{r / q}, FieldElement{r % q});
}

std::uint32_t PlaneLine::code(std::uint32_t q) const {
    switch (kind) {
    case Kind::AtInfinity: return 0;
    case Kind::Vertical: return 1 + a.bits;
    case Kind::Sloped: return 1 + q + a.bits * q + b.bits;
    }
    return 0;
}

PlaneLine PlaneLine::from_code(std::uint32_t code, std::uint32_t q) {
    if (code == 0) return at_infinity();
    if (code <= q) return vertical(FieldElement{code - 1});
    const std::uint32_t r = code - 1 - q;
    if (r >= q * q) throw Error(ErrorCode::BadInput, "line code out of range");
    return sloped(FieldElement{r / q}, FieldElement{r % q});
}

bool incident(const Presemifield& s, const PlanePoint& p, const PlaneLine& l) {
    using PK = PlanePoint::Kind;
    using LK = PlaneLine::Kind;
    switch (l.kind) {
    case LK::AtInfinity: return p.kind != PK::Affine;
    case LK::Vertical: return p.kind == PK::Infinity || (p.kind == PK::Affine && p.x == l.a);
    case LK::Sloped:
        if (p.kind == PK::AtInfinity) return p.x == l.a;
        if (p.kind == PK::Affine) return p.y == s.mul(p.x, l.a) + l.b;
        return false;
    }
    return false;
}

std::vector<PlanePoint> points_on(const Presemifield& s, const PlaneLine& l) {
    const std::uint32_t q = s.ctx().q();
    std::vector<PlanePoint> pts;
    pts.reserve(q + 1);
    switch (l.kind) {
    case PlaneLine::Kind::AtInfinity:
        pts.push_back(PlanePoint::infinity());
        for (std::uint32_t z = 0; z < q; ++z) pts.push_back(PlanePoint::at_infinity(FieldElement{z}));
        break;
    case PlaneLine::Kind::Vertical:
        pts.push_back(PlanePoint::infinity());
        for (std::uint32_t y = 0; y < q; ++y) pts.push_back(PlanePoint::affine(l.a, FieldElement{y}));
        break;
    case PlaneLine::Kind::Sloped:
        pts.push_back(PlanePoint::at_infinity(l.a));
        for (std::uint32_t x = 0; x < q; ++x) pts.push_back(PlanePoint::affine(FieldElement{x}, s.mul(FieldElement{x}, l.a) + l.b));
        break;
    }
    return pts;
}

std::vector<PlaneLine> lines_through(const Presemifield& s, const PlanePoint& p) {
    const std::uint32_t q = s.ctx().q();
    std::vector<PlaneLine> lines;
    lines.reserve(q + 1);
    switch (p.kind) {
    case PlanePoint::Kind::Infinity:
        lines.push_back(PlaneLine::at_infinity());
        for (std::uint32_t a = 0; a < q; ++a) lines.push_back(PlaneLine::vertical(FieldElement{a}));
        break;
    case PlanePoint::Kind::AtInfinity:
        lines.push_back(PlaneLine::at_infinity());
        for (std::uint32_t b = 0; b < q; ++b) lines.push_back(PlaneLine::sloped(p.x, FieldElement{b}));
        break;
    case PlanePoint::Kind::Affine:
        lines.push_back(PlaneLine::vertical(p.x));
        for (std::uint32_t a = 0; a < q; ++a) {
            const FieldElement fa{a};
            lines.push_back(PlaneLine::sloped(fa, p.y + s.mul(p.x, fa)));
        }
        break;
    }
    return lines;
}

PlaneLine line_through(const Presemifield& s, const PlanePoint& p, const PlanePoint& r) {
    using K = PlanePoint::Kind;
    if (p == r) throw Error(ErrorCode::BadInput, "line_through needs distinct points");
    if (p.kind != K::Affine && r.kind != K::Affine) return PlaneLine::at_infinity();
    const PlanePoint& u = p.kind == K::Affine ? r : p; // possibly non-affine
    const PlanePoint& v = p.kind == K::Affine ? p : r; // affine
    if (u.kind == K::Infinity) return PlaneLine::vertical(v.x);
    if (u.kind == K::AtInfinity) return PlaneLine::sloped(u.x, v.y + s.mul(v.x, u.x));
    if (u.x == v.x) return PlaneLine::vertical(u.x);
    // Solve (u.x + v.x) * a = u.y + v.y for the slope a.
    const BitMatrix left = s.left_mul_matrix(u.x + v.x);
    const FieldElement a = left.inverse().apply(u.y + v.y);
    return PlaneLine::sloped(a, v.y + s.mul(v.x, a));
}

PlanePoint meet(const Presemifield& s, const PlaneLine& l, const PlaneLine& m) {
    using K = PlaneLine::Kind;
    if (l == m) throw Error(ErrorCode::BadInput, "meet needs distinct lines");
    if (l.kind != K::Sloped && m.kind != K::Sloped) return PlanePoint::infinity();
    const PlaneLine& u = l.kind == K::Sloped ? m : l;
    const PlaneLine& v = l.kind == K::Sloped ? l : m;
    if (u.kind == K::AtInfinity) return PlanePoint::at_infinity(v.a);
    if (u.kind == K::Vertical) return PlanePoint::affine(u.a, s.mul(u.a, v.a) + v.b);
    if (u.a == v.a) return PlanePoint::at_infinity(u.a);
    // x * (u.a + v.a) = u.b + v.b
    const FieldElement x = s.right_mul_matrix(u.a + v.a).inverse().apply(u.b + v.b);
    return PlanePoint::affine(x, s.mul(x, u.a) + u.b);
}

namespace {

void require_frobenius(const Presemifield& s, int k) {
    if (k % s.ctx().n() != 0 && !s.frobenius_autotopism())
        throw Error(ErrorCode::BadInput, "Frobenius is not an autotopism of " + s.name());
}

} // namespace

PlanePoint apply(const Presemifield& s, const Collineation& g, const PlanePoint& p) {
    const FieldContext& ctx = s.ctx();
    require_frobenius(s, g.k);
    switch (p.kind) {
    case PlanePoint::Kind::Infinity: return p;
    case PlanePoint::Kind::AtInfinity: return PlanePoint::at_infinity(ctx.frob(p.x + g.c, g.k));
    case PlanePoint::Kind::Affine: {
        const FieldElement x = p.x + g.a;
        const FieldElement y = p.y + g.b + s.mul(x, g.c);
        return PlanePoint::affine(ctx.frob(x, g.k), ctx.frob(y, g.k));
    }
    }
    return p;
}

PlaneLine apply(const Presemifield& s, const Collineation& g, const PlaneLine& l) {
    switch (l.kind) {
    case PlaneLine::Kind::AtInfinity: return l;
    case PlaneLine::Kind::Vertical: {
        const PlanePoint p = apply(s, g, PlanePoint::affine(l.a, kZero));
        return PlaneLine::vertical(p.x);
    }
    case PlaneLine::Kind::Sloped: {
        const PlanePoint z = apply(s, g, PlanePoint::at_infinity(l.a));
        const PlanePoint p = apply(s, g, PlanePoint::affine(kZero, l.b));
        return PlaneLine::sloped(z.x, p.y + s.mul(p.x, z.x));
    }
    }
    return l;
}

Collineation compose(const Presemifield& s, const Collineation& g, const Collineation& h) {
    const FieldContext& ctx = s.ctx();
    const int n = ctx.n();
    require_frobenius(s, g.k);
    require_frobenius(s, h.k);
    // Pull g's parameters back through h's Frobenius power.
    const FieldElement a = ctx.frob(g.a, n - h.k);
    const FieldElement b = ctx.frob(g.b, n - h.k);
    const FieldElement c = ctx.frob(g.c, n - h.k);
    Collineation r;
    r.k = (g.k + h.k) % n;
    r.a = h.a + a;
    r.c = h.c + c;
    r.b = h.b + b + s.mul(a, h.c);
    return r;
}

Collineation invert(const Presemifield& s, const Collineation& g) {
    const FieldContext& ctx = s.ctx();
    const int n = ctx.n();
    require_frobenius(s, g.k);
    Collineation r;
    r.k = (n - g.k) % n;
    r.a = ctx.frob(g.a, g.k);
    r.c = ctx.frob(g.c, g.k);
    r.b = ctx.frob(g.b + s.mul(g.a, g.c), g.k);
    return r;
}

std::uint64_t aut_group_order(const Presemifield& s) {
    const std::uint64_t q = s.ctx().q();
    return q * q * q * (s.frobenius_autotopism() ? static_cast<std::uint64_t>(s.ctx().n()) : 1u);
}

Collineation aut_element(const Presemifield& s, std::uint64_t index) {
    const std::uint64_t q = s.ctx().q();
    Collineation g;
    g.b = FieldElement{static_cast<std::uint32_t>(index % q)};
    index /= q;
    g.a = FieldElement{static_cast<std::uint32_t>(index % q)};
    index /= q;
    g.c = FieldElement{static_cast<std::uint32_t>(index % q)};
    g.k = static_cast<int>(index / q);
    return g;
}

std::vector<std::uint32_t> line_counts(const Presemifield& s, const std::vector<PlanePoint>& pts) {
    const std::uint32_t q = s.ctx().q();
    std::vector<std::uint32_t> counts(plane_size(q), 0);
    for (const auto& p : pts)
        for (const auto& l : lines_through(s, p)) ++counts[l.code(q)];
    return counts;
}

std::vector<PlaneLine> secants(const Presemifield& s, const std::vector<PlanePoint>& pts) {
    const std::uint32_t q = s.ctx().q();
    const auto counts = line_counts(s, pts);
    std::vector<PlaneLine> out;
    for (std::uint32_t code = 0; code < counts.size(); ++code)
        if (counts[code] == 2) out.push_back(PlaneLine::from_code(code, q));
    return out;
}

} // namespace hyperovals
