#include "hyperovals/ovals.hpp"

#include <algorithm>
#include <numeric>

#include "hyperovals/search.hpp"

namespace hyperovals {

Hyperoval::Hyperoval(std::vector<PlanePoint> pts) : points(std::move(pts)) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

bool Hyperoval::contains(const PlanePoint& p) const {
    return std::binary_search(points.begin(), points.end(), p);
}

LineHyperoval::LineHyperoval(std::vector<PlaneLine> ls) : lines(std::move(ls)) {
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
}

bool LineHyperoval::contains(const PlaneLine& l) const {
    return std::binary_search(lines.begin(), lines.end(), l);
}

bool is_hyperoval(const Presemifield& s, const Hyperoval& o) {
    const std::uint32_t q = s.ctx().q();
    if (o.size() != q + 2)
        throw Error(ErrorCode::WrongSize, "hyperoval has " + std::to_string(o.size()) + " points, expected " + std::to_string(q + 2));
    const auto counts = line_counts(s, o.points);
    return std::all_of(counts.begin(), counts.end(), [](std::uint32_t c) { return c == 0 || c == 2; });
}

bool is_hyperoval(const Presemifield& s, const LineHyperoval& o) {
    const std::uint32_t q = s.ctx().q();
    if (o.size() != q + 2)
        throw Error(ErrorCode::WrongSize, "line hyperoval has " + std::to_string(o.size()) + " lines, expected " + std::to_string(q + 2));
    std::vector<std::uint32_t> counts(plane_size(q), 0);
    for (const auto& l : o.lines)
        for (const auto& p : points_on(s, l)) ++counts[p.code(q)];
    return std::all_of(counts.begin(), counts.end(), [](std::uint32_t c) { return c == 0 || c == 2; });
}

Hyperoval transform(const Presemifield& s, const Collineation& g, const Hyperoval& o) {
    std::vector<PlanePoint> pts;
    pts.reserve(o.size());
    for (const auto& p : o.points) pts.push_back(apply(s, g, p));
    return Hyperoval(std::move(pts));
}

Hyperoval type_a_hyperoval(const Presemifield& s, const LinearizedPoly& f) {
    const FieldContext& ctx = s.ctx();
    std::vector<PlanePoint> pts{PlanePoint::infinity(), PlanePoint::at_infinity(kZero)};
    for (std::uint32_t x = 0; x < ctx.q(); ++x) pts.push_back(PlanePoint::affine(FieldElement{x}, linpoly_eval(ctx, f, FieldElement{x})));
    return Hyperoval(std::move(pts));
}

Hyperoval type_b_hyperoval(const Presemifield& s, const LinearizedPoly& f, FieldElement alpha) {
    const FieldContext& ctx = s.ctx();
    std::vector<PlanePoint> pts{PlanePoint::at_infinity(kZero), PlanePoint::at_infinity(alpha)};
    for (std::uint32_t y = 0; y < ctx.q(); ++y) pts.push_back(PlanePoint::affine(linpoly_eval(ctx, f, FieldElement{y}), FieldElement{y}));
    return Hyperoval(std::move(pts));
}

Hyperoval standard_hyperoval(const Presemifield& s) {
    const FieldContext& ctx = s.ctx();
    bool commutative = s.kind() == PresemifieldKind::KnuthKn;
    if (s.kind() == PresemifieldKind::MatrixFamily) {
        commutative = true;
        for (std::uint32_t x = 0; x < ctx.q() && commutative; ++x)
            for (std::uint32_t y = 0; y < x; ++y)
                if (s.mul(FieldElement{x}, FieldElement{y}) != s.mul(FieldElement{y}, FieldElement{x})) {
                    commutative = false;
                    break;
                }
    }
    if (!commutative) throw Error(ErrorCode::NonCommutative, s.name() + " is not commutative");
    std::vector<PlanePoint> pts{PlanePoint::infinity(), PlanePoint::at_infinity(kZero)};
    for (std::uint32_t x = 0; x < ctx.q(); ++x) {
        const FieldElement fx{x};
        pts.push_back(PlanePoint::affine(fx, s.mul(fx, fx)));
    }
    return Hyperoval(std::move(pts));
}

Hyperoval og_hyperoval(const FieldContext& ctx) {
    std::vector<PlanePoint> pts{PlanePoint::at_infinity(kZero), PlanePoint::at_infinity(kOne)};
    for (std::uint32_t y = 0; y < ctx.q(); ++y) {
        const FieldElement fy{y};
        pts.push_back(PlanePoint::affine(ctx.square(fy) + fy, fy));
    }
    return Hyperoval(std::move(pts));
}

namespace {

void check_shift(const FieldContext& ctx, int d) {
    if (d <= 0 || d >= ctx.n() || std::gcd(d, ctx.n()) != 1)
        throw Error(ErrorCode::BadShift, "d = " + std::to_string(d) + " is not a unit modulo n = " + std::to_string(ctx.n()));
}

} // namespace

Hyperoval od_hyperoval(const FieldContext& ctx, int d) {
    check_shift(ctx, d);
    std::vector<PlanePoint> pts{PlanePoint::at_infinity(kZero), PlanePoint::at_infinity(kOne)};
    for (std::uint32_t y = 0; y < ctx.q(); ++y) {
        const FieldElement fy{y};
        pts.push_back(PlanePoint::affine(ctx.frob(fy, d) + fy, fy));
    }
    return Hyperoval(std::move(pts));
}

FieldElement od_mu(const FieldContext& ctx, int d, FieldElement y) {
    check_shift(ctx, d);
    if (y == kZero || y == kOne) return y;
    const FieldElement g = ctx.frob(y, d) + y;
    const FieldElement num = ctx.trace(ctx.mul(g, y)) ? y + kOne : y;
    return ctx.mul(num, ctx.inv(g));
}

LineHyperoval adjoint_line_set_a(const FieldContext& ctx, const LinearizedPoly& L) {
    const LinearizedPoly adj = adjoint(ctx, L);
    std::vector<PlaneLine> lines{PlaneLine::vertical(kZero), PlaneLine::at_infinity()};
    for (std::uint32_t m = 0; m < ctx.q(); ++m) {
        const FieldElement fm{m};
        lines.push_back(PlaneLine::sloped(fm, linpoly_eval(ctx, adj, fm)));
    }
    return LineHyperoval(std::move(lines));
}

LineHyperoval adjoint_line_set_b(const FieldContext& ctx, const LinearizedPoly& L, FieldElement alpha) {
    const LinearizedPoly adj = adjoint(ctx, L);
    std::vector<PlaneLine> lines{PlaneLine::vertical(kZero), PlaneLine::vertical(alpha)};
    for (std::uint32_t m = 0; m < ctx.q(); ++m) {
        const FieldElement fm{m};
        lines.push_back(PlaneLine::sloped(linpoly_eval(ctx, adj, fm), fm));
    }
    return LineHyperoval(std::move(lines));
}

LineHyperoval dualize_type_a(const FieldContext& ctx, const LinearizedPoly& L) {
    if (!check_type_a(Presemifield::knuth(ctx), L))
        throw Error(ErrorCode::NotTypeA, "polynomial does not define a type-(a) hyperoval in the Knuth plane");
    return adjoint_line_set_a(ctx, L);
}

LineHyperoval dualize_type_b(const FieldContext& ctx, const LinearizedPoly& L, FieldElement alpha) {
    const auto found = check_type_b(Presemifield::knuth(ctx), L);
    if (!found || *found != alpha)
        throw Error(ErrorCode::NotTypeB, "polynomial and carrier do not define a type-(b) hyperoval in the Knuth plane");
    return adjoint_line_set_b(ctx, L, alpha);
}

Hyperoval dual_points(const LineHyperoval& lines) {
    std::vector<PlanePoint> pts;
    for (const auto& l : lines.lines) {
        switch (l.kind) {
        case PlaneLine::Kind::AtInfinity: pts.push_back(PlanePoint::infinity()); break;
        case PlaneLine::Kind::Vertical: pts.push_back(PlanePoint::at_infinity(l.a)); break;
        case PlaneLine::Kind::Sloped: pts.push_back(PlanePoint::affine(l.a, l.b)); break;
        }
    }
    return Hyperoval(std::move(pts));
}

} // namespace hyperovals
