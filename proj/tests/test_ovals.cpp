#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "hyperovals/error.hpp"
#include "hyperovals/search.hpp"

using namespace hyperovals;

TEST_CASE("standard hyperoval and the Knuth families") {
    for (int n : {3, 5, 7}) {
        FieldContext ctx(n);
        const auto k = Presemifield::knuth(ctx);
        const auto o = standard_hyperoval(k);
        CHECK(o.size() == ctx.q() + 2);
        CHECK(is_hyperoval(k, o));
        CHECK(o.contains(PlanePoint::infinity()));
        CHECK_THROWS_AS(standard_hyperoval(Presemifield::knuth_td(ctx)), Error);
    }
    for (int n : {5, 7, 9, 11}) {
        FieldContext ctx(n);
        CHECK(is_hyperoval(Presemifield::knuth(ctx), og_hyperoval(ctx)));
    }
    for (int n : {5, 7}) {
        FieldContext ctx(n);
        const auto td = Presemifield::knuth_td(ctx);
        for (int d = 1; d < n; ++d)
            if (std::gcd(d, n) == 1) CHECK(is_hyperoval(td, od_hyperoval(ctx, d)));
    }
    FieldContext ctx9(9);
    CHECK_THROWS_AS(od_hyperoval(ctx9, 3), Error);
    CHECK_THROWS_AS(od_hyperoval(ctx9, 0), Error);
    CHECK_THROWS_AS(od_hyperoval(ctx9, 9), Error);
}

TEST_CASE("a non-hyperoval is rejected and sizes are checked") {
    FieldContext ctx(5);
    const auto k = Presemifield::knuth(ctx);
    auto o = standard_hyperoval(k);
    auto pts = o.points;
    pts.back() = PlanePoint::affine(pts.back().x, pts.back().y + kOne);
    CHECK_FALSE(is_hyperoval(k, Hyperoval(pts)));
    pts.pop_back();
    CHECK_THROWS_AS(is_hyperoval(k, Hyperoval(pts)), Error);
}

TEST_CASE("the O_d map mu is a permutation solving the defining equation") {
    for (int n : {5, 7, 9, 11}) {
        FieldContext ctx(n);
        const auto td = Presemifield::knuth_td(ctx);
        for (int d = 1; d < n; ++d) {
            if (std::gcd(d, n) != 1) continue;
            std::vector<bool> seen(ctx.q(), false);
            for (std::uint32_t y = 0; y < ctx.q(); ++y) {
                const FieldElement e{y};
                const FieldElement m = od_mu(ctx, d, e);
                REQUIRE_FALSE(seen[m.bits]);
                seen[m.bits] = true;
                if (y > 1) REQUIRE(td.mul(ctx.frob(e, d) + e, m) == e);
            }
            if (n > 7) break;
        }
    }
}

TEST_CASE("type conditions agree with the hyperoval check") {
    FieldContext ctx(5);
    const auto k = Presemifield::knuth(ctx);
    std::mt19937 rng(17);
    int positives = 0;
    for (int t = 0; t < 400; ++t) {
        LinearizedPoly L(5);
        for (int i = 0; i < 5; ++i) L[i] = (rng() % 3) ? kZero : FieldElement{static_cast<std::uint32_t>(rng() % 32)};
        if (t % 50 == 0) L = LinearizedPoly::monomial(5, 1);
        const bool a = check_type_a(k, L);
        CHECK(a == is_hyperoval(k, type_a_hyperoval(k, L)));
        positives += a;
        const auto alpha = check_type_b(k, L);
        if (alpha) CHECK(is_hyperoval(k, type_b_hyperoval(k, L, *alpha)));
    }
    CHECK(positives > 0);
}

TEST_CASE("line hyperovals in the plane of x o y") {
    for (int n : {5, 7}) {
        FieldContext ctx(n);
        const auto td = Presemifield::knuth_td(ctx);
        const auto sq = LinearizedPoly::monomial(n, 1);
        const auto a = adjoint_line_set_a(ctx, sq);
        const auto b = adjoint_line_set_b(ctx, sq + LinearizedPoly::monomial(n, 0), kOne);
        CHECK(is_hyperoval(td, a));
        CHECK(is_hyperoval(td, b));
        // {l_(m^2, m)} + {l_0, l_inf}
        std::vector<PlaneLine> direct{PlaneLine::at_infinity(), PlaneLine::vertical(kZero)};
        for (std::uint32_t m = 0; m < ctx.q(); ++m) direct.push_back(PlaneLine::sloped(ctx.square(FieldElement{m}), FieldElement{m}));
        CHECK(LineHyperoval(direct).lines == a.lines);
        CHECK(is_hyperoval(td, dualize_type_a(ctx, sq)));
        CHECK_THROWS_AS(dualize_type_a(ctx, LinearizedPoly::monomial(n, 0)), Error);
        CHECK_THROWS_AS(dualize_type_b(ctx, sq, kOne), Error);
    }
}

TEST_CASE("dual points of a line hyperoval form a hyperoval of the dual plane") {
    FieldContext ctx(5);
    const auto td = Presemifield::knuth_td(ctx);
    const auto dual = derive_presemifield(td, Derivation::Dual);
    for (const auto table : {ReferenceTable::KnuthTypeA, ReferenceTable::KnuthTypeB}) {
        for (const auto& row : reference_rows(ctx, table)) {
            const auto lines = table == ReferenceTable::KnuthTypeA ? dualize_type_a(ctx, row.coeffs) : dualize_type_b(ctx, row.coeffs, *row.alpha);
            CHECK(is_hyperoval(td, lines));
            const auto pts = dual_points(lines);
            CHECK(is_hyperoval(dual, pts));
        }
    }
}

TEST_CASE("transform keeps a hyperoval a hyperoval") {
    FieldContext ctx(5);
    const auto k = Presemifield::knuth(ctx);
    const auto o = og_hyperoval(ctx);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
        const auto g = aut_element(k, rng() % aut_group_order(k));
        CHECK(is_hyperoval(k, transform(k, g, o)));
    }
}
