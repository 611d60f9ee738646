#include <doctest.h>

#include <random>
#include <set>

#include "hyperovals/algebra.hpp"
#include "hyperovals/error.hpp"

using namespace hyperovals;

namespace {

// Size of the span of the rows, by enumerating all combinations.
std::uint64_t span_size(const std::vector<std::uint32_t>& rows) {
    std::set<std::uint32_t> span;
    for (std::uint32_t m = 0; m < (1u << rows.size()); ++m) {
        std::uint32_t v = 0;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if ((m >> i) & 1u) v ^= rows[i];
        span.insert(v);
    }
    return span.size();
}

LinearizedPoly random_poly(const FieldContext& ctx, std::mt19937& rng) {
    LinearizedPoly L(ctx.n());
    for (int i = 0; i < ctx.n(); ++i) L[i] = FieldElement{static_cast<std::uint32_t>(rng() % ctx.q())};
    return L;
}

} // namespace

TEST_CASE("gf2 rank agrees with the span size") {
    std::mt19937 rng(3);
    for (int t = 0; t < 300; ++t) {
        std::vector<std::uint32_t> rows(1 + rng() % 8);
        for (auto& r : rows) r = rng() % 64;
        if (t % 3 == 0) rows.push_back(rows[0] ^ rows.back());
        CHECK((std::uint64_t{1} << gf2_rank(rows)) == span_size(rows));
    }
}

TEST_CASE("bit matrices compose in application order and invert") {
    FieldContext ctx(7);
    std::mt19937 rng(5);
    for (int t = 0; t < 50; ++t) {
        const auto A = linpoly_matrix(ctx, random_poly(ctx, rng));
        const auto B = linpoly_matrix(ctx, random_poly(ctx, rng));
        for (std::uint32_t x = 0; x < ctx.q(); ++x) CHECK((A * B).apply(FieldElement{x}) == B.apply(A.apply(FieldElement{x})));
        CHECK(A.transpose().transpose() == A);
        if (A.rank() == 7) {
            CHECK(A * A.inverse() == BitMatrix::identity(7));
        } else {
            CHECK_THROWS_AS(A.inverse(), Error);
            std::uint64_t zeros = 0;
            for (std::uint32_t x = 0; x < ctx.q(); ++x) zeros += A.apply(FieldElement{x}).is_zero();
            CHECK(zeros == A.kernel_size());
            CHECK(A.kernel().size() == A.kernel_size());
        }
    }
}

TEST_CASE("linearized polynomials: evaluation, interpolation, adjoint") {
    for (int n : {3, 5, 7}) {
        FieldContext ctx(n);
        std::mt19937 rng(n);
        for (int t = 0; t < 40; ++t) {
            const auto L = random_poly(ctx, rng);
            std::vector<FieldElement> basis;
            for (int i = 0; i < n; ++i) basis.push_back(linpoly_eval(ctx, L, ctx.omega_pow(i)));
            CHECK(linpoly_interpolate(ctx, basis) == L);

            const auto A = adjoint(ctx, L);
            CHECK(adjoint(ctx, A) == L);
            for (int s = 0; s < 50; ++s) {
                const FieldElement x{static_cast<std::uint32_t>(rng() % ctx.q())}, y{static_cast<std::uint32_t>(rng() % ctx.q())};
                CHECK(ctx.trace(ctx.mul(x, linpoly_eval(ctx, L, y))) == ctx.trace(ctx.mul(linpoly_eval(ctx, A, x), y)));
                CHECK(linpoly_eval(ctx, L, x + y) == linpoly_eval(ctx, L, x) + linpoly_eval(ctx, L, y));
            }
            const auto a = linpoly_analyze(ctx, L);
            const auto b = linpoly_analyze(ctx, A);
            CHECK(a.kernel_size == b.kernel_size);
            CHECK(a.matrix.rank() == b.matrix.rank());
            std::uint64_t zeros = 0;
            for (std::uint32_t x = 0; x < ctx.q(); ++x) zeros += linpoly_eval(ctx, L, FieldElement{x}).is_zero();
            CHECK(zeros == a.kernel_size);
            CHECK((a.map_class == MapClass::Permutation) == (zeros == 1));
            CHECK((a.map_class == MapClass::TwoToOne) == (zeros == 2));
        }
    }
}

TEST_CASE("trace adjoint of a matrix") {
    FieldContext ctx(5);
    std::mt19937 rng(11);
    const auto M = linpoly_matrix(ctx, random_poly(ctx, rng));
    const auto A = trace_adjoint(ctx, M);
    for (std::uint32_t x = 0; x < ctx.q(); ++x)
        for (std::uint32_t y = 0; y < ctx.q(); ++y)
            CHECK(ctx.trace(ctx.mul(A.apply(FieldElement{x}), FieldElement{y})) == ctx.trace(ctx.mul(FieldElement{x}, M.apply(FieldElement{y}))));
}

TEST_CASE("Knuth multiplications follow their formulas") {
    for (int n : {3, 5, 9}) {
        FieldContext ctx(n);
        const auto k = Presemifield::knuth(ctx);
        const auto td = Presemifield::knuth_td(ctx);
        std::mt19937 rng(n);
        for (int t = 0; t < 500; ++t) {
            const FieldElement x{static_cast<std::uint32_t>(rng() % ctx.q())}, y{static_cast<std::uint32_t>(rng() % ctx.q())};
            FieldElement corr = kZero;
            if (ctx.trace(x)) corr = corr + y;
            if (ctx.trace(y)) corr = corr + x;
            CHECK(k.mul(x, y) == ctx.mul(x, y) + ctx.square(corr));
            FieldElement r = ctx.mul(x, y) + ctx.trace_elem(ctx.mul(ctx.square(x), y));
            if (ctx.trace(x)) r = r + ctx.sqrt(y);
            CHECK(td.mul(x, y) == r);
            CHECK(k.right_mul_matrix(y).apply(x) == k.mul(x, y));
            CHECK(td.left_mul_matrix(x).apply(y) == td.mul(x, y));
        }
    }
}

TEST_CASE("axioms of the Knuth presemifields and their derivatives") {
    FieldContext ctx(5);
    const auto k = Presemifield::knuth(ctx);
    const auto t = derive_presemifield(k, Derivation::Transpose);
    const auto td = derive_presemifield(t, Derivation::Dual);
    const auto explicit_td = Presemifield::knuth_td(ctx);
    CHECK(t.name() == "kn_t");
    CHECK(td.name() == "kn_t_d");

    for (const auto* s : {&k, &t, &td, &explicit_td}) {
        const auto r = verify_presemifield(*s, false);
        CHECK(r.ok());
        CHECK(r.frobenius_autotopism);
        CHECK(s->frobenius_autotopism());
    }
    CHECK(verify_presemifield(k, false).commutative);
    CHECK_FALSE(verify_presemifield(explicit_td, false).commutative);
    CHECK(verify_presemifield(td, true).ok());
    CHECK(verify_presemifield(explicit_td, true).ok());
    CHECK_FALSE(*verify_presemifield(k, true).symplectic);

    for (std::uint32_t x = 0; x < ctx.q(); ++x)
        for (std::uint32_t y = 0; y < ctx.q(); ++y) {
            const FieldElement a{x}, b{y};
            CHECK(td.mul(a, b) == explicit_td.mul(a, b));
            // Transpose is the trace adjoint of each right multiplication.
            for (std::uint32_t z = 0; z < ctx.q(); z += 7)
                CHECK(ctx.trace(ctx.mul(t.mul(a, FieldElement{z}), b)) == ctx.trace(ctx.mul(a, k.mul(b, FieldElement{z}))));
        }
    CHECK_THROWS_AS(verify_presemifield(Presemifield::knuth(FieldContext(9)), false), Error);
}

TEST_CASE("degenerate matrix families are rejected") {
    FieldContext ctx(3);
    std::vector<BitMatrix> mats(ctx.q(), BitMatrix::identity(3));
    mats[0] = BitMatrix(3);
    const auto s = Presemifield::from_matrices(ctx, mats, "bad");
    const auto r = verify_presemifield(s, false);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.failures.empty());
    mats.pop_back();
    CHECK_THROWS_AS(Presemifield::from_matrices(ctx, mats, "short"), Error);
}
