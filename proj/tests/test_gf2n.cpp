#include <doctest.h>

#include <random>

#include "hyperovals/error.hpp"
#include "hyperovals/gf2n.hpp"

using namespace hyperovals;

namespace {

// Schoolbook product mod the modulus, independent of the log tables.
std::uint32_t slow_product(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, int n) {
    std::uint32_t r = 0;
    for (int i = 0; i < n; ++i)
        if ((b >> i) & 1u) r ^= a << i;
    for (int i = 2 * n - 2; i >= n; --i)
        if ((r >> i) & 1u) r ^= modulus << (i - n);
    return r;
}

} // namespace

TEST_CASE("default moduli are primitive and the degree is validated") {
    for (int n = 3; n <= 21; n += 2) {
        FieldContext ctx(n);
        CHECK(ctx.q() == (1u << n));
        CHECK(ctx.omega_pow(ctx.q() - 1) == kOne);
        for (std::uint32_t k = 1; k < ctx.q() - 1 && n <= 11; ++k) CHECK(ctx.omega_pow(k) != kOne);
    }
    CHECK_THROWS_AS(FieldContext(4), Error);
    CHECK_THROWS_AS(FieldContext(23), Error);
    CHECK_THROWS_AS(FieldContext(1), Error);
    try {
        FieldContext(6);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EvenDegree);
    }
    // x^5 + x^4 + x^3 + x^2 + x + 1 is reducible.
    CHECK_THROWS_AS(FieldContext(5, 0x3f), Error);
    // x^5 + x^3 + 1 is another primitive choice.
    CHECK_NOTHROW(FieldContext(5, 0x29));
}

TEST_CASE("multiplication matches schoolbook arithmetic and satisfies the field axioms") {
    for (int n : {3, 5, 7}) {
        FieldContext ctx(n);
        const std::uint32_t q = ctx.q();
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                const auto p = ctx.mul(FieldElement{a}, FieldElement{b});
                REQUIRE(p.bits == slow_product(a, b, ctx.modulus(), n));
                REQUIRE(p == ctx.mul(FieldElement{b}, FieldElement{a}));
            }
        const std::uint32_t step = n == 7 ? 5 : 1;
        for (std::uint32_t a = 0; a < q; a += step)
            for (std::uint32_t b = 0; b < q; ++b)
                for (std::uint32_t c = 0; c < q; c += step) {
                    const FieldElement x{a}, y{b}, z{c};
                    REQUIRE(ctx.mul(ctx.mul(x, y), z) == ctx.mul(x, ctx.mul(y, z)));
                    REQUIRE(ctx.mul(x, y + z) == ctx.mul(x, y) + ctx.mul(x, z));
                }
    }
}

TEST_CASE("inverse agrees with a brute-force search") {
    for (int n : {3, 5, 7, 9}) {
        FieldContext ctx(n);
        for (std::uint32_t a = 1; a < ctx.q(); ++a) {
            const FieldElement x{a};
            const FieldElement y = ctx.inv(x);
            CHECK(ctx.mul(x, y) == kOne);
        }
        if (n <= 5)
            for (std::uint32_t a = 1; a < ctx.q(); ++a) {
                int hits = 0;
                for (std::uint32_t b = 1; b < ctx.q(); ++b) hits += ctx.mul(FieldElement{a}, FieldElement{b}) == kOne;
                CHECK(hits == 1);
            }
        CHECK_THROWS_AS(ctx.inv(kZero), Error);
    }
}

TEST_CASE("trace is the sum of conjugates, linear and balanced") {
    for (int n : {3, 5, 7, 9, 11}) {
        FieldContext ctx(n);
        CHECK(ctx.trace(kOne) == 1);
        std::uint32_t zeros = 0;
        for (std::uint32_t a = 0; a < ctx.q(); ++a) {
            const FieldElement x{a};
            FieldElement sum = kZero;
            FieldElement c = x;
            for (int i = 0; i < n; ++i) {
                sum = sum + c;
                c = ctx.square(c);
            }
            REQUIRE((sum == kZero || sum == kOne));
            REQUIRE(ctx.trace(x) == static_cast<int>(sum.bits));
            REQUIRE(ctx.trace(ctx.square(x)) == ctx.trace(x));
            zeros += ctx.trace(x) == 0;
        }
        CHECK(zeros == ctx.q() / 2);
        std::mt19937 rng(7);
        for (int t = 0; t < 200; ++t) {
            const FieldElement x{static_cast<std::uint32_t>(rng() % ctx.q())}, y{static_cast<std::uint32_t>(rng() % ctx.q())};
            CHECK(ctx.trace(x + y) == (ctx.trace(x) ^ ctx.trace(y)));
        }
    }
}

TEST_CASE("frobenius and square roots") {
    FieldContext ctx(7);
    for (std::uint32_t a = 0; a < ctx.q(); ++a) {
        const FieldElement x{a};
        CHECK(ctx.frob(x, 0) == x);
        CHECK(ctx.frob(x, 1) == ctx.square(x));
        CHECK(ctx.frob(x, ctx.n()) == x);
        for (int k = 0; k < ctx.n(); ++k) CHECK(ctx.frob(ctx.frob(x, k), ctx.n() - k) == x);
        CHECK(ctx.square(ctx.sqrt(x)) == x);
        CHECK(ctx.frob(x, -1) == ctx.sqrt(x));
        const FieldElement y{(a * 37 + 11) % ctx.q()};
        CHECK(ctx.frob(ctx.mul(x, y), 3) == ctx.mul(ctx.frob(x, 3), ctx.frob(y, 3)));
    }
}

TEST_CASE("cubic root counts match brute force for every t") {
    for (int n : {3, 5, 7, 9, 11}) {
        FieldContext ctx(n);
        std::vector<int> brute(ctx.q(), 0);
        for (std::uint32_t a = 0; a < ctx.q(); ++a) {
            const FieldElement x{a};
            ++brute[(ctx.mul(ctx.square(x), x) + x).bits];
        }
        int total = 0;
        for (std::uint32_t t = 0; t < ctx.q(); ++t) {
            const FieldElement e{t};
            const int c = ctx.dickson3_count(e);
            REQUIRE(c == brute[t]);
            REQUIRE((c == 1) == ctx.dickson3_unique_root(e));
            total += c;
        }
        CHECK(total == static_cast<int>(ctx.q()));
        CHECK(ctx.dickson3_count(kZero) == 2);
        CHECK(ctx.dickson3_count_by_trace(kZero) == 2);
    }
}

TEST_CASE("the trace formula is wrong outside the single-root case") {
    // t = 1 at n = 3: x^3 + x + 1 is the modulus, so it has three roots, not two.
    FieldContext ctx(3);
    CHECK(ctx.dickson3_count(kOne) == 3);
    CHECK(ctx.dickson3_count_by_trace(kOne) == 2);
    int zero_root_values = 0;
    for (std::uint32_t t = 0; t < ctx.q(); ++t) zero_root_values += ctx.dickson3_count(FieldElement{t}) == 0;
    CHECK(zero_root_values > 0);
}

TEST_CASE("text forms") {
    FieldContext ctx(5);
    CHECK(FieldContext::to_hex(kZero) == "0");
    CHECK(FieldContext::to_hex(FieldElement{0x1f}) == "1f");
    CHECK(ctx.to_omega(kZero) == "0");
    CHECK(ctx.to_omega(kOne) == "1");
    CHECK(ctx.to_omega(ctx.omega()) == "ω");
    CHECK(ctx.to_omega(ctx.omega_pow(7)) == "ω^7");
    CHECK(ctx.log(ctx.omega_pow(19)) == 19);
}
