#include "hyperovals/gf2n.hpp"

#include <array>
#include <vector>

#include <bit>

namespace hyperovals {

namespace {

// Lowest primitive polynomial of each odd degree (as an integer mask).
constexpr std::uint32_t kDefaultModuli[] = {
    0xb,      // 3
    0x25,     // 5: x^5 + x^2 + 1
    0x83,     // 7
    0x211,    // 9
    0x805,    // 11
    0x201b,   // 13
    0x8003,   // 15
    0x20009,  // 17
    0x80027,  // 19
    0x200005, // 21
};

void check_degree(int n) {
    if (n % 2 == 0)
        throw Error(ErrorCode::EvenDegree, "n = " + std::to_string(n) + " is even");
    if (n < FieldContext::kMinDegree || n > FieldContext::kMaxDegree)
        throw Error(ErrorCode::UnsupportedDegree, "n = " + std::to_string(n) + " outside [3, 21]");
}

} // namespace

std::uint32_t default_modulus(int n) {
    check_degree(n);
    return kDefaultModuli[(n - 3) / 2];
}

FieldContext::FieldContext(int n, std::optional<std::uint32_t> modulus) : n_(n) {
    check_degree(n);
    q_ = std::uint32_t{1} << n;
    modulus_ = modulus.value_or(default_modulus(n));
    if (std::bit_width(modulus_) != static_cast<unsigned>(n) + 1)
        throw Error(ErrorCode::NonPrimitiveModulus, "modulus " + to_hex(FieldElement{modulus_}) + " does not have degree " + std::to_string(n));

    // Walk the powers of w; the modulus is primitive iff w first returns to 1 at q-1.
    auto tables = std::make_shared<Tables>();
    tables->exp.resize(2 * (q_ - 1));
    tables->log.assign(q_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        if (i > 0 && x == 1)
            throw Error(ErrorCode::NonPrimitiveModulus, "w has order " + std::to_string(i) + " modulo " + to_hex(FieldElement{modulus_}));
        tables->exp[i] = x;
        tables->log[x] = i;
        x <<= 1;
        if (x & q_) x ^= modulus_;
    }
    if (x != 1)
        throw Error(ErrorCode::NonPrimitiveModulus, "modulus " + to_hex(FieldElement{modulus_}) + " is not primitive");
    for (std::uint32_t i = 0; i < q_ - 1; ++i) tables->exp[i + q_ - 1] = tables->exp[i];
    tables_ = std::move(tables);

    for (int i = 0; i < n_; ++i) {
        FieldElement b{std::uint32_t{1} << i};
        FieldElement t = b;
        FieldElement acc = b;
        for (int k = 1; k < n_; ++k) {
            t = mul(t, t);
            acc += t;
        }
        if (acc.bits & 1) trace_mask_ |= std::uint32_t{1} << i;
    }
}

FieldElement FieldContext::element(std::uint32_t bits) const {
    if (bits >= q_) throw Error(ErrorCode::BadInput, "element " + to_hex(FieldElement{bits}) + " out of range");
    return FieldElement{bits};
}

FieldElement FieldContext::omega_pow(std::int64_t k) const {
    const std::int64_t order = q_ - 1;
    k %= order;
    if (k < 0) k += order;
    return FieldElement{tables_->exp[static_cast<std::size_t>(k)]};
}

std::uint32_t FieldContext::log(FieldElement x) const {
    if (x.is_zero()) throw Error(ErrorCode::InvertZero, "log of zero");
    return tables_->log[x.bits];
}

std::uint32_t FieldContext::slow_mul(std::uint32_t x, std::uint32_t y) const {
    std::uint32_t r = 0;
    while (y) {
        if (y & 1) r ^= x;
        y >>= 1;
        x <<= 1;
        if (x & q_) x ^= modulus_;
    }
    return r;
}

FieldElement FieldContext::mul(FieldElement x, FieldElement y) const {
    if (x.is_zero() || y.is_zero()) return kZero;
    if (!tables_) return FieldElement{slow_mul(x.bits, y.bits)};
    return FieldElement{tables_->exp[tables_->log[x.bits] + tables_->log[y.bits]]};
}

FieldElement FieldContext::pow(FieldElement x, std::uint64_t e) const {
    FieldElement result = kOne;
    FieldElement base = x;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElement FieldContext::inv(FieldElement x) const {
    if (x.is_zero()) throw Error(ErrorCode::InvertZero, "inverse of zero");
    return pow(x, q_ - 2);
}

FieldElement FieldContext::frob(FieldElement x, int k) const {
    k %= n_;
    if (k < 0) k += n_;
    if (x.is_zero()) return x;
    const std::uint64_t l = tables_->log[x.bits];
    return FieldElement{tables_->exp[static_cast<std::size_t>((l << k) % (q_ - 1))]};
}

int FieldContext::trace(FieldElement x) const {
    return std::popcount(x.bits & trace_mask_) & 1;
}

int FieldContext::dickson3_count_by_trace(FieldElement t) const {
    if (t == kZero || t == kOne) return 2;
    return trace(inv(t)) == 1 ? 3 : 1;
}

int FieldContext::dickson3_count(FieldElement t) const {
    // X^(2^n) mod X^3 + X + t by repeated squaring, using X^3 = X + t and X^4 = X^2 + t X.
    std::array<FieldElement, 3> r{kZero, kOne, kZero};
    for (int i = 0; i < n_; ++i) {
        const FieldElement s0 = square(r[0]), s1 = square(r[1]), s2 = square(r[2]);
        r = {s0, mul(t, s2), s1 + s2};
    }
    r[1] = r[1] + kOne;

    using Poly = std::vector<FieldElement>;
    auto trim = [](Poly& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    Poly a{t, kOne, kZero, kOne};
    Poly b(r.begin(), r.end());
    trim(b);
    while (!b.empty()) {
        const FieldElement lead_inv = inv(b.back());
        while (a.size() >= b.size()) {
            const FieldElement c = mul(a.back(), lead_inv);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] + mul(c, b[i]);
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

std::string FieldContext::to_hex(FieldElement x) {
    static constexpr char kDigits[] = "0123456789abcdef";
    if (x.bits == 0) return "0";
    std::string s;
    for (std::uint32_t b = x.bits; b; b >>= 4) s.insert(s.begin(), kDigits[b & 0xf]);
    return s;
}

std::string FieldContext::to_omega(FieldElement x) const {
    if (x.is_zero()) return "0";
    if (!tables_) return "0x" + to_hex(x);
    const auto k = log(x);
    if (k == 0) return "1";
    if (k == 1) return "ω";
    return "ω^" + std::to_string(k);
}

} // namespace hyperovals
