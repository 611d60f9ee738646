#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperovals/error.hpp"

namespace hyperovals {

/// Element of GF(2^n) in the polynomial basis: bit i is the coefficient of w^i.
struct FieldElement {
    std::uint32_t bits = 0;

    constexpr FieldElement() = default;
    constexpr explicit FieldElement(std::uint32_t b) : bits(b) {}

    constexpr bool is_zero() const { return bits == 0; }

    friend constexpr FieldElement operator+(FieldElement x, FieldElement y) {
        return FieldElement{x.bits ^ y.bits};
    }
    constexpr FieldElement& operator+=(FieldElement y) {
        bits ^= y.bits;
        return *this;
    }
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

inline constexpr FieldElement kZero{0};
inline constexpr FieldElement kOne{1};

/// Default primitive modulus for odd n in [3, 21]. n = 5 gives x^5 + x^2 + 1.
std::uint32_t default_modulus(int n);

/// GF(2^n) for odd n, 3 <= n <= 21, with discrete log tables.
///
/// Immutable after construction; copies share the tables.
class FieldContext {
public:
    static constexpr int kMinDegree = 3;
    static constexpr int kMaxDegree = 21;

    /// Throws EvenDegree, UnsupportedDegree or NonPrimitiveModulus.
    explicit FieldContext(int n, std::optional<std::uint32_t> modulus = std::nullopt);

    int n() const { return n_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t modulus() const { return modulus_; }
    bool has_tables() const { return tables_ != nullptr; }

    FieldElement omega() const { return FieldElement{2}; }
    FieldElement element(std::uint32_t bits) const;
    FieldElement omega_pow(std::int64_t k) const;
    /// Discrete log base w; x must be nonzero.
    std::uint32_t log(FieldElement x) const;

    FieldElement add(FieldElement x, FieldElement y) const { return x + y; }
    FieldElement mul(FieldElement x, FieldElement y) const;
    FieldElement square(FieldElement x) const { return mul(x, x); }
    FieldElement pow(FieldElement x, std::uint64_t e) const;
    FieldElement inv(FieldElement x) const;

    /// x^(2^k), k taken mod n.
    FieldElement frob(FieldElement x, int k) const;
    FieldElement sqrt(FieldElement x) const { return frob(x, n_ - 1); }
    /// Absolute trace to GF(2).
    int trace(FieldElement x) const;
    FieldElement trace_elem(FieldElement x) const { return FieldElement{static_cast<std::uint32_t>(trace(x))}; }

    /// Number of x with x^3 + x = t, as deg gcd(X^3 + X + t, X^q + X).
    int dickson3_count(FieldElement t) const;
    /// The count as predicted from Tr(t^-1): 2 for t in {0, 1}, else 3 if Tr(t^-1) = 1, else 1.
    /// Only the value 1 is reliable; see dickson3_unique_root.
    int dickson3_count_by_trace(FieldElement t) const;
    /// t != 0 and Tr(t^-1) = 0, which holds exactly when x^3 + x = t has a single solution.
    bool dickson3_unique_root(FieldElement t) const { return !t.is_zero() && trace(inv(t)) == 0; }

    /// Lowercase hex of the bit pattern.
    static std::string to_hex(FieldElement x);
    /// "0", "1", "ω", "ω^k".
    std::string to_omega(FieldElement x) const;

    bool operator==(const FieldContext& other) const { return n_ == other.n_ && modulus_ == other.modulus_; }

private:
    struct Tables {
        std::vector<std::uint32_t> exp; // size 2(q-1)
        std::vector<std::uint32_t> log; // size q
    };

    std::uint32_t slow_mul(std::uint32_t x, std::uint32_t y) const;

    int n_;
    std::uint32_t q_;
    std::uint32_t modulus_;
    std::uint32_t trace_mask_ = 0;
    std::shared_ptr<const Tables> tables_;
};

} // namespace hyperovals
