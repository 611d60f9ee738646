#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperovals/gf2n.hpp"

namespace hyperovals {

/// Rank over GF(2) of the rows (each an n-bit word). Destroys nothing; works on a copy.
int gf2_rank(std::span<const std::uint32_t> rows);

/// n x n matrix over GF(2), row-vector convention: x -> x * M, row i is the image of w^i.
class BitMatrix {
public:
    static constexpr int kMaxDim = FieldContext::kMaxDegree;

    BitMatrix() = default;
    explicit BitMatrix(int n) : n_(n) {}

    static BitMatrix identity(int n);
    /// Matrix of an additive map given the images of the basis w^0..w^{n-1}.
    static BitMatrix from_images(std::span<const FieldElement> images);

    int n() const { return n_; }
    std::uint32_t row(int i) const { return rows_[i]; }
    void set_row(int i, std::uint32_t r) { rows_[i] = r; }
    std::span<const std::uint32_t> rows() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }
    bool get(int i, int j) const { return (rows_[i] >> j) & 1u; }

    FieldElement apply(FieldElement x) const;
    BitMatrix transpose() const;
    int rank() const { return gf2_rank(rows()); }
    std::uint64_t kernel_size() const { return std::uint64_t{1} << (n_ - rank()); }
    /// Row vectors x with x * M = 0.
    std::vector<FieldElement> kernel() const;
    /// Throws DegeneratePresemifield if singular.
    BitMatrix inverse() const;

    friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);
    /// Composite map: x -> (x * a) * b.
    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
    friend bool operator==(const BitMatrix& a, const BitMatrix& b);

private:
    int n_ = 0;
    std::array<std::uint32_t, kMaxDim> rows_{};
};

/// L(X) = sum a_i X^(2^i), coefficient i at index i.
struct LinearizedPoly {
    std::vector<FieldElement> coeffs;

    LinearizedPoly() = default;
    explicit LinearizedPoly(int n) : coeffs(static_cast<std::size_t>(n)) {}
    explicit LinearizedPoly(std::vector<FieldElement> c) : coeffs(std::move(c)) {}

    /// c * X^(2^i) in a polynomial with n coefficients.
    static LinearizedPoly monomial(int n, int i, FieldElement c = kOne);

    int n() const { return static_cast<int>(coeffs.size()); }
    FieldElement& operator[](int i) { return coeffs[static_cast<std::size_t>(i)]; }
    FieldElement operator[](int i) const { return coeffs[static_cast<std::size_t>(i)]; }

    friend LinearizedPoly operator+(const LinearizedPoly& a, const LinearizedPoly& b);
    friend bool operator==(const LinearizedPoly&, const LinearizedPoly&) = default;
};

FieldElement linpoly_eval(const FieldContext& ctx, const LinearizedPoly& L, FieldElement x);

/// Coefficient of X^(2^(n-i)) is a_i^(2^(n-i)); Tr(x L(y)) = Tr(adjoint(L)(x) y).
LinearizedPoly adjoint(const FieldContext& ctx, const LinearizedPoly& L);

/// Unique linearized polynomial taking the given values on w^0..w^{n-1}.
LinearizedPoly linpoly_interpolate(const FieldContext& ctx, std::span<const FieldElement> basis_images);

BitMatrix linpoly_matrix(const FieldContext& ctx, const LinearizedPoly& L);

enum class MapClass { Permutation, TwoToOne, Other };

struct LinpolyAnalysis {
    BitMatrix matrix;
    std::uint64_t kernel_size = 0;
    MapClass map_class = MapClass::Other;
};

LinpolyAnalysis linpoly_analyze(const FieldContext& ctx, const LinearizedPoly& L);

/// Gram matrix of the trace form Tr(w^i w^j).
BitMatrix trace_gram(const FieldContext& ctx);
/// Matrix of the map A with Tr(A(x) y) = Tr(x M(y)).
BitMatrix trace_adjoint(const FieldContext& ctx, const BitMatrix& m);

enum class PresemifieldKind { KnuthKn, KnuthKnTD, MatrixFamily };

/// A presemifield multiplication on GF(2^n). Cheap to copy, immutable.
class Presemifield {
public:
    /// x * y = xy + (y Tr(x) + x Tr(y))^2
    static Presemifield knuth(const FieldContext& ctx);
    /// x o y = xy + Tr(x) sqrt(y) + Tr(x^2 y)
    static Presemifield knuth_td(const FieldContext& ctx);
    /// x * y = x R_y. No checks beyond shape; use verify_presemifield.
    static Presemifield from_matrices(const FieldContext& ctx, std::vector<BitMatrix> right_mul, std::string name);

    const FieldContext& ctx() const { return ctx_; }
    PresemifieldKind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    FieldElement mul(FieldElement x, FieldElement y) const;
    /// Matrix of x -> x * a.
    BitMatrix right_mul_matrix(FieldElement a) const;
    /// Matrix of x -> a * x.
    BitMatrix left_mul_matrix(FieldElement a) const;
    /// (x * y)^2 = x^2 * y^2 for all x, y, so (x, y) -> (x^2, y^2) is a collineation.
    bool frobenius_autotopism() const { return frobenius_autotopism_; }

private:
    Presemifield(FieldContext ctx, PresemifieldKind kind, std::string name);
    void build_table();
    FieldElement mul_formula(FieldElement x, FieldElement y) const;

    FieldContext ctx_;
    PresemifieldKind kind_;
    std::string name_;
    std::shared_ptr<const std::vector<BitMatrix>> matrices_;
    std::shared_ptr<const std::vector<std::uint32_t>> table_;
    bool frobenius_autotopism_ = true;
};

enum class Derivation { Transpose, Dual };

/// Transpose uses the adjoint with respect to Tr(xy), dual swaps the operands.
/// Throws DegeneratePresemifield if some R_a, a != 0, of the result is singular.
Presemifield derive_presemifield(const Presemifield& s, Derivation which);

struct PresemifieldReport {
    bool left_distributive = true;
    bool right_distributive = true;
    bool no_zero_divisors = true;
    bool commutative = true;
    bool frobenius_autotopism = true;
    std::optional<bool> symplectic;
    /// Tr(x (z o y) + y (x * z)) = 0 with o this multiplication and * the Knuth one.
    std::optional<bool> orthogonality;
    std::vector<std::string> failures;

    bool ok() const;
};

/// Exhaustive over all triples; n <= 7.
PresemifieldReport verify_presemifield(const Presemifield& s, bool check_symplectic);

} // namespace hyperovals
