#pragma once

#include <compare>
#include <cstdint>
#include <iterator>
#include <vector>

#include "hyperovals/algebra.hpp"

namespace hyperovals {

/// Point of the plane coordinatised by a presemifield.
/// Order: (inf) < (a) by bits(a) < (x, y) by (bits(x), bits(y)).
struct PlanePoint {
    enum class Kind : std::uint8_t { Infinity, AtInfinity, Affine };

    Kind kind = Kind::Infinity;
    FieldElement x; // slope for AtInfinity
    FieldElement y;

    static constexpr PlanePoint infinity() { return {}; }
    static constexpr PlanePoint at_infinity(FieldElement a) { return {Kind::AtInfinity, a, {}}; }
    static constexpr PlanePoint affine(FieldElement x, FieldElement y) { return {Kind::Affine, x, y}; }

    bool is_affine() const { return kind == Kind::Affine; }

    /// (inf) = 0, (a) = 1 + a, (x, y) = 1 + q + x q + y.
    std::uint32_t code(std::uint32_t q) const;
    static PlanePoint from_code(std::uint32_t code, std::uint32_t q);

    friend constexpr auto operator<=>(const PlanePoint&, const PlanePoint&) = default;
};

/// l_inf, l_a = {(a, y)} + (inf), l_{a,b} = {(x, x*a + b)} + (a).
struct PlaneLine {
    enum class Kind : std::uint8_t { AtInfinity, Vertical, Sloped };

    Kind kind = Kind::AtInfinity;
    FieldElement a;
    FieldElement b;

    static constexpr PlaneLine at_infinity() { return {}; }
    static constexpr PlaneLine vertical(FieldElement a) { return {Kind::Vertical, a, {}}; }
    static constexpr PlaneLine sloped(FieldElement a, FieldElement b) { return {Kind::Sloped, a, b}; }

    /// l_inf = 0, l_a = 1 + a, l_{a,b} = 1 + q + a q + b.
    std::uint32_t code(std::uint32_t q) const;
    static PlaneLine from_code(std::uint32_t code, std::uint32_t q);

    friend constexpr auto operator<=>(const PlaneLine&, const PlaneLine&) = default;
};

inline std::uint32_t plane_size(std::uint32_t q) { return q * q + q + 1; }

bool incident(const Presemifield& s, const PlanePoint& p, const PlaneLine& l);
std::vector<PlanePoint> points_on(const Presemifield& s, const PlaneLine& l);
std::vector<PlaneLine> lines_through(const Presemifield& s, const PlanePoint& p);
/// The unique line through two distinct points.
PlaneLine line_through(const Presemifield& s, const PlanePoint& p, const PlanePoint& r);
/// The unique common point of two distinct lines.
PlanePoint meet(const Presemifield& s, const PlaneLine& l, const PlaneLine& m);

/// gamma^k o sigma_c o tau_{a,b}: translate by (a, b), shear by c, then Frobenius k times.
struct Collineation {
    int k = 0;
    FieldElement c;
    FieldElement a;
    FieldElement b;

    static Collineation identity() { return {}; }
    static Collineation translation(FieldElement a, FieldElement b) { return {0, {}, a, b}; }
    static Collineation shear(FieldElement c) { return {0, c, {}, {}}; }
    static Collineation frobenius(int k) { return {k, {}, {}, {}}; }

    friend constexpr auto operator<=>(const Collineation&, const Collineation&) = default;
};

PlanePoint apply(const Presemifield& s, const Collineation& g, const PlanePoint& p);
PlaneLine apply(const Presemifield& s, const Collineation& g, const PlaneLine& l);
/// Acts as g after h.
Collineation compose(const Presemifield& s, const Collineation& g, const Collineation& h);
Collineation invert(const Presemifield& s, const Collineation& g);

/// |Aut| = q^3 n; drops to q^3 when Frobenius is not an autotopism of s.
std::uint64_t aut_group_order(const Presemifield& s);
/// Element with the given index in [0, aut_group_order): index = ((k q + c) q + a) q + b.
Collineation aut_element(const Presemifield& s, std::uint64_t index);

/// Range over the automorphism group, optionally restricted to an index window.
class AutEnumeration {
public:
    class iterator {
    public:
        using value_type = Collineation;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        iterator(const Presemifield* s, std::uint64_t i) : s_(s), i_(i) {}
        Collineation operator*() const { return aut_element(*s_, i_); }
        iterator& operator++() {
            ++i_;
            return *this;
        }
        iterator operator++(int) {
            auto t = *this;
            ++i_;
            return t;
        }
        bool operator==(const iterator& o) const { return i_ == o.i_; }

    private:
        const Presemifield* s_ = nullptr;
        std::uint64_t i_ = 0;
    };

    explicit AutEnumeration(const Presemifield& s) : s_(&s), begin_(0), end_(aut_group_order(s)) {}
    AutEnumeration(const Presemifield& s, std::uint64_t begin, std::uint64_t end) : s_(&s), begin_(begin), end_(end) {}

    iterator begin() const { return {s_, begin_}; }
    iterator end() const { return {s_, end_}; }
    std::uint64_t size() const { return end_ - begin_; }

private:
    const Presemifield* s_;
    std::uint64_t begin_;
    std::uint64_t end_;
};

inline AutEnumeration enumerate_aut(const Presemifield& s) { return AutEnumeration(s); }

/// Lines meeting the point set in exactly two points.
std::vector<PlaneLine> secants(const Presemifield& s, const std::vector<PlanePoint>& pts);
/// Intersection count for every line code; size q^2 + q + 1.
std::vector<std::uint32_t> line_counts(const Presemifield& s, const std::vector<PlanePoint>& pts);

} // namespace hyperovals
