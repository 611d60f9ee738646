#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hyperovals/search.hpp"

namespace hyperovals {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    std::size_t count() const;
    std::size_t and_count(const Bitset& o) const;
    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct DesignParams {
    std::uint64_t v = 0;
    std::uint64_t k = 0;
    std::uint64_t lambda = 0;
    friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

/// Incidence structure with v points and blocks as v-bit sets.
struct Design {
    std::uint32_t v = 0;
    std::vector<Bitset> blocks;
    std::optional<DesignParams> params;
};

/// Block size, pairwise block intersection and replication, if constant.
struct SymmetricCheck {
    bool symmetric = false;
    std::optional<std::uint64_t> block_size;
    std::optional<std::uint64_t> intersection;
    std::optional<std::uint64_t> replication;

    bool ok() const { return symmetric && block_size && intersection && replication && *replication == *block_size; }
};

SymmetricCheck check_symmetric_design(const Design& d);

/// f with O = {(x, f(x))} + {(0), (inf)}; throws NotTypeA if O is not in that shape.
LinearizedPoly type_a_function(const Presemifield& s, const Hyperoval& o);

struct TypeBShape {
    LinearizedPoly f;
    FieldElement alpha;
    FieldElement theta; // the nonzero root of f
};

/// f, alpha with O = {(f(y), y)} + {(0), (alpha)}; throws NotTypeB.
TypeBShape type_b_shape(const Presemifield& s, const Hyperoval& o);

/// {(x, f(x) + x * c + d)} + {(c), (inf)} at index c q + d.
std::vector<Hyperoval> sigma_orbit(const Presemifield& s, const Hyperoval& o);

struct OrbitIntersections {
    std::map<std::uint32_t, std::uint64_t> histogram; // |O n O'| -> count over O' != O
    std::uint64_t distinct_images = 0;                 // including O
    bool six_predicted = false;                        // exists v with f(v) * alpha = theta
};

/// Sizes |O n O'| over the distinct images O' != O of a type-(b) O under translations and shears.
OrbitIntersections orbit_intersections(const Presemifield& s, const Hyperoval& o);
bool six_intersection_condition(const Presemifield& s, const TypeBShape& shape);

/// Points: lines l_{a,b} at a q + b. Blocks: secants of each orbit member off the pencil of (inf).
/// Throws ParameterMismatch if the result is not a (q^2, q^2/2 + q/2, q^2/4 + q/2) design.
Design build_design(const Presemifield& s, const Hyperoval& o);

enum class GroupId { G1, G2 };

/// G1: tau_{0,b} sigma_c with payload (b, c). G2: tau_{a,b} sigma_a with payload (a, b).
struct GroupElement {
    GroupId group = GroupId::G1;
    FieldElement first;
    FieldElement second;

    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

Collineation to_collineation(const Presemifield& s, const GroupElement& g);
GroupElement group_mul(const Presemifield& s, const GroupElement& g, const GroupElement& h);
GroupElement group_inv(const Presemifield& s, const GroupElement& g);
/// Index of g by the image of l_{0,0}: a q + b for the image l_{a,b}.
std::uint32_t group_index(const Presemifield& s, const GroupElement& g);
std::vector<GroupElement> group_elements(const Presemifield& s, GroupId which);

struct DifferenceSet {
    GroupId group = GroupId::G1;
    std::vector<GroupElement> elements;
    DesignParams params;
    DesignParams complement_params;
};

/// Counts d1 d2^-1 over all ordered pairs, for the set and its complement; throws NotADifferenceSet.
std::optional<std::uint64_t> difference_lambda(const Presemifield& s, std::span<const GroupElement> set);
DifferenceSet difference_set(const Presemifield& s, const Hyperoval& o, GroupId which);

struct GroupOrderStats {
    std::map<int, std::uint64_t> order_histogram;
    std::uint64_t order = 0;
    bool abelian = false;
    int exponent = 0;
    std::uint64_t involutions_and_identity = 0;
    /// C_2^{2n} for G1, C_4^n for G2.
    bool certified = false;
};

GroupOrderStats group_order_stats(const Presemifield& s, GroupId which);

/// Fast Walsh-Hadamard transform of (-1)^f.
std::vector<std::int64_t> walsh_spectrum(const std::vector<std::uint8_t>& f);

struct BentReport {
    int variables = 0;
    std::vector<std::uint8_t> indicator; // index (c << n) | b, resp. (x << n) | y
    bool is_bent = false;
    std::map<std::int64_t, std::uint64_t> spectrum;
};

/// Indicator of D1 = {tau_{0,b} sigma_c : l_{c,b} secant to O, off the pencil of (inf)}.
BentReport bent_from_hyperoval(const Presemifield& s, const Hyperoval& o);
/// For O through (0) and (inf) with affine part {(a, F(a))}: f(x, M_a(x)) = Tr(x F(a)) on the
/// spread {(x, M_a(x))} + {(0, y)}, where M_a is the trace adjoint of v -> a * v; f(0, y) = 0.
BentReport spread_bent_function(const Presemifield& s, const Hyperoval& o);

/// Development of the support of f, or of its complement, whichever has q^2/2 + q/2 points.
Design development_design(const std::vector<std::uint8_t>& f);

std::uint32_t gf2_rank_rows(std::vector<Bitset> rows);

struct DesignInvariants {
    std::uint32_t rank2 = 0;
    SymmetricCheck degree_checks;
};

DesignInvariants design_invariants(const Design& d);

/// Triple-intersection counts |B1 n B2 n B3| over unordered block triples.
struct TripleOptions {
    /// Zero means every triple.
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;
};

std::map<std::uint64_t, std::uint64_t> triple_distribution(const Design& d, const TripleOptions& opts);

/// Histogram over the other blocks B of |B1 n B2 n B|, as sorted (size, count) pairs.
using PairProfile = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

struct TripleInvariants {
    std::map<std::uint64_t, std::uint64_t> triples;
    /// Multiset of profiles over unordered block pairs; empty when sampled.
    std::map<PairProfile, std::uint64_t> pair_profiles;
    bool exhaustive = false;
};

TripleInvariants triple_invariants(const Design& d, const TripleOptions& opts);

enum class Verdict { Distinguished, Inconclusive };

struct DistinguishResult {
    Verdict verdict = Verdict::Inconclusive;
    std::string witness;
    std::uint32_t rank_first = 0;
    std::uint32_t rank_second = 0;
    std::map<std::uint64_t, std::uint64_t> triples_first;
    std::map<std::uint64_t, std::uint64_t> triples_second;
    std::uint64_t pair_profiles_first = 0; // distinct profiles
    std::uint64_t pair_profiles_second = 0;
    bool triples_exhaustive = false;
};

/// Compares 2-rank, the triple-intersection distribution, then the pair-profile multiset. Sampled distributions are
/// reported but never used as a witness. Throws ParameterMismatch.
DistinguishResult distinguish_designs(const Design& d1, const Design& d2, const TripleOptions& opts = {});

/// Relabel points and blocks: block i of the result is block block_perm[i] of d under point_perm.
Design permute_design(const Design& d, std::span<const std::uint32_t> point_perm, std::span<const std::uint32_t> block_perm);

} // namespace hyperovals
