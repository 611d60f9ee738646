#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperovals/ovals.hpp"

namespace hyperovals {

/// L is a permutation and x -> L(x) + x * a has a kernel of size 2 for every a != 0.
bool check_type_a(const Presemifield& s, const LinearizedPoly& L);
/// The carrier alpha if L is two-to-one and y -> L(y) * a + y has kernel size 1 for
/// exactly one a != 0 and size 2 for every other a != 0.
std::optional<FieldElement> check_type_b(const Presemifield& s, const LinearizedPoly& L);

/// Lexicographically least sorted point-code sequence over the orbit under Aut.
struct CanonicalForm {
    std::vector<std::uint32_t> codes;
    std::uint64_t stabilizer_order = 0;
    std::uint64_t orbit_size = 0;
    Collineation witness; // maps the input onto the canonical representative

    /// Fixed-width lowercase hex of the codes; orders like the codes.
    std::string digest(std::uint32_t q) const;
    bool operator==(const CanonicalForm& o) const { return codes == o.codes; }
};

CanonicalForm canonical_form(const Presemifield& s, const Hyperoval& o);

enum class OvalType { A, B };

struct HyperovalRecord {
    std::string plane_id;
    OvalType type = OvalType::A;
    LinearizedPoly coeffs;
    std::optional<FieldElement> alpha; // type (b) only
    std::vector<std::uint32_t> canonical_codes;
    std::string digest;
    std::uint64_t orbit_size = 0;
    /// Normalized polynomials found in the searched domain for this class.
    std::uint64_t normalized_forms = 0;
    /// Matching row of a reference table, if any.
    std::optional<int> table_row;
};

struct Normalized {
    OvalType type;
    HyperovalRecord record;
    Collineation witness;
};

/// Moves a translation hyperoval to type (a) or (b) shape; throws NotTranslation.
Normalized normalize(const Presemifield& s, const Hyperoval& o);

enum class CoeffDomain { Full, ZeroOne };

struct SearchOptions {
    OvalType type = OvalType::A;
    CoeffDomain domain = CoeffDomain::Full;
    unsigned workers = 1;
};

/// One record per equivalence class, sorted by digest. Full domain needs n <= 5, {0,1} needs n <= 11;
/// throws InfeasibleDomain otherwise.
std::vector<HyperovalRecord> search_translation_hyperovals(const Presemifield& s, const SearchOptions& opts);

/// Rows of the published n = 5 classification (modulus x^5 + x^2 + 1).
struct ReferenceRow {
    int no = 0;
    std::optional<FieldElement> alpha;
    LinearizedPoly coeffs;
};

enum class ReferenceTable { KnuthTypeA = 1, KnuthTypeB = 2, SymplecticTypeB = 3 };

std::vector<ReferenceRow> reference_rows(const FieldContext& ctx, ReferenceTable table);
Hyperoval reference_hyperoval(const Presemifield& s, ReferenceTable table, const ReferenceRow& row);
/// Fills table_row by digest comparison.
void match_reference(const Presemifield& s, ReferenceTable table, std::vector<HyperovalRecord>& records);

} // namespace hyperovals
