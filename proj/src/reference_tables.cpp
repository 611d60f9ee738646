#include <array>

#include "hyperovals/search.hpp"

namespace hyperovals {

namespace {

// Coefficients as powers of w, index i for X^(2^i); -1 is a zero coefficient.
struct RawRow {
    int no;
    int alpha; // power of w, -1 when the carrier is (inf)
    std::array<int, 5> coeffs;
};

constexpr RawRow kKnuthTypeA[] = {
    {1, -1, {-1, 0, -1, -1, -1}},
    {2, -1, {0, 0, 0, -1, -1}},
    {3, -1, {-1, -1, -1, 0, -1}},
    {4, -1, {-1, 0, 0, 0, -1}},
    {5, -1, {12, 4, 30, 14, 7}},
};

constexpr RawRow kKnuthTypeB[] = {
    {1, 0, {0, 0, -1, -1, -1}},
    {2, 0, {0, -1, 0, -1, -1}},
    {3, 1, {25, 23, 11, 3, 21}},
    {4, 3, {14, 16, 4, 17, 13}},
    {5, 3, {12, 14, 17, 25, 13}},
    {6, 3, {6, 8, 17, 16, 16}},
    {7, 7, {27, 27, 18, 27, 26}},
    {8, 7, {1, 29, 8, 18, 17}},
    {9, 11, {5, 26, 29, 25, 20}},
    {10, 11, {7, 27, 28, 2, 19}},
    {11, 11, {4, 10, 17, 24, 11}},
    {12, 15, {16, 24, 5, 21, 29}},
};

constexpr RawRow kSymplecticTypeB[] = {
    {1, 0, {0, 0, -1, -1, -1}},
    {2, 0, {0, -1, 0, -1, -1}},
    {3, 1, {15, 29, 1, 18, 24}},
    {4, 1, {13, 5, 17, 12, 17}},
    {5, 1, {5, 14, 4, 24, 7}},
    {6, 1, {0, 27, 23, 7, 28}},
    {7, 3, {24, 28, 0, 5, 5}},
    {8, 5, {22, 25, 26, 27, 19}},
    {9, 15, {18, 29, 21, 1, 5}},
    {10, 15, {18, 10, 4, 13, 30}},
};

template <std::size_t N>
std::vector<ReferenceRow> convert(const FieldContext& ctx, const RawRow (&raw)[N]) {
    std::vector<ReferenceRow> rows;
    for (const auto& r : raw) {
        ReferenceRow row;
        row.no = r.no;
        if (r.alpha >= 0) row.alpha = ctx.omega_pow(r.alpha);
        row.coeffs = LinearizedPoly(5);
        for (int i = 0; i < 5; ++i)
            if (r.coeffs[i] >= 0) row.coeffs[i] = ctx.omega_pow(r.coeffs[i]);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::vector<ReferenceRow> reference_rows(const FieldContext& ctx, ReferenceTable table) {
    if (ctx.n() != 5 || ctx.modulus() != 0x25)
        throw Error(ErrorCode::BadInput, "reference tables are defined over GF(32) with modulus x^5 + x^2 + 1");
    switch (table) {
    case ReferenceTable::KnuthTypeA: return convert(ctx, kKnuthTypeA);
    case ReferenceTable::KnuthTypeB: return convert(ctx, kKnuthTypeB);
    case ReferenceTable::SymplecticTypeB: return convert(ctx, kSymplecticTypeB);
    }
    return {};
}

Hyperoval reference_hyperoval(const Presemifield& s, ReferenceTable table, const ReferenceRow& row) {
    if (table == ReferenceTable::KnuthTypeA) return type_a_hyperoval(s, row.coeffs);
    return type_b_hyperoval(s, row.coeffs, *row.alpha);
}

void match_reference(const Presemifield& s, ReferenceTable table, std::vector<HyperovalRecord>& records) {
    for (const auto& row : reference_rows(s.ctx(), table)) {
        const auto cf = canonical_form(s, reference_hyperoval(s, table, row));
        for (auto& rec : records)
            if (rec.canonical_codes == cf.codes && !rec.table_row) rec.table_row = row.no;
    }
}

} // namespace hyperovals
