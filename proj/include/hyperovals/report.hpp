#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperovals/search.hpp"

namespace hyperovals {

inline constexpr int kSchemaVersion = 1;

enum class ReportFormat { Json, Csv, Markdown };

std::optional<ReportFormat> parse_format(const std::string& s);

struct ClassificationReport {
    std::string plane;
    int n = 0;
    std::uint32_t modulus = 0;
    OvalType type = OvalType::A;
    CoeffDomain domain = CoeffDomain::Full;
    std::vector<HyperovalRecord> classes;
};

/// "w^3 x^4 + x" style; the variable is x for type (a) and y for type (b).
std::string format_function(const FieldContext& ctx, const LinearizedPoly& f, char var);

std::string to_string(OvalType t);
std::string to_string(CoeffDomain d);

nlohmann::ordered_json to_json(const FieldContext& ctx, const ClassificationReport& r);
/// Reads back what to_json wrote; throws BadInput on malformed documents.
ClassificationReport classification_from_json(const nlohmann::json& j);

std::string emit_report(const FieldContext& ctx, const ClassificationReport& r, ReportFormat fmt);

/// Flat key/value documents for the other subcommands.
std::string emit_document(const nlohmann::ordered_json& doc, ReportFormat fmt);

/// A published table as omega exponents (null for zero), with the digest of each row's class.
nlohmann::ordered_json golden_table(const Presemifield& s, ReferenceTable table);
/// Rows of a golden document; throws BadInput on malformed documents.
std::vector<ReferenceRow> golden_rows(const FieldContext& ctx, const nlohmann::json& j);

} // namespace hyperovals
