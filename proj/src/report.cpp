#include "hyperovals/report.hpp"

#include <sstream>

#include "hyperovals/error.hpp"

namespace hyperovals {

using nlohmann::json;
using nlohmann::ordered_json;

std::optional<ReportFormat> parse_format(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    if (s == "md") return ReportFormat::Markdown;
    return std::nullopt;
}

std::string to_string(OvalType t) { return t == OvalType::A ? "a" : "b"; }
std::string to_string(CoeffDomain d) { return d == CoeffDomain::Full ? "full" : "zero_one"; }

std::string format_function(const FieldContext& ctx, const LinearizedPoly& f, char var) {
    std::string out;
    for (int i = f.n() - 1; i >= 0; --i) {
        if (f[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (f[i] != kOne) out += ctx.to_omega(f[i]) + " ";
        out += var;
        if (i > 0) out += "^" + std::to_string(std::uint64_t{1} << i);
    }
    return out.empty() ? "0" : out;
}

namespace {

std::string hex_modulus(std::uint32_t m) {
    std::ostringstream os;
    os << "0x" << std::hex << m;
    return os.str();
}

std::uint32_t parse_hex(const json& j) {
    if (!j.is_string()) throw Error(ErrorCode::BadInput, "expected a hex string");
    const std::string s = j.get<std::string>();
    try {
        std::size_t used = 0;
        const auto v = std::stoul(s, &used, 16);
        if (used != s.size()) throw Error(ErrorCode::BadInput, "bad hex string: " + s);
        return static_cast<std::uint32_t>(v);
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::BadInput, "bad hex string: " + s);
    }
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string scalar_text(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

} // namespace

ordered_json to_json(const FieldContext& ctx, const ClassificationReport& r) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["plane"] = r.plane;
    doc["n"] = r.n;
    doc["modulus_bits"] = hex_modulus(r.modulus);
    doc["type"] = to_string(r.type);
    doc["domain"] = to_string(r.domain);
    doc["classes"] = ordered_json::array();
    const char var = r.type == OvalType::A ? 'x' : 'y';
    int no = 0;
    for (const auto& c : r.classes) {
        ordered_json e;
        e["no"] = ++no;
        e["alpha"] = c.alpha ? ordered_json(FieldContext::to_hex(*c.alpha)) : ordered_json(nullptr);
        e["alpha_omega"] = c.alpha ? ordered_json(ctx.to_omega(*c.alpha)) : ordered_json(nullptr);
        ordered_json bits = ordered_json::array(), omega = ordered_json::array();
        for (const auto& a : c.coeffs.coeffs) {
            bits.push_back(FieldContext::to_hex(a));
            omega.push_back(ctx.has_tables() ? ordered_json(ctx.to_omega(a)) : ordered_json(nullptr));
        }
        e["coeffs_bits"] = bits;
        e["coeffs_omega"] = omega;
        e["function"] = format_function(ctx, c.coeffs, var);
        e["digest"] = c.digest;
        e["orbit_size"] = c.orbit_size;
        e["normalized_forms"] = c.normalized_forms;
        e["table_match"] = c.table_row ? ordered_json(*c.table_row) : ordered_json(nullptr);
        doc["classes"].push_back(std::move(e));
    }
    return doc;
}

ClassificationReport classification_from_json(const json& j) {
    try {
        if (j.at("schema_version").get<int>() != kSchemaVersion) throw Error(ErrorCode::BadInput, "unsupported schema version");
        ClassificationReport r;
        r.plane = j.at("plane").get<std::string>();
        r.n = j.at("n").get<int>();
        r.modulus = parse_hex(j.at("modulus_bits"));
        const auto type = j.at("type").get<std::string>();
        if (type != "a" && type != "b") throw Error(ErrorCode::BadInput, "bad type");
        r.type = type == "a" ? OvalType::A : OvalType::B;
        const auto domain = j.at("domain").get<std::string>();
        if (domain != "full" && domain != "zero_one") throw Error(ErrorCode::BadInput, "bad domain");
        r.domain = domain == "full" ? CoeffDomain::Full : CoeffDomain::ZeroOne;
        for (const auto& e : j.at("classes")) {
            HyperovalRecord rec;
            rec.plane_id = r.plane;
            rec.type = r.type;
            for (const auto& b : e.at("coeffs_bits")) rec.coeffs.coeffs.push_back(FieldElement{parse_hex(b)});
            if (!e.at("alpha").is_null()) rec.alpha = FieldElement{parse_hex(e.at("alpha"))};
            rec.digest = e.at("digest").get<std::string>();
            rec.orbit_size = e.at("orbit_size").get<std::uint64_t>();
            rec.normalized_forms = e.at("normalized_forms").get<std::uint64_t>();
            if (!e.at("table_match").is_null()) rec.table_row = e.at("table_match").get<int>();
            r.classes.push_back(std::move(rec));
        }
        return r;
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::BadInput, std::string("malformed report: ") + ex.what());
    }
}

std::string emit_report(const FieldContext& ctx, const ClassificationReport& r, ReportFormat fmt) {
    const ordered_json doc = to_json(ctx, r);
    if (fmt == ReportFormat::Json) return doc.dump(2) + "\n";

    std::ostringstream os;
    if (fmt == ReportFormat::Csv) {
        os << "schema_version,plane,n,modulus_bits,type,domain,no,alpha,coeffs_bits,coeffs_omega,function,digest,orbit_size,"
              "normalized_forms,table_match\n";
        for (const auto& e : doc["classes"]) {
            std::vector<std::string> bits, omega;
            for (const auto& b : e["coeffs_bits"]) bits.push_back(b.get<std::string>());
            for (const auto& w : e["coeffs_omega"]) omega.push_back(scalar_text(w));
            os << kSchemaVersion << ',' << csv_escape(r.plane) << ',' << r.n << ',' << doc["modulus_bits"].get<std::string>() << ','
               << to_string(r.type) << ',' << to_string(r.domain) << ',' << e["no"].get<int>() << ',' << scalar_text(e["alpha"]) << ','
               << join(bits, ";") << ',' << csv_escape(join(omega, ";")) << ',' << csv_escape(e["function"].get<std::string>()) << ','
               << e["digest"].get<std::string>() << ',' << e["orbit_size"].get<std::uint64_t>() << ','
               << e["normalized_forms"].get<std::uint64_t>() << ',' << scalar_text(e["table_match"]) << '\n';
        }
        return os.str();
    }

    os << "# Translation hyperovals of type (" << to_string(r.type) << ") in the plane " << r.plane << "\n\n";
    os << "- n: " << r.n << "\n- modulus: " << doc["modulus_bits"].get<std::string>() << "\n- domain: " << to_string(r.domain)
       << "\n- classes: " << r.classes.size() << "\n- schema_version: " << kSchemaVersion << "\n\n";
    const bool with_alpha = r.type == OvalType::B;
    os << "| No. |" << (with_alpha ? " α |" : "") << " function | orbit size | table row | digest |\n";
    os << "|---|" << (with_alpha ? "---|" : "") << "---|---|---|---|\n";
    for (const auto& e : doc["classes"]) {
        os << "| " << e["no"].get<int>() << " |";
        if (with_alpha) os << " " << scalar_text(e["alpha_omega"]) << " |";
        os << " " << e["function"].get<std::string>() << " | " << e["orbit_size"].get<std::uint64_t>() << " | "
           << (e["table_match"].is_null() ? "-" : e["table_match"].dump()) << " | `" << e["digest"].get<std::string>() << "` |\n";
    }
    return os.str();
}

std::string emit_document(const ordered_json& doc, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) return doc.dump(2) + "\n";
    std::ostringstream os;
    if (fmt == ReportFormat::Csv) {
        os << "key,value\n";
        for (const auto& [k, v] : doc.items()) os << csv_escape(k) << ',' << csv_escape(scalar_text(v)) << '\n';
    } else {
        os << "| key | value |\n|---|---|\n";
        for (const auto& [k, v] : doc.items()) os << "| " << k << " | " << scalar_text(v) << " |\n";
    }
    return os.str();
}

namespace {

ordered_json exponent_or_null(const FieldContext& ctx, FieldElement x) {
    return x.is_zero() ? ordered_json(nullptr) : ordered_json(ctx.log(x));
}

} // namespace

ordered_json golden_table(const Presemifield& s, ReferenceTable table) {
    const FieldContext& ctx = s.ctx();
    const bool type_a = table == ReferenceTable::KnuthTypeA;
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["table"] = static_cast<int>(table);
    doc["plane"] = s.name();
    doc["n"] = ctx.n();
    doc["modulus_bits"] = hex_modulus(ctx.modulus());
    doc["type"] = type_a ? "a" : "b";
    doc["rows"] = ordered_json::array();
    for (const auto& row : reference_rows(ctx, table)) {
        ordered_json e;
        e["no"] = row.no;
        e["alpha_exp"] = row.alpha ? exponent_or_null(ctx, *row.alpha) : ordered_json(nullptr);
        ordered_json exps = ordered_json::array();
        for (const auto& a : row.coeffs.coeffs) exps.push_back(exponent_or_null(ctx, a));
        e["coeff_exps"] = exps;
        e["function"] = format_function(ctx, row.coeffs, type_a ? 'x' : 'y');
        e["digest"] = canonical_form(s, reference_hyperoval(s, table, row)).digest(ctx.q());
        doc["rows"].push_back(std::move(e));
    }
    return doc;
}

std::vector<ReferenceRow> golden_rows(const FieldContext& ctx, const json& j) {
    try {
        std::vector<ReferenceRow> rows;
        for (const auto& e : j.at("rows")) {
            ReferenceRow row;
            row.no = e.at("no").get<int>();
            if (!e.at("alpha_exp").is_null()) row.alpha = ctx.omega_pow(e.at("alpha_exp").get<std::int64_t>());
            for (const auto& x : e.at("coeff_exps"))
                row.coeffs.coeffs.push_back(x.is_null() ? kZero : ctx.omega_pow(x.get<std::int64_t>()));
            if (row.coeffs.n() != ctx.n()) throw Error(ErrorCode::BadInput, "golden row has the wrong number of coefficients");
            rows.push_back(std::move(row));
        }
        return rows;
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::BadInput, std::string("malformed golden file: ") + ex.what());
    }
}

} // namespace hyperovals
