#include "hyperovals/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "hyperovals/designs.hpp"
#include "hyperovals/error.hpp"
#include "hyperovals/report.hpp"

namespace hyperovals {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    int n = 5;
    std::string plane = "kn";
    std::string modulus;
    unsigned workers = 1;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string output;
};

struct SourceOptions {
    std::string construction = "os";
    int d = 1;
    int table = 1;
    int row = 1;
    std::string coeffs;
    std::string alpha;
    std::string type = "a";
};

struct Source {
    std::string label;
    std::optional<Presemifield> plane;
    std::optional<Hyperoval> points;
    std::optional<LineHyperoval> lines;
};

std::uint32_t parse_hex_arg(const std::string& s) {
    std::string body = s;
    if (body.rfind("0x", 0) == 0 || body.rfind("0X", 0) == 0) body = body.substr(2);
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(body, &used, 16);
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::BadInput, "not a hex value: " + s);
    }
    if (used != body.size() || body.empty()) throw Error(ErrorCode::BadInput, "not a hex value: " + s);
    return static_cast<std::uint32_t>(v);
}

FieldContext make_field(const RunConfig& cfg) {
    if (cfg.modulus.empty()) return FieldContext(cfg.n);
    return FieldContext(cfg.n, parse_hex_arg(cfg.modulus));
}

Presemifield make_plane(const FieldContext& ctx, const std::string& name) {
    if (name == "kn") return Presemifield::knuth(ctx);
    if (name == "kn_td") return Presemifield::knuth_td(ctx);
    if (name == "kn_t") return derive_presemifield(Presemifield::knuth(ctx), Derivation::Transpose);
    if (name == "kn_t_d")
        return derive_presemifield(derive_presemifield(Presemifield::knuth(ctx), Derivation::Transpose), Derivation::Dual);
    throw Error(ErrorCode::BadInput, "unknown plane: " + name);
}

ReferenceTable to_table(int t) {
    if (t < 1 || t > 3) throw Error(ErrorCode::BadInput, "table must be 1, 2 or 3");
    return static_cast<ReferenceTable>(t);
}

ReferenceRow find_row(const FieldContext& ctx, ReferenceTable t, int no) {
    for (auto& r : reference_rows(ctx, t))
        if (r.no == no) return r;
    throw Error(ErrorCode::BadInput, "no such table row: " + std::to_string(no));
}

LinearizedPoly parse_coeffs(const FieldContext& ctx, const std::string& list) {
    LinearizedPoly f(ctx.n());
    std::stringstream ss(list);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= ctx.n()) throw Error(ErrorCode::BadInput, "too many coefficients");
        const auto v = parse_hex_arg(item);
        if (v >= ctx.q()) throw Error(ErrorCode::BadInput, "coefficient outside the field: " + item);
        f[i++] = FieldElement{v};
    }
    if (i != ctx.n()) throw Error(ErrorCode::BadInput, "expected " + std::to_string(ctx.n()) + " coefficients");
    return f;
}

Presemifield table_plane(const FieldContext& ctx, ReferenceTable t) {
    return t == ReferenceTable::SymplecticTypeB ? Presemifield::knuth_td(ctx) : Presemifield::knuth(ctx);
}

Source resolve(const FieldContext& ctx, const RunConfig& cfg, const SourceOptions& so) {
    Source src;
    const std::string& c = so.construction;
    if (c == "os") {
        src.plane = make_plane(ctx, cfg.plane);
        src.points = standard_hyperoval(*src.plane);
        src.label = "O_s";
    } else if (c == "og") {
        src.plane = Presemifield::knuth(ctx);
        src.points = og_hyperoval(ctx);
        src.label = "O_g";
    } else if (c == "od") {
        src.plane = Presemifield::knuth_td(ctx);
        src.points = od_hyperoval(ctx, so.d);
        src.label = "O_d d=" + std::to_string(so.d);
    } else if (c == "table") {
        const auto t = to_table(so.table);
        src.plane = table_plane(ctx, t);
        src.points = reference_hyperoval(*src.plane, t, find_row(ctx, t, so.row));
        src.label = "table " + std::to_string(so.table) + " row " + std::to_string(so.row);
    } else if (c == "coeffs") {
        src.plane = make_plane(ctx, cfg.plane);
        const auto f = parse_coeffs(ctx, so.coeffs);
        if (so.type == "a") {
            src.points = type_a_hyperoval(*src.plane, f);
        } else {
            if (so.alpha.empty()) throw Error(ErrorCode::BadInput, "type (b) needs --alpha");
            src.points = type_b_hyperoval(*src.plane, f, FieldElement{parse_hex_arg(so.alpha)});
        }
        src.label = "coefficients " + so.coeffs;
    } else if (c == "line-os") {
        src.plane = Presemifield::knuth_td(ctx);
        src.lines = adjoint_line_set_a(ctx, LinearizedPoly::monomial(ctx.n(), 1));
        src.label = "{l_(m^2,m)} + {l_0, l_inf}";
    } else if (c == "line-og") {
        src.plane = Presemifield::knuth_td(ctx);
        src.lines = adjoint_line_set_b(ctx, LinearizedPoly::monomial(ctx.n(), 1) + LinearizedPoly::monomial(ctx.n(), 0), kOne);
        src.label = "{l_(m+sqrt m,m)} + {l_0, l_1}";
    } else if (c == "dual-table") {
        const auto t = to_table(so.table);
        const auto row = find_row(ctx, t, so.row);
        src.plane = Presemifield::knuth_td(ctx);
        if (t == ReferenceTable::KnuthTypeA)
            src.lines = dualize_type_a(ctx, row.coeffs);
        else if (t == ReferenceTable::KnuthTypeB)
            src.lines = dualize_type_b(ctx, row.coeffs, *row.alpha);
        else
            throw Error(ErrorCode::BadInput, "dual-table takes table 1 or 2");
        src.label = "dual of table " + std::to_string(so.table) + " row " + std::to_string(so.row);
    } else {
        throw Error(ErrorCode::BadInput, "unknown construction: " + c);
    }
    return src;
}

const Hyperoval& require_points(const Source& src) {
    if (!src.points) throw Error(ErrorCode::BadInput, "this subcommand needs a point hyperoval");
    return *src.points;
}

ordered_json header(const std::string& command, const FieldContext& ctx) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["n"] = ctx.n();
    std::ostringstream os;
    os << "0x" << std::hex << ctx.modulus();
    doc["modulus_bits"] = os.str();
    return doc;
}

std::string histogram_text(const auto& h) {
    std::string out;
    for (const auto& [k, v] : h) out += (out.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(v);
    return out;
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) throw Error(ErrorCode::BadInput, "cannot write " + cfg.output);
    f << text;
}

ReportFormat format_of(const RunConfig& cfg) {
    const auto f = parse_format(cfg.format);
    if (!f) throw Error(ErrorCode::BadInput, "unknown format: " + cfg.format);
    return *f;
}

std::optional<ReferenceTable> reference_for(const FieldContext& ctx, const Presemifield& s, OvalType type) {
    if (ctx.n() != 5 || ctx.modulus() != default_modulus(5)) return std::nullopt;
    if (s.name() == "kn") return type == OvalType::A ? ReferenceTable::KnuthTypeA : ReferenceTable::KnuthTypeB;
    if (s.name() == "kn_td" && type == OvalType::B) return ReferenceTable::SymplecticTypeB;
    return std::nullopt;
}

ClassificationReport run_search(const FieldContext& ctx, const Presemifield& s, OvalType type, CoeffDomain domain, unsigned workers) {
    SearchOptions opts;
    opts.type = type;
    opts.domain = domain;
    opts.workers = workers;
    ClassificationReport r;
    r.plane = s.name();
    r.n = ctx.n();
    r.modulus = ctx.modulus();
    r.type = type;
    r.domain = domain;
    r.classes = search_translation_hyperovals(s, opts);
    if (const auto t = reference_for(ctx, s, type)) match_reference(s, *t, r.classes);
    return r;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotADifferenceSet:
    case ErrorCode::ParameterMismatch:
    case ErrorCode::DegeneratePresemifield: return kExitFailure;
    default: return kExitUsage;
    }
}

/// Runs the three n = 5 classifications and checks every golden row against them.
int run_report(const RunConfig& cfg, const std::string& golden_dir, const std::string& out_dir, bool emit_golden, std::ostream& out) {
    const FieldContext ctx(5);
    struct Job {
        ReferenceTable table;
        std::string plane;
        OvalType type;
    };
    const std::vector<Job> jobs{{ReferenceTable::KnuthTypeA, "kn", OvalType::A},
                                {ReferenceTable::KnuthTypeB, "kn", OvalType::B},
                                {ReferenceTable::SymplecticTypeB, "kn_td", OvalType::B}};

    if (emit_golden) {
        std::filesystem::create_directories(golden_dir);
        for (const auto& job : jobs) {
            const auto s = make_plane(ctx, job.plane);
            std::ofstream f(std::filesystem::path(golden_dir) / ("table" + std::to_string(static_cast<int>(job.table)) + ".json"));
            f << golden_table(s, job.table).dump(2) << "\n";
        }
        out << "golden fixtures written to " << golden_dir << "\n";
        return kExitOk;
    }

    const auto fmt = format_of(cfg);
    const std::string ext = fmt == ReportFormat::Json ? "json" : fmt == ReportFormat::Csv ? "csv" : "md";
    if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
    bool all_ok = true;
    for (const auto& job : jobs) {
        const int t = static_cast<int>(job.table);
        const auto s = make_plane(ctx, job.plane);
        auto r = run_search(ctx, s, job.type, CoeffDomain::Full, cfg.workers);

        std::ifstream gf(std::filesystem::path(golden_dir) / ("table" + std::to_string(t) + ".json"));
        if (!gf) throw Error(ErrorCode::BadInput, "missing golden file for table " + std::to_string(t));
        const auto golden = nlohmann::json::parse(gf);
        const auto rows = golden_rows(ctx, golden);
        std::size_t matched = 0;
        bool table_ok = rows.size() == reference_rows(ctx, job.table).size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto digest = canonical_form(s, reference_hyperoval(s, job.table, rows[i])).digest(ctx.q());
            const auto hits = std::count_if(r.classes.begin(), r.classes.end(), [&](const auto& c) { return c.digest == digest; });
            if (hits == 1) ++matched;
            if (golden["rows"][i].at("digest").get<std::string>() != digest) table_ok = false;
        }
        std::set<int> matched_rows;
        for (const auto& c : r.classes)
            if (c.table_row) matched_rows.insert(*c.table_row);
        table_ok = table_ok && matched == rows.size() && matched_rows.size() == rows.size() && r.classes.size() == rows.size();
        all_ok = all_ok && table_ok;
        out << "table " << t << ": " << r.classes.size() << " classes, " << matched << "/" << rows.size() << " golden rows matched "
            << (table_ok ? "PASS" : "FAIL") << "\n";
        if (!out_dir.empty()) {
            std::ofstream f(std::filesystem::path(out_dir) / ("table" + std::to_string(t) + "." + ext), std::ios::binary);
            f << emit_report(ctx, r, fmt);
        }
    }
    return all_ok ? kExitOk : kExitFailure;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--n", cfg.n, "field degree (odd, 3..21)")->capture_default_str();
    sub->add_option("--plane", cfg.plane, "kn, kn_t, kn_t_d or kn_td")->capture_default_str();
    sub->add_option("--modulus", cfg.modulus, "primitive modulus as a hex bitmask");
    sub->add_option("--workers", cfg.workers, "worker threads (default: HYPEROVALS_WORKERS or 1)");
    sub->add_option("--seed", cfg.seed, "seed for sampled checks")->capture_default_str();
    sub->add_option("--format", cfg.format, "json, csv or md")->capture_default_str();
    sub->add_option("--output,-o", cfg.output, "write the report to a file");
}

void add_source(CLI::App* sub, SourceOptions& so) {
    sub->add_option("--construction", so.construction, "os, og, od, table, coeffs, line-os, line-og, dual-table")->capture_default_str();
    sub->add_option("--d", so.d, "shift for od")->capture_default_str();
    sub->add_option("--table", so.table, "reference table 1, 2 or 3")->capture_default_str();
    sub->add_option("--row", so.row, "reference table row")->capture_default_str();
    sub->add_option("--coeffs", so.coeffs, "hex coefficients a_0,...,a_(n-1)");
    sub->add_option("--alpha", so.alpha, "carrier point for type (b), hex");
    sub->add_option("--type", so.type, "a or b")->capture_default_str();
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Translation hyperovals in Knuth planes"};
    app.name("hyperovals");
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* w = std::getenv("HYPEROVALS_WORKERS")) {
        try {
            cfg.workers = static_cast<unsigned>(std::stoul(w));
        } catch (const std::logic_error&) {
            err << "ignoring malformed HYPEROVALS_WORKERS\n";
        }
    }
    SourceOptions so;

    auto* field = app.add_subcommand("field", "field parameters and the Dickson count check");
    add_common(field, cfg);

    bool symplectic = false;
    auto* axioms = app.add_subcommand("check-axioms", "exhaustive presemifield axiom check (n <= 7)");
    add_common(axioms, cfg);
    axioms->add_flag("--symplectic", symplectic, "also require the symplectic and orthogonality identities");

    auto* verify = app.add_subcommand("verify", "check that a construction is a (line) hyperoval");
    add_common(verify, cfg);
    add_source(verify, so);

    std::string type = "a", domain = "full";
    auto* search = app.add_subcommand("search", "isomorph-free search for translation hyperovals");
    add_common(search, cfg);
    search->add_option("--type", type, "a or b")->capture_default_str();
    search->add_option("--domain", domain, "full or zero_one")->capture_default_str();

    auto* classify = app.add_subcommand("classify", "canonical form and class of one hyperoval");
    add_common(classify, cfg);
    add_source(classify, so);

    std::uint64_t pairs = 1000;
    auto* orbit = app.add_subcommand("orbit", "orbit under translations and shears");
    add_common(orbit, cfg);
    add_source(orbit, so);
    orbit->add_option("--pairs", pairs, "random member pairs checked for type (a)")->capture_default_str();

    bool compare_bent = false;
    std::uint64_t samples = 0;
    auto* design = app.add_subcommand("design", "symmetric design of a type-(a) hyperoval");
    add_common(design, cfg);
    add_source(design, so);
    design->add_flag("--compare-bent", compare_bent, "compare with the design of the spread bent function");
    design->add_option("--samples", samples, "sampled triples instead of all (0 = all)")->capture_default_str();

    std::string group = "both";
    auto* diffset = app.add_subcommand("diffset", "difference sets in G1 and G2");
    add_common(diffset, cfg);
    add_source(diffset, so);
    diffset->add_option("--group", group, "G1, G2 or both")->capture_default_str();

    std::string method = "secant";
    auto* bent = app.add_subcommand("bent", "bent function of a hyperoval through (inf)");
    add_common(bent, cfg);
    add_source(bent, so);
    bent->add_option("--method", method, "secant or spread")->capture_default_str();

    std::string golden_dir = "data/golden", out_dir;
    bool emit_golden = false;
    auto* report = app.add_subcommand("report", "reproduce the n = 5 tables against the golden fixtures");
    add_common(report, cfg);
    report->add_option("--golden", golden_dir, "golden fixture directory")->capture_default_str();
    report->add_option("--out-dir", out_dir, "write one report per table here");
    report->add_flag("--emit-golden", emit_golden, "write the golden fixtures instead of checking them");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }
    if (cfg.workers == 0) cfg.workers = 1;

    try {
        if (report->parsed()) return run_report(cfg, golden_dir, out_dir, emit_golden, out);

        const FieldContext ctx = make_field(cfg);
        const auto fmt = format_of(cfg);

        if (field->parsed()) {
            auto doc = header("field", ctx);
            doc["q"] = ctx.q();
            std::uint64_t trace_one = 0, dickson_total = 0, brute_mismatch = 0, unique_mismatch = 0, lemma_mismatch = 0;
            std::vector<int> brute(ctx.q(), 0);
            for (std::uint32_t x = 0; x < ctx.q(); ++x) {
                const FieldElement e{x};
                trace_one += static_cast<std::uint64_t>(ctx.trace(e));
                ++brute[(ctx.mul(ctx.square(e), e) + e).bits];
            }
            for (std::uint32_t t = 0; t < ctx.q(); ++t) {
                const FieldElement e{t};
                const int c = ctx.dickson3_count(e);
                dickson_total += static_cast<std::uint64_t>(c);
                if (c != brute[t]) ++brute_mismatch;
                if ((c == 1) != ctx.dickson3_unique_root(e)) ++unique_mismatch;
                if (c != ctx.dickson3_count_by_trace(e)) ++lemma_mismatch;
            }
            doc["trace_one_count"] = trace_one;
            doc["dickson_total"] = dickson_total;
            doc["dickson_brute_force_mismatches"] = brute_mismatch;
            doc["dickson_unique_root_mismatches"] = unique_mismatch;
            doc["dickson_trace_formula_mismatches"] = lemma_mismatch;
            write_output(cfg, emit_document(doc, fmt), out);
            return brute_mismatch == 0 && unique_mismatch == 0 && dickson_total == ctx.q() ? kExitOk : kExitFailure;
        }

        if (axioms->parsed()) {
            const auto s = make_plane(ctx, cfg.plane);
            const auto r = verify_presemifield(s, true);
            auto doc = header("check-axioms", ctx);
            doc["plane"] = s.name();
            doc["left_distributive"] = r.left_distributive;
            doc["right_distributive"] = r.right_distributive;
            doc["no_zero_divisors"] = r.no_zero_divisors;
            doc["commutative"] = r.commutative;
            doc["frobenius_autotopism"] = r.frobenius_autotopism;
            doc["symplectic"] = r.symplectic.value_or(false);
            doc["orthogonality"] = r.orthogonality.value_or(false);
            const bool ok = r.left_distributive && r.right_distributive && r.no_zero_divisors &&
                            (!symplectic || (r.symplectic.value_or(false) && r.orthogonality.value_or(false)));
            doc["result"] = ok ? "PASS" : "FAIL";
            write_output(cfg, emit_document(doc, fmt), out);
            return ok ? kExitOk : kExitFailure;
        }

        if (search->parsed()) {
            if (type != "a" && type != "b") throw Error(ErrorCode::BadInput, "--type must be a or b");
            if (domain != "full" && domain != "zero_one") throw Error(ErrorCode::BadInput, "--domain must be full or zero_one");
            const auto s = make_plane(ctx, cfg.plane);
            const auto r = run_search(ctx, s, type == "a" ? OvalType::A : OvalType::B,
                                      domain == "full" ? CoeffDomain::Full : CoeffDomain::ZeroOne, cfg.workers);
            write_output(cfg, emit_report(ctx, r, fmt), out);
            return kExitOk;
        }

        const Source src = resolve(ctx, cfg, so);
        const Presemifield& s = *src.plane;

        if (verify->parsed()) {
            auto doc = header("verify", ctx);
            doc["construction"] = src.label;
            doc["plane"] = s.name();
            bool ok = false;
            if (src.points) {
                doc["kind"] = "points";
                doc["size"] = src.points->size();
                ok = src.points->size() == ctx.q() + 2 && is_hyperoval(s, *src.points);
            } else {
                doc["kind"] = "lines";
                doc["size"] = src.lines->size();
                ok = src.lines->size() == ctx.q() + 2 && is_hyperoval(s, *src.lines);
            }
            doc["result"] = ok ? "PASS" : "FAIL";
            write_output(cfg, emit_document(doc, fmt), out);
            return ok ? kExitOk : kExitFailure;
        }

        const Hyperoval& o = require_points(src);

        if (classify->parsed()) {
            if (!is_hyperoval(s, o)) throw Error(ErrorCode::BadInput, "not a hyperoval");
            const auto cf = canonical_form(s, o);
            auto doc = header("classify", ctx);
            doc["construction"] = src.label;
            doc["plane"] = s.name();
            doc["digest"] = cf.digest(ctx.q());
            doc["orbit_size"] = cf.orbit_size;
            doc["stabilizer_order"] = cf.stabilizer_order;
            try {
                const auto nz = normalize(s, o);
                doc["translation_type"] = to_string(nz.type);
                doc["function"] = format_function(ctx, nz.record.coeffs, nz.type == OvalType::A ? 'x' : 'y');
                doc["alpha"] = nz.record.alpha ? ordered_json(FieldContext::to_hex(*nz.record.alpha)) : ordered_json(nullptr);
                std::vector<HyperovalRecord> one{nz.record};
                one[0].canonical_codes = cf.codes;
                if (const auto t = reference_for(ctx, s, nz.type)) match_reference(s, *t, one);
                doc["table_match"] = one[0].table_row ? ordered_json(*one[0].table_row) : ordered_json(nullptr);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NotTranslation) throw;
                doc["translation_type"] = nullptr;
            }
            write_output(cfg, emit_document(doc, fmt), out);
            return kExitOk;
        }

        if (orbit->parsed()) {
            auto doc = header("orbit", ctx);
            doc["construction"] = src.label;
            doc["plane"] = s.name();
            if (o.contains(PlanePoint::infinity())) {
                const auto members = sigma_orbit(s, o);
                std::set<std::vector<PlanePoint>> distinct;
                bool all_inf = true;
                for (const auto& m : members) {
                    distinct.insert(m.points);
                    all_inf = all_inf && m.contains(PlanePoint::infinity());
                }
                std::mt19937_64 rng(cfg.seed);
                std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
                std::map<std::size_t, std::uint64_t> sizes;
                for (std::uint64_t p = 0; p < pairs; ++p) {
                    const std::size_t i = pick(rng);
                    std::size_t j = pick(rng);
                    while (j == i) j = pick(rng);
                    std::vector<PlanePoint> common;
                    std::set_intersection(members[i].points.begin(), members[i].points.end(), members[j].points.begin(),
                                          members[j].points.end(), std::back_inserter(common));
                    ++sizes[common.size()];
                }
                doc["orbit_type"] = "a";
                doc["members"] = members.size();
                doc["distinct_members"] = distinct.size();
                doc["all_contain_infinity"] = all_inf;
                doc["sampled_pairs"] = pairs;
                doc["pair_intersections"] = histogram_text(sizes);
                const bool ok = distinct.size() == std::size_t{ctx.q()} * ctx.q() && all_inf && sizes.size() <= 1 &&
                                (sizes.empty() || sizes.begin()->first == 2);
                doc["result"] = ok ? "PASS" : "FAIL";
                write_output(cfg, emit_document(doc, fmt), out);
                return ok ? kExitOk : kExitFailure;
            }
            const auto r = orbit_intersections(s, o);
            bool values_ok = true;
            for (const auto& [k, v] : r.histogram) values_ok = values_ok && (k == 0 || k == 2 || k == 4 || k == 6);
            const bool has_six = r.histogram.count(6) > 0;
            doc["orbit_type"] = "b";
            doc["distinct_images"] = r.distinct_images;
            doc["intersections"] = histogram_text(r.histogram);
            doc["has_six"] = has_six;
            doc["six_predicted"] = r.six_predicted;
            const bool ok = values_ok && has_six == r.six_predicted;
            doc["result"] = ok ? "PASS" : "FAIL";
            write_output(cfg, emit_document(doc, fmt), out);
            return ok ? kExitOk : kExitFailure;
        }

        if (design->parsed()) {
            const auto d = build_design(s, o);
            const auto inv = design_invariants(d);
            auto doc = header("design", ctx);
            doc["construction"] = src.label;
            doc["plane"] = s.name();
            doc["v"] = d.params->v;
            doc["k"] = d.params->k;
            doc["lambda"] = d.params->lambda;
            doc["replication"] = inv.degree_checks.replication.value_or(0);
            doc["rank2"] = inv.rank2;
            if (compare_bent) {
                const auto other = development_design(spread_bent_function(s, o).indicator);
                const auto r = distinguish_designs(d, other, {samples, cfg.seed});
                doc["bent_design_rank2"] = r.rank_second;
                doc["triples_exhaustive"] = r.triples_exhaustive;
                doc["triples_design"] = histogram_text(r.triples_first);
                doc["triples_bent_design"] = histogram_text(r.triples_second);
                doc["verdict"] = r.verdict == Verdict::Distinguished ? "Distinguished" : "Inconclusive";
                doc["witness"] = r.witness;
            }
            write_output(cfg, emit_document(doc, fmt), out);
            return kExitOk;
        }

        if (diffset->parsed()) {
            if (group != "G1" && group != "G2" && group != "both") throw Error(ErrorCode::BadInput, "--group must be G1, G2 or both");
            auto doc = header("diffset", ctx);
            doc["construction"] = src.label;
            doc["plane"] = s.name();
            bool ok = true;
            for (const auto& [name, id] : {std::pair{"G1", GroupId::G1}, std::pair{"G2", GroupId::G2}}) {
                if (group != "both" && group != name) continue;
                const std::string p = name;
                const auto ds = difference_set(s, o, id);
                const auto st = group_order_stats(s, id);
                doc[p + "_size"] = ds.elements.size();
                doc[p + "_lambda"] = ds.params.lambda;
                doc[p + "_complement"] = std::to_string(ds.complement_params.v) + "," + std::to_string(ds.complement_params.k) + "," +
                                         std::to_string(ds.complement_params.lambda);
                doc[p + "_orders"] = histogram_text(st.order_histogram);
                doc[p + "_abelian"] = st.abelian;
                doc[p + "_certified"] = st.certified;
                ok = ok && st.certified;
            }
            doc["result"] = ok ? "PASS" : "FAIL";
            write_output(cfg, emit_document(doc, fmt), out);
            return ok ? kExitOk : kExitFailure;
        }

        if (bent->parsed()) {
            if (method != "secant" && method != "spread") throw Error(ErrorCode::BadInput, "--method must be secant or spread");
            const auto r = method == "secant" ? bent_from_hyperoval(s, o) : spread_bent_function(s, o);
            auto doc = header("bent", ctx);
            doc["construction"] = src.label;
            doc["plane"] = s.name();
            doc["method"] = method;
            doc["variables"] = r.variables;
            doc["weight"] = std::count(r.indicator.begin(), r.indicator.end(), std::uint8_t{1});
            doc["spectrum"] = histogram_text(r.spectrum);
            doc["is_bent"] = r.is_bent;
            write_output(cfg, emit_document(doc, fmt), out);
            return r.is_bent ? kExitOk : kExitFailure;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        const int code = exit_code_for(e.code());
        if (code == kExitUsage) err << app.help();
        return code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace hyperovals
