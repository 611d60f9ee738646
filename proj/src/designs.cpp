#include "hyperovals/designs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "hyperovals/error.hpp"

namespace hyperovals {

namespace {
void require_degree(const Presemifield& s, int max_n, const char* what);
} // namespace

std::size_t Bitset::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t Bitset::and_count(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
}

SymmetricCheck check_symmetric_design(const Design& d) {
    SymmetricCheck out;
    out.symmetric = d.blocks.size() == d.v;
    if (d.blocks.empty()) return out;

    const std::uint64_t k = d.blocks.front().count();
    bool same_k = true;
    for (const auto& b : d.blocks) same_k = same_k && b.count() == k;
    if (same_k) out.block_size = k;

    if (d.blocks.size() > 1) {
        const std::uint64_t lambda = d.blocks[0].and_count(d.blocks[1]);
        bool same = true;
        for (std::size_t i = 0; i < d.blocks.size() && same; ++i)
            for (std::size_t j = i + 1; j < d.blocks.size(); ++j)
                if (d.blocks[i].and_count(d.blocks[j]) != lambda) {
                    same = false;
                    break;
                }
        if (same) out.intersection = lambda;
    }

    std::vector<std::uint64_t> rep(d.v, 0);
    for (const auto& b : d.blocks)
        for (std::uint32_t p = 0; p < d.v; ++p)
            if (b.test(p)) ++rep[p];
    if (std::all_of(rep.begin(), rep.end(), [&](auto r) { return r == rep.front(); })) out.replication = rep.front();
    return out;
}

LinearizedPoly type_a_function(const Presemifield& s, const Hyperoval& o) {
    const FieldContext& ctx = s.ctx();
    const std::uint32_t q = ctx.q();
    if (o.size() != q + 2 || !o.contains(PlanePoint::infinity()) || !o.contains(PlanePoint::at_infinity(kZero)))
        throw Error(ErrorCode::NotTypeA, "hyperoval is not in type-(a) form");
    std::vector<FieldElement> value(q);
    std::vector<bool> seen(q, false);
    for (const auto& p : o.points) {
        if (!p.is_affine()) continue;
        if (seen[p.x.bits]) throw Error(ErrorCode::NotTypeA, "affine part is not a graph over x");
        seen[p.x.bits] = true;
        value[p.x.bits] = p.y;
    }
    std::vector<FieldElement> basis(static_cast<std::size_t>(ctx.n()));
    for (int i = 0; i < ctx.n(); ++i) basis[static_cast<std::size_t>(i)] = value[ctx.omega_pow(i).bits];
    LinearizedPoly f = linpoly_interpolate(ctx, basis);
    for (std::uint32_t x = 0; x < q; ++x)
        if (!seen[x] || linpoly_eval(ctx, f, FieldElement{x}) != value[x]) throw Error(ErrorCode::NotTypeA, "affine part is not additive");
    if (!check_type_a(s, f)) throw Error(ErrorCode::NotTypeA, "function fails the type-(a) condition");
    return f;
}

TypeBShape type_b_shape(const Presemifield& s, const Hyperoval& o) {
    const FieldContext& ctx = s.ctx();
    const std::uint32_t q = ctx.q();
    if (o.size() != q + 2 || o.contains(PlanePoint::infinity()) || !o.contains(PlanePoint::at_infinity(kZero)))
        throw Error(ErrorCode::NotTypeB, "hyperoval is not in type-(b) form");
    std::optional<FieldElement> alpha;
    std::vector<FieldElement> value(q);
    std::vector<bool> seen(q, false);
    for (const auto& p : o.points) {
        if (p.kind == PlanePoint::Kind::AtInfinity) {
            if (!p.x.is_zero()) alpha = p.x;
            continue;
        }
        if (seen[p.y.bits]) throw Error(ErrorCode::NotTypeB, "affine part is not a graph over y");
        seen[p.y.bits] = true;
        value[p.y.bits] = p.x;
    }
    if (!alpha) throw Error(ErrorCode::NotTypeB, "missing carrier point");
    std::vector<FieldElement> basis(static_cast<std::size_t>(ctx.n()));
    for (int i = 0; i < ctx.n(); ++i) basis[static_cast<std::size_t>(i)] = value[ctx.omega_pow(i).bits];
    LinearizedPoly f = linpoly_interpolate(ctx, basis);
    for (std::uint32_t y = 0; y < q; ++y)
        if (!seen[y] || linpoly_eval(ctx, f, FieldElement{y}) != value[y]) throw Error(ErrorCode::NotTypeB, "affine part is not additive");
    const auto carrier = check_type_b(s, f);
    if (!carrier || *carrier != *alpha) throw Error(ErrorCode::NotTypeB, "function fails the type-(b) condition");

    FieldElement theta;
    for (std::uint32_t y = 1; y < q; ++y)
        if (value[y].is_zero()) theta = FieldElement{y};
    return {std::move(f), *alpha, theta};
}

std::vector<Hyperoval> sigma_orbit(const Presemifield& s, const Hyperoval& o) {
    const FieldContext& ctx = s.ctx();
    const std::uint32_t q = ctx.q();
    const LinearizedPoly f = type_a_function(s, o);
    std::vector<FieldElement> fx(q);
    for (std::uint32_t x = 0; x < q; ++x) fx[x] = linpoly_eval(ctx, f, FieldElement{x});

    std::vector<Hyperoval> out;
    out.reserve(static_cast<std::size_t>(q) * q);
    for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
            std::vector<PlanePoint> pts{PlanePoint::infinity(), PlanePoint::at_infinity(FieldElement{c})};
            pts.reserve(q + 2);
            for (std::uint32_t x = 0; x < q; ++x)
                pts.push_back(PlanePoint::affine(FieldElement{x}, fx[x] + s.mul(FieldElement{x}, FieldElement{c}) + FieldElement{d}));
            out.emplace_back(std::move(pts));
        }
    return out;
}

bool six_intersection_condition(const Presemifield& s, const TypeBShape& shape) {
    const FieldContext& ctx = s.ctx();
    for (std::uint32_t v = 0; v < ctx.q(); ++v)
        if (s.mul(linpoly_eval(ctx, shape.f, FieldElement{v}), shape.alpha) == shape.theta) return true;
    return false;
}

OrbitIntersections orbit_intersections(const Presemifield& s, const Hyperoval& o) {
    require_degree(s, 7, "orbit intersection enumeration");
    const TypeBShape shape = type_b_shape(s, o);
    const std::uint32_t q = s.ctx().q();

    std::vector<std::uint32_t> base;
    for (const auto& p : o.points) base.push_back(p.code(q));
    std::sort(base.begin(), base.end());

    std::set<std::vector<std::uint32_t>> images;
    for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                const Collineation g{0, FieldElement{c}, FieldElement{a}, FieldElement{b}};
                std::vector<std::uint32_t> codes;
                codes.reserve(o.size());
                for (const auto& p : o.points) codes.push_back(apply(s, g, p).code(q));
                std::sort(codes.begin(), codes.end());
                images.insert(std::move(codes));
            }

    OrbitIntersections out;
    out.distinct_images = images.size();
    for (const auto& img : images) {
        if (img == base) continue;
        std::vector<std::uint32_t> common;
        std::set_intersection(img.begin(), img.end(), base.begin(), base.end(), std::back_inserter(common));
        ++out.histogram[static_cast<std::uint32_t>(common.size())];
    }
    out.six_predicted = six_intersection_condition(s, shape);
    return out;
}

namespace {

std::uint32_t line_index(const PlaneLine& l, std::uint32_t q) { return l.a.bits * q + l.b.bits; }

/// Sloped secants of the point set as a q^2-bit set.
Bitset sloped_secants(const Presemifield& s, const std::vector<PlanePoint>& pts) {
    const std::uint32_t q = s.ctx().q();
    const auto counts = line_counts(s, pts);
    Bitset out(static_cast<std::size_t>(q) * q);
    for (std::uint32_t i = 0; i < q * q; ++i)
        if (counts[1 + q + i] == 2) out.set(i);
    return out;
}

void require_degree(const Presemifield& s, int max_n, const char* what) {
    if (s.ctx().n() > max_n) throw Error(ErrorCode::InfeasibleDomain, std::string(what) + " needs n <= " + std::to_string(max_n));
}

DesignParams expected_params(std::uint64_t q) { return {q * q, q * q / 2 + q / 2, q * q / 4 + q / 2}; }

} // namespace

Design build_design(const Presemifield& s, const Hyperoval& o) {
    require_degree(s, 5, "design verification");
    const std::uint32_t q = s.ctx().q();
    Design d;
    d.v = q * q;
    for (const auto& member : sigma_orbit(s, o)) d.blocks.push_back(sloped_secants(s, member.points));

    const auto check = check_symmetric_design(d);
    const DesignParams want = expected_params(q);
    if (!check.ok() || *check.block_size != want.k || *check.intersection != want.lambda)
        throw Error(ErrorCode::ParameterMismatch, "orbit design does not have the expected parameters");
    d.params = want;
    return d;
}

Collineation to_collineation(const Presemifield& s, const GroupElement& g) {
    if (g.group == GroupId::G1) return {0, g.second, kZero, g.first};
    return {0, g.first, g.first, g.second + s.mul(g.first, g.first)};
}

namespace {

GroupElement from_collineation(const Presemifield& s, GroupId which, const Collineation& c) {
    if (c.k != 0) throw Error(ErrorCode::BadInput, "element outside the group");
    if (which == GroupId::G1) {
        if (!c.a.is_zero()) throw Error(ErrorCode::BadInput, "element outside G1");
        return {GroupId::G1, c.b, c.c};
    }
    if (c.a != c.c) throw Error(ErrorCode::BadInput, "element outside G2");
    return {GroupId::G2, c.a, c.b + s.mul(c.a, c.a)};
}

} // namespace

GroupElement group_mul(const Presemifield& s, const GroupElement& g, const GroupElement& h) {
    if (g.group != h.group) throw Error(ErrorCode::BadInput, "elements of different groups");
    return from_collineation(s, g.group, compose(s, to_collineation(s, g), to_collineation(s, h)));
}

GroupElement group_inv(const Presemifield& s, const GroupElement& g) {
    return from_collineation(s, g.group, invert(s, to_collineation(s, g)));
}

std::uint32_t group_index(const Presemifield& s, const GroupElement& g) {
    const PlaneLine l = apply(s, to_collineation(s, g), PlaneLine::sloped(kZero, kZero));
    return line_index(l, s.ctx().q());
}

std::vector<GroupElement> group_elements(const Presemifield& s, GroupId which) {
    const std::uint32_t q = s.ctx().q();
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(q) * q);
    for (std::uint32_t u = 0; u < q; ++u)
        for (std::uint32_t w = 0; w < q; ++w) out.push_back({which, FieldElement{u}, FieldElement{w}});
    return out;
}

std::optional<std::uint64_t> difference_lambda(const Presemifield& s, std::span<const GroupElement> set) {
    const std::uint32_t q = s.ctx().q();
    std::vector<Collineation> elems, inverses;
    for (const auto& g : set) {
        elems.push_back(to_collineation(s, g));
        inverses.push_back(invert(s, elems.back()));
    }
    const PlaneLine base = PlaneLine::sloped(kZero, kZero);
    std::vector<std::uint64_t> hits(static_cast<std::size_t>(q) * q, 0);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j) {
            if (i == j) continue;
            ++hits[line_index(apply(s, compose(s, elems[i], inverses[j]), base), q)];
        }
    if (hits[0] != 0) return std::nullopt;
    for (std::size_t i = 2; i < hits.size(); ++i)
        if (hits[i] != hits[1]) return std::nullopt;
    return hits.size() > 1 ? hits[1] : 0;
}

DifferenceSet difference_set(const Presemifield& s, const Hyperoval& o, GroupId which) {
    if (!o.contains(PlanePoint::infinity())) throw Error(ErrorCode::InfinityNotInOval, "hyperoval does not contain (inf)");
    require_degree(s, 5, "difference set verification");
    const std::uint64_t q = s.ctx().q();
    const Bitset secant = sloped_secants(s, o.points);

    DifferenceSet out;
    out.group = which;
    std::vector<GroupElement> complement;
    for (const auto& g : group_elements(s, which)) {
        if (secant.test(group_index(s, g)))
            out.elements.push_back(g);
        else
            complement.push_back(g);
    }

    const auto lambda = difference_lambda(s, out.elements);
    const auto lambda_c = difference_lambda(s, complement);
    if (!lambda || !lambda_c) throw Error(ErrorCode::NotADifferenceSet, "pair enumeration found unequal counts");
    out.params = {q * q, out.elements.size(), *lambda};
    out.complement_params = {q * q, complement.size(), *lambda_c};
    const DesignParams want = expected_params(q);
    const DesignParams want_c{q * q, q * q / 2 - q / 2, q * q / 4 - q / 2};
    if (out.params != want || out.complement_params != want_c)
        throw Error(ErrorCode::NotADifferenceSet, "difference set parameters differ from the expected ones");
    return out;
}

GroupOrderStats group_order_stats(const Presemifield& s, GroupId which) {
    require_degree(s, 5, "commutator check");
    const auto elems = group_elements(s, which);
    const GroupElement id{which, kZero, kZero};
    GroupOrderStats out;
    out.order = elems.size();
    out.abelian = true;
    for (const auto& g : elems) {
        int ord = 1;
        GroupElement p = g;
        while (p != id) {
            p = group_mul(s, p, g);
            ++ord;
        }
        ++out.order_histogram[ord];
        out.exponent = std::max(out.exponent, ord);
        if (ord <= 2) ++out.involutions_and_identity;
    }
    for (std::size_t i = 0; i < elems.size() && out.abelian; ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (group_mul(s, elems[i], elems[j]) != group_mul(s, elems[j], elems[i])) {
                out.abelian = false;
                break;
            }

    const int n = s.ctx().n();
    const bool full_order = out.order == (std::uint64_t{1} << (2 * n));
    if (which == GroupId::G1)
        out.certified = full_order && out.abelian && out.exponent == 2;
    else
        out.certified = full_order && out.abelian && out.exponent == 4 && out.involutions_and_identity == (std::uint64_t{1} << n);
    return out;
}

std::vector<std::int64_t> walsh_spectrum(const std::vector<std::uint8_t>& f) {
    if (f.empty() || !std::has_single_bit(f.size())) throw Error(ErrorCode::WrongSize, "truth table length is not a power of two");
    std::vector<std::int64_t> w(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) w[i] = f[i] ? -1 : 1;
    for (std::size_t h = 1; h < w.size(); h <<= 1)
        for (std::size_t i = 0; i < w.size(); i += 2 * h)
            for (std::size_t j = i; j < i + h; ++j) {
                const auto x = w[j], y = w[j + h];
                w[j] = x + y;
                w[j + h] = x - y;
            }
    return w;
}

namespace {

BentReport finish_bent(int n, std::vector<std::uint8_t> f) {
    BentReport out;
    out.variables = 2 * n;
    const auto w = walsh_spectrum(f);
    const std::int64_t r = std::int64_t{1} << n;
    out.is_bent = true;
    for (auto x : w) {
        ++out.spectrum[x];
        if (x != r && x != -r) out.is_bent = false;
    }
    out.indicator = std::move(f);
    return out;
}

} // namespace

BentReport bent_from_hyperoval(const Presemifield& s, const Hyperoval& o) {
    if (!o.contains(PlanePoint::infinity())) throw Error(ErrorCode::InfinityNotInOval, "hyperoval does not contain (inf)");
    const int n = s.ctx().n();
    const std::uint32_t q = s.ctx().q();
    const Bitset secant = sloped_secants(s, o.points);
    std::vector<std::uint8_t> f(static_cast<std::size_t>(q) * q, 0);
    for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t b = 0; b < q; ++b) f[(c << n) | b] = secant.test(c * q + b) ? 1 : 0;
    return finish_bent(n, std::move(f));
}

BentReport spread_bent_function(const Presemifield& s, const Hyperoval& o) {
    if (!o.contains(PlanePoint::infinity())) throw Error(ErrorCode::InfinityNotInOval, "hyperoval does not contain (inf)");
    if (!o.contains(PlanePoint::at_infinity(kZero))) throw Error(ErrorCode::BadInput, "hyperoval does not contain (0)");
    const FieldContext& ctx = s.ctx();
    const int n = ctx.n();
    const std::uint32_t q = ctx.q();

    std::vector<FieldElement> F(q);
    for (const auto& p : o.points)
        if (p.is_affine()) F[p.x.bits] = p.y;

    std::vector<std::uint8_t> f(static_cast<std::size_t>(q) * q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
        const BitMatrix m = trace_adjoint(ctx, s.left_mul_matrix(FieldElement{a}));
        for (std::uint32_t x = 1; x < q; ++x) {
            const FieldElement y = m.apply(FieldElement{x});
            f[(x << n) | y.bits] = static_cast<std::uint8_t>(ctx.trace(ctx.mul(FieldElement{x}, F[a])));
        }
    }
    return finish_bent(n, std::move(f));
}

Design development_design(const std::vector<std::uint8_t>& f) {
    const std::size_t v = f.size();
    if (v < 4 || !std::has_single_bit(v)) throw Error(ErrorCode::WrongSize, "truth table length is not a power of two");
    const auto q = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)) + 0.5);
    if (q * q != v) throw Error(ErrorCode::WrongSize, "truth table length is not an even power of two");
    const std::uint64_t k = q * q / 2 + q / 2;

    std::vector<std::uint32_t> support, rest;
    for (std::uint32_t i = 0; i < v; ++i) (f[i] ? support : rest).push_back(i);
    const auto& base = support.size() == k ? support : rest;
    if (base.size() != k) throw Error(ErrorCode::ParameterMismatch, "support size is not q^2/2 + q/2 or its complement");

    Design d;
    d.v = static_cast<std::uint32_t>(v);
    d.blocks.reserve(v);
    for (std::uint32_t g = 0; g < v; ++g) {
        Bitset b(v);
        for (auto x : base) b.set(g ^ x);
        d.blocks.push_back(std::move(b));
    }
    const auto check = check_symmetric_design(d);
    if (check.ok() && *check.block_size == k) d.params = DesignParams{v, k, *check.intersection};
    return d;
}

std::uint32_t gf2_rank_rows(std::vector<Bitset> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::uint32_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].test(c)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const auto pw = rows[rank].words();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || !rows[r].test(c)) continue;
            auto rw = rows[r].words();
            for (std::size_t i = c / 64; i < rw.size(); ++i) rw[i] ^= pw[i];
        }
        ++rank;
    }
    return rank;
}

DesignInvariants design_invariants(const Design& d) { return {gf2_rank_rows(d.blocks), check_symmetric_design(d)}; }

TripleInvariants triple_invariants(const Design& d, const TripleOptions& opts) {
    TripleInvariants out;
    const std::size_t b = d.blocks.size();
    if (b < 3) return out;
    if (opts.samples == 0) {
        out.exhaustive = true;
        std::vector<std::uint64_t> triples(d.v + 1, 0), hist(d.v + 1, 0);
        const std::size_t words = d.blocks.front().words().size();
        std::vector<std::uint64_t> pair(words);
        for (std::size_t i = 0; i < b; ++i) {
            const auto wi = d.blocks[i].words();
            for (std::size_t j = i + 1; j < b; ++j) {
                const auto wj = d.blocks[j].words();
                for (std::size_t w = 0; w < words; ++w) pair[w] = wi[w] & wj[w];
                for (std::size_t k = 0; k < b; ++k) {
                    if (k == i || k == j) continue;
                    const auto wk = d.blocks[k].words();
                    std::uint64_t c = 0;
                    for (std::size_t w = 0; w < words; ++w) c += static_cast<std::uint64_t>(std::popcount(pair[w] & wk[w]));
                    ++hist[c];
                    if (k > j) ++triples[c];
                }
                PairProfile profile;
                for (std::size_t c = 0; c < hist.size(); ++c)
                    if (hist[c]) {
                        profile.emplace_back(c, hist[c]);
                        hist[c] = 0;
                    }
                ++out.pair_profiles[std::move(profile)];
            }
        }
        for (std::size_t c = 0; c < triples.size(); ++c)
            if (triples[c]) out.triples[c] = triples[c];
        return out;
    }
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, b - 1);
    for (std::uint64_t t = 0; t < opts.samples; ++t) {
        std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
        while (j == i) j = pick(rng);
        while (k == i || k == j) k = pick(rng);
        const auto wi = d.blocks[i].words(), wj = d.blocks[j].words(), wk = d.blocks[k].words();
        std::uint64_t c = 0;
        for (std::size_t w = 0; w < wi.size(); ++w) c += static_cast<std::uint64_t>(std::popcount(wi[w] & wj[w] & wk[w]));
        ++out.triples[c];
    }
    return out;
}

std::map<std::uint64_t, std::uint64_t> triple_distribution(const Design& d, const TripleOptions& opts) {
    return triple_invariants(d, opts).triples;
}

DistinguishResult distinguish_designs(const Design& d1, const Design& d2, const TripleOptions& opts) {
    if (d1.v != d2.v || d1.blocks.size() != d2.blocks.size())
        throw Error(ErrorCode::ParameterMismatch, "designs have different point or block counts");
    const auto c1 = check_symmetric_design(d1);
    const auto c2 = check_symmetric_design(d2);
    if (c1.block_size != c2.block_size || c1.intersection != c2.intersection || (d1.params && d2.params && *d1.params != *d2.params))
        throw Error(ErrorCode::ParameterMismatch, "designs have different parameters");

    DistinguishResult out;
    out.rank_first = gf2_rank_rows(d1.blocks);
    out.rank_second = gf2_rank_rows(d2.blocks);
    if (out.rank_first != out.rank_second) {
        out.verdict = Verdict::Distinguished;
        out.witness = "rank2 " + std::to_string(out.rank_first) + " vs " + std::to_string(out.rank_second);
        return out;
    }
    const auto t1 = triple_invariants(d1, opts);
    const auto t2 = triple_invariants(d2, opts);
    out.triples_exhaustive = t1.exhaustive;
    out.triples_first = t1.triples;
    out.triples_second = t2.triples;
    out.pair_profiles_first = t1.pair_profiles.size();
    out.pair_profiles_second = t2.pair_profiles.size();
    if (!out.triples_exhaustive) return out;
    if (t1.triples != t2.triples) {
        out.verdict = Verdict::Distinguished;
        out.witness = "triple intersection distribution";
    } else if (t1.pair_profiles != t2.pair_profiles) {
        out.verdict = Verdict::Distinguished;
        out.witness = "pair profile multiset (" + std::to_string(out.pair_profiles_first) + " vs " +
                      std::to_string(out.pair_profiles_second) + " distinct profiles)";
    }
    return out;
}

Design permute_design(const Design& d, std::span<const std::uint32_t> point_perm, std::span<const std::uint32_t> block_perm) {
    if (point_perm.size() != d.v || block_perm.size() != d.blocks.size()) throw Error(ErrorCode::WrongSize, "permutation size mismatch");
    Design out;
    out.v = d.v;
    out.params = d.params;
    out.blocks.reserve(d.blocks.size());
    for (auto bi : block_perm) {
        const Bitset& src = d.blocks[bi];
        Bitset b(d.v);
        for (std::uint32_t p = 0; p < d.v; ++p)
            if (src.test(p)) b.set(point_perm[p]);
        out.blocks.push_back(std::move(b));
    }
    return out;
}

} // namespace hyperovals
