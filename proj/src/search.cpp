#include "hyperovals/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <thread>

namespace hyperovals {

namespace {

using Images = std::array<std::uint32_t, BitMatrix::kMaxDim>;

// Kernel-profile tests on the images of the basis under L. RightMul(j, a) gives w^j * a,
// MulBy(v, a) gives v * a.
template <class RightMul>
bool type_a_profile(int n, std::uint32_t q, const Images& L, RightMul right_mul) {
    if (gf2_rank({L.data(), static_cast<std::size_t>(n)}) != n) return false;
    Images t{};
    for (std::uint32_t a = 1; a < q; ++a) {
        for (int j = 0; j < n; ++j) t[j] = L[j] ^ right_mul(j, a);
        if (gf2_rank({t.data(), static_cast<std::size_t>(n)}) != n - 1) return false;
    }
    return true;
}

template <class MulBy>
std::uint32_t type_b_profile(int n, std::uint32_t q, const Images& L, MulBy mul_by) {
    if (gf2_rank({L.data(), static_cast<std::size_t>(n)}) != n - 1) return 0;
    Images t{};
    std::uint32_t alpha = 0;
    for (std::uint32_t a = 1; a < q; ++a) {
        for (int j = 0; j < n; ++j) t[j] = mul_by(L[j], a) ^ (std::uint32_t{1} << j);
        const int r = gf2_rank({t.data(), static_cast<std::size_t>(n)});
        if (r == n) {
            if (alpha) return 0;
            alpha = a;
        } else if (r != n - 1) {
            return 0;
        }
    }
    return alpha;
}

Images images_of(const FieldContext& ctx, const LinearizedPoly& L) {
    Images im{};
    for (int j = 0; j < ctx.n(); ++j) im[j] = linpoly_eval(ctx, L, FieldElement{std::uint32_t{1} << j}).bits;
    return im;
}

int frobenius_powers(const Presemifield& s) { return s.frobenius_autotopism() ? s.ctx().n() : 1; }

std::vector<std::uint32_t> image_codes(const Presemifield& s, const Collineation& g, const Hyperoval& o) {
    const std::uint32_t q = s.ctx().q();
    std::vector<std::uint32_t> codes;
    codes.reserve(o.size());
    for (const auto& p : o.points) codes.push_back(apply(s, g, p).code(q));
    std::sort(codes.begin(), codes.end());
    return codes;
}

bool affine_part_is_coset(const FieldContext& ctx, const std::vector<PlanePoint>& affine) {
    if (affine.size() != ctx.q()) return false;
    std::array<std::uint64_t, 64> pivot{};
    int rank = 0;
    const auto& p0 = affine.front();
    for (const auto& p : affine) {
        std::uint64_t v = (std::uint64_t{(p.x + p0.x).bits} << ctx.n()) | (p.y + p0.y).bits;
        while (v) {
            const int hb = std::bit_width(v) - 1;
            if (!pivot[hb]) {
                pivot[hb] = v;
                if (++rank > ctx.n()) return false;
                break;
            }
            v ^= pivot[hb];
        }
    }
    return rank == ctx.n();
}

// (k, c) pairs whose action sends the carrier to the least possible pair of codes.
std::vector<std::pair<int, FieldElement>> carrier_minimizers(const Presemifield& s, const std::vector<PlanePoint>& carrier) {
    const FieldContext& ctx = s.ctx();
    std::vector<std::pair<int, FieldElement>> out;
    const int powers = frobenius_powers(s);
    if (carrier[0].kind == PlanePoint::Kind::Infinity) {
        for (int k = 0; k < powers; ++k) out.emplace_back(k, carrier[1].x);
        return out;
    }
    const FieldElement z1 = carrier[0].x, z2 = carrier[1].x;
    std::uint32_t best = ctx.q();
    for (int k = 0; k < powers; ++k) best = std::min(best, ctx.frob(z1 + z2, k).bits);
    for (int k = 0; k < powers; ++k)
        if (ctx.frob(z1 + z2, k).bits == best) {
            out.emplace_back(k, z1);
            out.emplace_back(k, z2);
        }
    return out;
}

} // namespace

bool check_type_a(const Presemifield& s, const LinearizedPoly& L) {
    const FieldContext& ctx = s.ctx();
    const Images im = images_of(ctx, L);
    return type_a_profile(ctx.n(), ctx.q(), im, [&](int j, std::uint32_t a) {
        return s.mul(FieldElement{std::uint32_t{1} << j}, FieldElement{a}).bits;
    });
}

std::optional<FieldElement> check_type_b(const Presemifield& s, const LinearizedPoly& L) {
    const FieldContext& ctx = s.ctx();
    const Images im = images_of(ctx, L);
    const std::uint32_t alpha = type_b_profile(ctx.n(), ctx.q(), im, [&](std::uint32_t v, std::uint32_t a) {
        return s.mul(FieldElement{v}, FieldElement{a}).bits;
    });
    if (!alpha) return std::nullopt;
    return FieldElement{alpha};
}

std::string CanonicalForm::digest(std::uint32_t q) const {
    static constexpr char kDigits[] = "0123456789abcdef";
    const std::uint32_t max_code = plane_size(q) - 1;
    const int width = (std::bit_width(max_code) + 3) / 4;
    std::string out;
    out.reserve(codes.size() * static_cast<std::size_t>(width));
    for (std::uint32_t c : codes)
        for (int i = width - 1; i >= 0; --i) out.push_back(kDigits[(c >> (4 * i)) & 0xf]);
    return out;
}

CanonicalForm canonical_form(const Presemifield& s, const Hyperoval& o) {
    const FieldContext& ctx = s.ctx();
    const std::uint64_t q = ctx.q();
    std::vector<PlanePoint> carrier, affine;
    for (const auto& p : o.points) (p.is_affine() ? affine : carrier).push_back(p);

    CanonicalForm best;
    std::uint64_t hits = 0;
    auto consider = [&](const Collineation& g) {
        auto codes = image_codes(s, g, o);
        if (best.codes.empty() || codes < best.codes) {
            best.codes = std::move(codes);
            best.witness = g;
            hits = 1;
        } else if (codes == best.codes) {
            ++hits;
        }
    };

    if (carrier.size() == 2 && !affine.empty()) {
        // The least image contains the least carrier pair and (0, 0), so only these
        // (k, c) and translations by points of the set can reach it.
        const auto minimizers = carrier_minimizers(s, carrier);
        if (affine_part_is_coset(ctx, affine)) {
            // Every translation by a point of the coset gives the same image.
            for (const auto& [k, c] : minimizers) consider(Collineation{k, c, affine.front().x, affine.front().y});
            best.stabilizer_order = hits * q;
        } else {
            for (const auto& [k, c] : minimizers)
                for (const auto& p : affine) consider(Collineation{k, c, p.x, p.y});
            best.stabilizer_order = hits;
        }
    } else {
        for (const auto& g : enumerate_aut(s)) consider(g);
        best.stabilizer_order = hits;
    }
    best.orbit_size = aut_group_order(s) / best.stabilizer_order;
    return best;
}

namespace {

LinearizedPoly interpolate_graph(const FieldContext& ctx, const std::vector<PlanePoint>& affine, bool over_x) {
    std::vector<FieldElement> table(ctx.q());
    std::vector<bool> seen(ctx.q(), false);
    for (const auto& p : affine) {
        const FieldElement arg = over_x ? p.x : p.y;
        const FieldElement val = over_x ? p.y : p.x;
        if (seen[arg.bits]) throw Error(ErrorCode::NotTranslation, "affine part is not the graph of a function");
        seen[arg.bits] = true;
        table[arg.bits] = val;
    }
    std::vector<FieldElement> basis(static_cast<std::size_t>(ctx.n()));
    for (int j = 0; j < ctx.n(); ++j) basis[j] = table[std::uint32_t{1} << j];
    LinearizedPoly L = linpoly_interpolate(ctx, basis);
    for (std::uint32_t v = 0; v < ctx.q(); ++v)
        if (linpoly_eval(ctx, L, FieldElement{v}) != table[v])
            throw Error(ErrorCode::NotTranslation, "affine part is not additive");
    return L;
}

HyperovalRecord make_record(const Presemifield& s, OvalType type, LinearizedPoly coeffs, std::optional<FieldElement> alpha) {
    HyperovalRecord r;
    r.plane_id = s.name();
    r.type = type;
    const Hyperoval o = type == OvalType::A ? type_a_hyperoval(s, coeffs) : type_b_hyperoval(s, coeffs, *alpha);
    const CanonicalForm cf = canonical_form(s, o);
    r.coeffs = std::move(coeffs);
    r.alpha = alpha;
    r.canonical_codes = cf.codes;
    r.digest = cf.digest(s.ctx().q());
    r.orbit_size = cf.orbit_size;
    r.normalized_forms = 1;
    return r;
}

} // namespace

Normalized normalize(const Presemifield& s, const Hyperoval& o) {
    const FieldContext& ctx = s.ctx();
    std::vector<PlanePoint> carrier, affine;
    for (const auto& p : o.points) (p.is_affine() ? affine : carrier).push_back(p);
    if (carrier.size() != 2 || !affine_part_is_coset(ctx, affine))
        throw Error(ErrorCode::NotTranslation, "affine points are not a coset of an additive group of order q");

    const bool type_a = carrier[0].kind == PlanePoint::Kind::Infinity;
    const FieldElement c = type_a ? carrier[1].x : carrier[0].x;
    const Collineation g{0, c, affine.front().x, affine.front().y};
    const Hyperoval img = transform(s, g, o);
    std::vector<PlanePoint> img_affine;
    for (const auto& p : img.points)
        if (p.is_affine()) img_affine.push_back(p);

    Normalized out{type_a ? OvalType::A : OvalType::B, {}, g};
    if (type_a) {
        out.record = make_record(s, OvalType::A, interpolate_graph(ctx, img_affine, true), std::nullopt);
    } else {
        const FieldElement alpha = carrier[0].x + carrier[1].x;
        out.record = make_record(s, OvalType::B, interpolate_graph(ctx, img_affine, false), alpha);
    }
    return out;
}

namespace {

struct Survivor {
    Images coeffs{};
    std::uint32_t alpha = 0;
};

class Enumerator {
public:
    Enumerator(const Presemifield& s, const SearchOptions& opts) : s_(s), opts_(opts), n_(s.ctx().n()), q_(s.ctx().q()) {
        const FieldContext& ctx = s.ctx();
        values_ = opts.domain == CoeffDomain::Full ? q_ : 2;
        // contrib_[(i * values + c) * n + j] = c * (w^j)^(2^i)
        contrib_.resize(static_cast<std::size_t>(n_) * values_ * n_);
        for (int i = 0; i < n_; ++i)
            for (std::uint32_t c = 0; c < values_; ++c)
                for (int j = 0; j < n_; ++j)
                    contrib_[(i * values_ + c) * n_ + j] = ctx.mul(FieldElement{c}, ctx.frob(FieldElement{std::uint32_t{1} << j}, i)).bits;
        if (opts.type == OvalType::A) {
            right_.resize(static_cast<std::size_t>(q_) * n_);
            for (std::uint32_t a = 0; a < q_; ++a)
                for (int j = 0; j < n_; ++j) right_[a * n_ + j] = s.mul(FieldElement{std::uint32_t{1} << j}, FieldElement{a}).bits;
        } else {
            table_.resize(static_cast<std::size_t>(q_) * q_);
            for (std::uint32_t a = 0; a < q_; ++a)
                for (std::uint32_t v = 0; v < q_; ++v) table_[a * q_ + v] = s.mul(FieldElement{v}, FieldElement{a}).bits;
        }
    }

    // Candidates whose leading coefficient is congruent to worker modulo workers.
    std::vector<Survivor> run(unsigned worker, unsigned workers) const {
        std::vector<Survivor> out;
        Survivor cur;
        for (std::uint32_t lead = worker; lead < values_; lead += workers) {
            cur.coeffs[n_ - 1] = lead;
            Images im{};
            const std::uint32_t* row = &contrib_[((n_ - 1) * values_ + lead) * n_];
            for (int j = 0; j < n_; ++j) im[j] = row[j];
            descend(n_ - 2, im, cur, out);
        }
        return out;
    }

private:
    void descend(int level, const Images& acc, Survivor& cur, std::vector<Survivor>& out) const {
        if (level < 0) {
            test(acc, cur, out);
            return;
        }
        Images im{};
        for (std::uint32_t c = 0; c < values_; ++c) {
            const std::uint32_t* row = &contrib_[(level * values_ + c) * n_];
            for (int j = 0; j < n_; ++j) im[j] = acc[j] ^ row[j];
            cur.coeffs[level] = c;
            descend(level - 1, im, cur, out);
        }
    }

    void test(const Images& L, const Survivor& cur, std::vector<Survivor>& out) const {
        if (opts_.type == OvalType::A) {
            if (type_a_profile(n_, q_, L, [&](int j, std::uint32_t a) { return right_[a * n_ + j]; })) out.push_back(cur);
        } else {
            const std::uint32_t alpha = type_b_profile(n_, q_, L, [&](std::uint32_t v, std::uint32_t a) { return table_[a * q_ + v]; });
            if (alpha) {
                out.push_back(cur);
                out.back().alpha = alpha;
            }
        }
    }

    const Presemifield& s_;
    SearchOptions opts_;
    int n_;
    std::uint32_t q_;
    std::uint32_t values_;
    std::vector<std::uint32_t> contrib_;
    std::vector<std::uint32_t> right_;
    std::vector<std::uint32_t> table_;
};

bool coeff_less(const LinearizedPoly& a, const LinearizedPoly& b) {
    for (int i = a.n() - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

} // namespace

std::vector<HyperovalRecord> search_translation_hyperovals(const Presemifield& s, const SearchOptions& opts) {
    const FieldContext& ctx = s.ctx();
    if (opts.domain == CoeffDomain::Full && ctx.n() > 5)
        throw Error(ErrorCode::InfeasibleDomain, "full coefficient domain needs n <= 5");
    if (opts.domain == CoeffDomain::ZeroOne && ctx.n() > 11)
        throw Error(ErrorCode::InfeasibleDomain, "{0,1} coefficient domain needs n <= 11");

    const Enumerator en(s, opts);
    const unsigned workers = std::max(1u, opts.workers);
    std::vector<std::vector<Survivor>> parts(workers);
    if (workers == 1) {
        parts[0] = en.run(0, 1);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back([&, w] { parts[w] = en.run(w, workers); });
        for (auto& t : threads) t.join();
    }

    std::map<std::vector<std::uint32_t>, HyperovalRecord> classes;
    for (const auto& part : parts)
        for (const auto& sv : part) {
            LinearizedPoly L(ctx.n());
            for (int i = 0; i < ctx.n(); ++i) L[i] = FieldElement{sv.coeffs[i]};
            std::optional<FieldElement> alpha;
            if (opts.type == OvalType::B) alpha = FieldElement{sv.alpha};
            HyperovalRecord rec = make_record(s, opts.type, std::move(L), alpha);
            auto [it, inserted] = classes.try_emplace(rec.canonical_codes, rec);
            if (!inserted) {
                ++it->second.normalized_forms;
                if (coeff_less(rec.coeffs, it->second.coeffs)) {
                    rec.normalized_forms = it->second.normalized_forms;
                    it->second = std::move(rec);
                }
            }
        }

    std::vector<HyperovalRecord> out;
    out.reserve(classes.size());
    for (auto& [codes, rec] : classes) out.push_back(std::move(rec));
    return out;
}

} // namespace hyperovals
