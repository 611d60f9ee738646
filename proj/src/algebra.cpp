#include "hyperovals/algebra.hpp"

#include <bit>

namespace hyperovals {

int gf2_rank(std::span<const std::uint32_t> rows) {
    std::array<std::uint32_t, 32> pivot{};
    int rank = 0;
    for (std::uint32_t v : rows) {
        while (v) {
            const int hb = std::bit_width(v) - 1;
            if (!pivot[hb]) {
                pivot[hb] = v;
                ++rank;
                break;
            }
            v ^= pivot[hb];
        }
    }
    return rank;
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n);
    for (int i = 0; i < n; ++i) m.rows_[i] = std::uint32_t{1} << i;
    return m;
}

BitMatrix BitMatrix::from_images(std::span<const FieldElement> images) {
    BitMatrix m(static_cast<int>(images.size()));
    for (std::size_t i = 0; i < images.size(); ++i) m.rows_[i] = images[i].bits;
    return m;
}

FieldElement BitMatrix::apply(FieldElement x) const {
    std::uint32_t r = 0;
    for (std::uint32_t b = x.bits; b; b &= b - 1) r ^= rows_[std::countr_zero(b)];
    return FieldElement{r};
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (get(i, j)) t.rows_[j] |= std::uint32_t{1} << i;
    return t;
}

std::vector<FieldElement> BitMatrix::kernel() const {
    // Reduce (row_i | e_i); rows that vanish carry kernel vectors in their tag.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> work;
    for (int i = 0; i < n_; ++i) work.emplace_back(rows_[i], std::uint32_t{1} << i);
    std::vector<std::uint32_t> basis;
    for (int col = 0; col < n_; ++col) {
        const std::uint32_t bit = std::uint32_t{1} << col;
        auto pivot = work.end();
        for (auto it = work.begin(); it != work.end(); ++it)
            if (it->first & bit) {
                pivot = it;
                break;
            }
        if (pivot == work.end()) continue;
        const auto p = *pivot;
        work.erase(pivot);
        for (auto& w : work)
            if (w.first & bit) {
                w.first ^= p.first;
                w.second ^= p.second;
            }
    }
    for (const auto& w : work) basis.push_back(w.second);

    std::vector<FieldElement> out;
    out.reserve(std::size_t{1} << basis.size());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << basis.size()); ++mask) {
        std::uint32_t v = 0;
        for (std::size_t k = 0; k < basis.size(); ++k)
            if ((mask >> k) & 1u) v ^= basis[k];
        out.push_back(FieldElement{v});
    }
    return out;
}

BitMatrix BitMatrix::inverse() const {
    BitMatrix a = *this;
    BitMatrix inv = identity(n_);
    for (int col = 0; col < n_; ++col) {
        const std::uint32_t bit = std::uint32_t{1} << col;
        int pivot = -1;
        for (int r = col; r < n_; ++r)
            if (a.rows_[r] & bit) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Error(ErrorCode::DegeneratePresemifield, "matrix is singular");
        std::swap(a.rows_[col], a.rows_[pivot]);
        std::swap(inv.rows_[col], inv.rows_[pivot]);
        for (int r = 0; r < n_; ++r)
            if (r != col && (a.rows_[r] & bit)) {
                a.rows_[r] ^= a.rows_[col];
                inv.rows_[r] ^= inv.rows_[col];
            }
    }
    return inv;
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix s(a.n_);
    for (int i = 0; i < a.n_; ++i) s.rows_[i] = a.rows_[i] ^ b.rows_[i];
    return s;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix p(a.n_);
    for (int i = 0; i < a.n_; ++i) p.rows_[i] = b.apply(FieldElement{a.rows_[i]}).bits;
    return p;
}

bool operator==(const BitMatrix& a, const BitMatrix& b) {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i)
        if (a.rows_[i] != b.rows_[i]) return false;
    return true;
}

LinearizedPoly LinearizedPoly::monomial(int n, int i, FieldElement c) {
    LinearizedPoly p(n);
    p[i] = c;
    return p;
}

LinearizedPoly operator+(const LinearizedPoly& a, const LinearizedPoly& b) {
    LinearizedPoly s(a.n());
    for (int i = 0; i < a.n(); ++i) s[i] = a[i] + b[i];
    return s;
}

FieldElement linpoly_eval(const FieldContext& ctx, const LinearizedPoly& L, FieldElement x) {
    FieldElement acc;
    FieldElement power = x;
    for (int i = 0; i < L.n(); ++i) {
        acc += ctx.mul(L[i], power);
        power = ctx.square(power);
    }
    return acc;
}

LinearizedPoly adjoint(const FieldContext& ctx, const LinearizedPoly& L) {
    const int n = L.n();
    LinearizedPoly out(n);
    for (int i = 0; i < n; ++i) {
        const int k = (n - i) % n;
        out[k] = ctx.frob(L[i], k);
    }
    return out;
}

LinearizedPoly linpoly_interpolate(const FieldContext& ctx, std::span<const FieldElement> basis_images) {
    const int n = ctx.n();
    if (static_cast<int>(basis_images.size()) != n)
        throw Error(ErrorCode::BadInput, "need one image per basis element");
    // Moore system: sum_i a_i (w^j)^(2^i) = f_j.
    std::vector<std::vector<FieldElement>> m(static_cast<std::size_t>(n), std::vector<FieldElement>(static_cast<std::size_t>(n + 1)));
    for (int j = 0; j < n; ++j) {
        const FieldElement b{std::uint32_t{1} << j};
        for (int i = 0; i < n; ++i) m[j][i] = ctx.frob(b, i);
        m[j][n] = basis_images[static_cast<std::size_t>(j)];
    }
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        while (m[pivot][col].is_zero()) ++pivot;
        std::swap(m[col], m[pivot]);
        const FieldElement inv = ctx.inv(m[col][col]);
        for (int c = col; c <= n; ++c) m[col][c] = ctx.mul(m[col][c], inv);
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            const FieldElement f = m[r][col];
            for (int c = col; c <= n; ++c) m[r][c] += ctx.mul(f, m[col][c]);
        }
    }
    LinearizedPoly L(n);
    for (int i = 0; i < n; ++i) L[i] = m[i][n];
    return L;
}

BitMatrix linpoly_matrix(const FieldContext& ctx, const LinearizedPoly& L) {
    BitMatrix m(ctx.n());
    for (int i = 0; i < ctx.n(); ++i) m.set_row(i, linpoly_eval(ctx, L, FieldElement{std::uint32_t{1} << i}).bits);
    return m;
}

LinpolyAnalysis linpoly_analyze(const FieldContext& ctx, const LinearizedPoly& L) {
    LinpolyAnalysis a;
    a.matrix = linpoly_matrix(ctx, L);
    a.kernel_size = a.matrix.kernel_size();
    a.map_class = a.kernel_size == 1 ? MapClass::Permutation : a.kernel_size == 2 ? MapClass::TwoToOne : MapClass::Other;
    return a;
}

BitMatrix trace_gram(const FieldContext& ctx) {
    BitMatrix g(ctx.n());
    for (int i = 0; i < ctx.n(); ++i) {
        std::uint32_t row = 0;
        for (int j = 0; j < ctx.n(); ++j)
            if (ctx.trace(ctx.omega_pow(i + j))) row |= std::uint32_t{1} << j;
        g.set_row(i, row);
    }
    return g;
}

BitMatrix trace_adjoint(const FieldContext& ctx, const BitMatrix& m) {
    const BitMatrix g = trace_gram(ctx);
    return g * m.transpose() * g.inverse();
}

// ---------------------------------------------------------------------------

Presemifield::Presemifield(FieldContext ctx, PresemifieldKind kind, std::string name)
    : ctx_(std::move(ctx)), kind_(kind), name_(std::move(name)) {}

Presemifield Presemifield::knuth(const FieldContext& ctx) {
    Presemifield s(ctx, PresemifieldKind::KnuthKn, "kn");
    s.build_table();
    return s;
}

Presemifield Presemifield::knuth_td(const FieldContext& ctx) {
    Presemifield s(ctx, PresemifieldKind::KnuthKnTD, "kn_td");
    s.build_table();
    return s;
}

Presemifield Presemifield::from_matrices(const FieldContext& ctx, std::vector<BitMatrix> right_mul, std::string name) {
    if (ctx.n() > 11) throw Error(ErrorCode::UnsupportedDegree, "matrix presemifields need n <= 11");
    if (right_mul.size() != ctx.q()) throw Error(ErrorCode::BadInput, "need one matrix per field element");
    for (const auto& m : right_mul)
        if (m.n() != ctx.n()) throw Error(ErrorCode::BadInput, "matrix dimension differs from n");
    Presemifield s(ctx, PresemifieldKind::MatrixFamily, std::move(name));
    s.matrices_ = std::make_shared<const std::vector<BitMatrix>>(std::move(right_mul));
    s.build_table();
    bool frob = true;
    for (std::uint32_t x = 0; x < ctx.q() && frob; ++x)
        for (std::uint32_t y = 0; y < ctx.q(); ++y) {
            const FieldElement fx{x}, fy{y};
            if (ctx.square(s.mul(fx, fy)) != s.mul(ctx.square(fx), ctx.square(fy))) {
                frob = false;
                break;
            }
        }
    s.frobenius_autotopism_ = frob;
    return s;
}

void Presemifield::build_table() {
    if (ctx_.n() > 7) return;
    const std::uint32_t q = ctx_.q();
    std::vector<std::uint32_t> t(static_cast<std::size_t>(q) * q);
    for (std::uint32_t x = 0; x < q; ++x)
        for (std::uint32_t y = 0; y < q; ++y) t[x * q + y] = mul_formula(FieldElement{x}, FieldElement{y}).bits;
    table_ = std::make_shared<const std::vector<std::uint32_t>>(std::move(t));
}

FieldElement Presemifield::mul_formula(FieldElement x, FieldElement y) const {
    switch (kind_) {
    case PresemifieldKind::KnuthKn: {
        FieldElement corr;
        if (ctx_.trace(x)) corr += y;
        if (ctx_.trace(y)) corr += x;
        return ctx_.mul(x, y) + ctx_.square(corr);
    }
    case PresemifieldKind::KnuthKnTD: {
        FieldElement r = ctx_.mul(x, y);
        if (ctx_.trace(x)) r += ctx_.sqrt(y);
        return r + ctx_.trace_elem(ctx_.mul(ctx_.square(x), y));
    }
    case PresemifieldKind::MatrixFamily:
        return (*matrices_)[y.bits].apply(x);
    }
    return kZero;
}

FieldElement Presemifield::mul(FieldElement x, FieldElement y) const {
    if (table_) return FieldElement{(*table_)[x.bits * ctx_.q() + y.bits]};
    return mul_formula(x, y);
}

BitMatrix Presemifield::right_mul_matrix(FieldElement a) const {
    if (matrices_) return (*matrices_)[a.bits];
    BitMatrix m(ctx_.n());
    for (int i = 0; i < ctx_.n(); ++i) m.set_row(i, mul(FieldElement{std::uint32_t{1} << i}, a).bits);
    return m;
}

BitMatrix Presemifield::left_mul_matrix(FieldElement a) const {
    BitMatrix m(ctx_.n());
    for (int i = 0; i < ctx_.n(); ++i) m.set_row(i, mul(a, FieldElement{std::uint32_t{1} << i}).bits);
    return m;
}

Presemifield derive_presemifield(const Presemifield& s, Derivation which) {
    const FieldContext& ctx = s.ctx();
    std::vector<BitMatrix> mats;
    mats.reserve(ctx.q());
    std::string name;
    if (which == Derivation::Transpose) {
        const BitMatrix g = trace_gram(ctx);
        const BitMatrix g_inv = g.inverse();
        for (std::uint32_t a = 0; a < ctx.q(); ++a) mats.push_back(g * s.right_mul_matrix(FieldElement{a}).transpose() * g_inv);
        name = s.name() + "_t";
    } else {
        for (std::uint32_t a = 0; a < ctx.q(); ++a) mats.push_back(s.left_mul_matrix(FieldElement{a}));
        name = s.name() + "_d";
    }
    for (std::uint32_t a = 1; a < ctx.q(); ++a)
        if (mats[a].rank() != ctx.n())
            throw Error(ErrorCode::DegeneratePresemifield, "R_a singular for a = " + FieldContext::to_hex(FieldElement{a}));
    return Presemifield::from_matrices(ctx, std::move(mats), std::move(name));
}

bool PresemifieldReport::ok() const {
    return left_distributive && right_distributive && no_zero_divisors && symplectic.value_or(true) && orthogonality.value_or(true);
}

PresemifieldReport verify_presemifield(const Presemifield& s, bool check_symplectic) {
    const FieldContext& ctx = s.ctx();
    if (ctx.n() > 7) throw Error(ErrorCode::InfeasibleDomain, "exhaustive triple scan needs n <= 7");
    const std::uint32_t q = ctx.q();
    std::vector<std::uint32_t> t(static_cast<std::size_t>(q) * q);
    for (std::uint32_t x = 0; x < q; ++x)
        for (std::uint32_t y = 0; y < q; ++y) t[x * q + y] = s.mul(FieldElement{x}, FieldElement{y}).bits;
    auto m = [&](std::uint32_t x, std::uint32_t y) { return t[x * q + y]; };

    PresemifieldReport r;
    if (check_symplectic) {
        r.symplectic = true;
        r.orthogonality = true;
    }
    const Presemifield knuth = Presemifield::knuth(ctx);
    auto tr = [&](std::uint32_t a, std::uint32_t b) { return ctx.trace(ctx.mul(FieldElement{a}, FieldElement{b})); };

    for (std::uint32_t x = 0; x < q; ++x)
        for (std::uint32_t y = 0; y < q; ++y) {
            if (m(x, y) != m(y, x)) r.commutative = false;
            if (x && y && m(x, y) == 0 && r.no_zero_divisors) {
                r.no_zero_divisors = false;
                r.failures.push_back("zero divisor: " + FieldContext::to_hex(FieldElement{x}) + " * " + FieldContext::to_hex(FieldElement{y}) + " = 0");
            }
            const FieldElement fx{x}, fy{y};
            if (ctx.square(FieldElement{m(x, y)}) != FieldElement{m(ctx.square(fx).bits, ctx.square(fy).bits)}) r.frobenius_autotopism = false;
            for (std::uint32_t z = 0; z < q; ++z) {
                if (r.left_distributive && m(x, y ^ z) != (m(x, y) ^ m(x, z))) {
                    r.left_distributive = false;
                    r.failures.push_back("left distributivity fails");
                }
                if (r.right_distributive && m(x ^ y, z) != (m(x, z) ^ m(y, z))) {
                    r.right_distributive = false;
                    r.failures.push_back("right distributivity fails");
                }
                if (!check_symplectic) continue;
                if (*r.symplectic && tr(x, m(y, z)) != tr(y, m(x, z))) {
                    r.symplectic = false;
                    r.failures.push_back("symplectic identity fails");
                }
                if (*r.orthogonality && (tr(x, m(z, y)) ^ tr(y, knuth.mul(fx, FieldElement{z}).bits)) != 0) {
                    r.orthogonality = false;
                    r.failures.push_back("orthogonality with the Knuth multiplication fails");
                }
            }
        }
    return r;
}

} // namespace hyperovals
