#include "lk/matrix.hpp"

#include <algorithm>

namespace lk {

PolyMatrix::PolyMatrix(RingPtr ring, std::vector<int32_t> row_twist, std::vector<int32_t> col_deg)
    : ring_(std::move(ring)), row_twist_(std::move(row_twist)), col_deg_(std::move(col_deg)) {
    e_.assign(rows() * cols(), Polynomial{});
}

void PolyMatrix::set(size_t r, size_t c, Polynomial f) { e_[r * cols() + c] = ring_->nf(std::move(f)); }

void PolyMatrix::validate(const char* what) const {
    for (size_t r = 0; r < rows(); ++r)
        for (size_t c = 0; c < cols(); ++c) {
            const Polynomial& f = at(r, c);
            if (f.is_zero()) continue;
            int32_t d;
            if (!poly_is_homogeneous(f, &d) || d != col_deg_[c] - row_twist_[r])
                throw EngineError(std::string(what) + ": matrix entry (" + std::to_string(r) + "," +
                                  std::to_string(c) + ") breaks the grading");
        }
}

ModVec PolyMatrix::col_vec(size_t c) const {
    ModVec v(rows());
    for (size_t r = 0; r < rows(); ++r) v.c[r] = at(r, c);
    return v;
}

void PolyMatrix::set_col(size_t c, const ModVec& v) {
    for (size_t r = 0; r < rows(); ++r) set(r, c, v.c[r]);
}

PolyMatrix PolyMatrix::transpose_dual() const {
    std::vector<int32_t> rt(col_deg_), cd(row_twist_);
    for (auto& t : rt) t = -t;
    for (auto& t : cd) t = -t;
    PolyMatrix out(ring_, std::move(rt), std::move(cd));
    for (size_t r = 0; r < rows(); ++r)
        for (size_t c = 0; c < cols(); ++c) out.set(c, r, at(r, c));
    return out;
}

bool PolyMatrix::is_zero() const {
    for (const auto& f : e_)
        if (!f.is_zero()) return false;
    return true;
}

void PolyMatrix::sort_cols_canonical() {
    const PolyCtx& ctx = ring_->ctx();
    std::vector<size_t> idx(cols());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (col_deg_[a] != col_deg_[b]) return col_deg_[a] < col_deg_[b];
        for (size_t r = 0; r < rows(); ++r) {
            int c = poly_cmp_total(ctx, at(r, a), at(r, b));
            if (c != 0) return c < 0;
        }
        return false;
    });
    std::vector<Polynomial> ne(e_.size());
    std::vector<int32_t> nd(cols());
    for (size_t j = 0; j < idx.size(); ++j) {
        nd[j] = col_deg_[idx[j]];
        for (size_t r = 0; r < rows(); ++r) ne[r * cols() + j] = at(r, idx[j]);
    }
    e_ = std::move(ne);
    col_deg_ = std::move(nd);
}

std::string PolyMatrix::to_string() const {
    std::string s = "[";
    for (size_t r = 0; r < rows(); ++r) {
        if (r) s += ", ";
        s += "[";
        for (size_t c = 0; c < cols(); ++c) {
            if (c) s += ", ";
            s += poly_to_string(ring_->ctx(), at(r, c));
        }
        s += "]";
    }
    s += "]";
    return s;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_ring(a.ring(), b.ring(), "matrix product");
    if (a.cols() != b.rows()) throw EngineError("matrix product: shape mismatch");
    PolyMatrix out(a.ring(), a.row_twist(), b.col_deg());
    const PolyCtx& ctx = a.ring()->ctx();
    for (size_t r = 0; r < a.rows(); ++r)
        for (size_t c = 0; c < b.cols(); ++c) {
            Polynomial s;
            for (size_t k = 0; k < a.cols(); ++k)
                s = poly_add(ctx, s, poly_mul(ctx, a.at(r, k), b.at(k, c)));
            out.set(r, c, std::move(s));
        }
    return out;
}

PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_ring(a.ring(), b.ring(), "hconcat");
    if (a.rows() != b.rows() || a.row_twist() != b.row_twist())
        throw EngineError("hconcat: row twists differ");
    std::vector<int32_t> cd = a.col_deg();
    cd.insert(cd.end(), b.col_deg().begin(), b.col_deg().end());
    PolyMatrix out(a.ring(), a.row_twist(), std::move(cd));
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
        for (size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b.at(r, c));
    }
    return out;
}

PolyMatrix diag_blocks(const PolyMatrix& b, const std::vector<int32_t>& shift) {
    size_t m = b.rows(), k = b.cols(), n = shift.size();
    std::vector<int32_t> rt(n * m), cd(n * k);
    for (size_t i = 0; i < n; ++i) {
        for (size_t u = 0; u < m; ++u) rt[i * m + u] = b.row_twist()[u] + shift[i];
        for (size_t v = 0; v < k; ++v) cd[i * k + v] = b.col_deg()[v] + shift[i];
    }
    PolyMatrix out(b.ring(), std::move(rt), std::move(cd));
    for (size_t i = 0; i < n; ++i)
        for (size_t u = 0; u < m; ++u)
            for (size_t v = 0; v < k; ++v) out.set(i * m + u, i * k + v, b.at(u, v));
    return out;
}

PolyMatrix tensor_map(const PolyMatrix& d, const std::vector<int32_t>& n_twists) {
    size_t m = n_twists.size();
    std::vector<int32_t> rt(d.rows() * m), cd(d.cols() * m);
    for (size_t r = 0; r < d.rows(); ++r)
        for (size_t u = 0; u < m; ++u) rt[r * m + u] = d.row_twist()[r] + n_twists[u];
    for (size_t c = 0; c < d.cols(); ++c)
        for (size_t u = 0; u < m; ++u) cd[c * m + u] = d.col_deg()[c] + n_twists[u];
    PolyMatrix out(d.ring(), std::move(rt), std::move(cd));
    for (size_t r = 0; r < d.rows(); ++r)
        for (size_t c = 0; c < d.cols(); ++c)
            for (size_t u = 0; u < m; ++u) out.set(r * m + u, c * m + u, d.at(r, c));
    return out;
}

PolyMatrix hom_map(const PolyMatrix& d, const std::vector<int32_t>& n_twists) {
    size_t m = n_twists.size();
    std::vector<int32_t> rt(d.cols() * m), cd(d.rows() * m);
    for (size_t c = 0; c < d.cols(); ++c)
        for (size_t u = 0; u < m; ++u) rt[c * m + u] = n_twists[u] - d.col_deg()[c];
    for (size_t r = 0; r < d.rows(); ++r)
        for (size_t u = 0; u < m; ++u) cd[r * m + u] = n_twists[u] - d.row_twist()[r];
    PolyMatrix out(d.ring(), std::move(rt), std::move(cd));
    for (size_t c = 0; c < d.cols(); ++c)
        for (size_t r = 0; r < d.rows(); ++r)
            for (size_t u = 0; u < m; ++u) out.set(c * m + u, r * m + u, d.at(r, c));
    return out;
}

namespace {

// augmented generators (columns tracked on extra components) plus untracked
// ring-relation columns
struct Augmented {
    std::vector<ModVec> gens;
    std::unique_ptr<TopOrder> front;
    std::unique_ptr<SchreyerOrder> tracking;
    std::unique_ptr<SyzOrder> order;
    GBOptions opt;
};

Augmented build_augmented(const PolyMatrix& a, const std::vector<char>& track) {
    const PolyCtx& ctx = a.ring()->ctx();
    size_t r = a.rows(), s = a.cols();
    Augmented out;
    out.front = std::make_unique<TopOrder>(ctx.ord, ctx.weights);

    std::vector<std::pair<int, Monomial>> keys(s, {0, mono_one(ctx.nvars())});
    for (size_t c = 0; c < s; ++c) {
        ModVec col = a.col_vec(c);
        if (auto l = mv_lead(ctx, *out.front, col)) keys[c] = {l->comp, l->m};
    }
    out.tracking = std::make_unique<SchreyerOrder>(*out.front, std::move(keys));
    out.order = std::make_unique<SyzOrder>(static_cast<int>(r), *out.front, *out.tracking);

    for (size_t c = 0; c < s; ++c) {
        ModVec g(r + s);
        for (size_t i = 0; i < r; ++i) g.c[i] = a.at(i, c);
        if (track[c]) g.c[r + c] = poly_const(ctx, 1);
        if (!g.is_zero()) out.gens.push_back(std::move(g));
    }
    for (const auto& q : a.ring()->relation_gb())
        for (size_t j = 0; j < r; ++j) {
            ModVec g(r + s);
            g.c[j] = q;
            out.gens.push_back(std::move(g));
        }
    out.opt.comp_twist = a.row_twist();
    out.opt.comp_twist.insert(out.opt.comp_twist.end(), a.col_deg().begin(), a.col_deg().end());
    return out;
}

}  // namespace

PolyMatrix kernel_gens(const PolyMatrix& a) {
    const PolyCtx& ctx = a.ring()->ctx();
    size_t r = a.rows(), s = a.cols();

    std::vector<ModVec> cols_out;
    std::vector<char> track(s, 1);
    // zero columns have e_c as their syzygy; keep them out of the engine
    std::vector<size_t> zero_cols;
    for (size_t c = 0; c < s; ++c) {
        bool z = true;
        for (size_t i = 0; i < r && z; ++i) z = a.at(i, c).is_zero();
        if (z) {
            zero_cols.push_back(c);
            track[c] = 0;
        }
    }

    Augmented aug = build_augmented(a, track);
    auto gb = module_gb(ctx, *aug.order, std::move(aug.gens), aug.opt);

    for (const auto& g : gb) {
        bool front_zero = true;
        for (size_t i = 0; i < r && front_zero; ++i) front_zero = g.c[i].is_zero();
        if (!front_zero) continue;
        ModVec v(s);
        bool nonzero = false;
        for (size_t c = 0; c < s; ++c) {
            v.c[c] = a.ring()->nf(g.c[r + c]);
            nonzero |= !v.c[c].is_zero();
        }
        if (nonzero) cols_out.push_back(std::move(v));
    }
    for (size_t c : zero_cols) {
        ModVec v(s);
        v.c[c] = poly_const(ctx, 1);
        cols_out.push_back(std::move(v));
    }

    // assemble: rows of the kernel matrix are indexed by the columns of a
    std::vector<int32_t> cd;
    for (const auto& v : cols_out) {
        int32_t d = 0;
        bool found = false;
        for (size_t c = 0; c < s; ++c) {
            if (v.c[c].is_zero()) continue;
            int32_t ed;
            if (!poly_is_homogeneous(v.c[c], &ed)) throw EngineError("kernel_gens: inhomogeneous syzygy");
            int32_t dd = ed + a.col_deg()[c];
            if (found && dd != d) throw EngineError("kernel_gens: syzygy degree mismatch");
            d = dd;
            found = true;
        }
        cd.push_back(d);
    }
    PolyMatrix k(a.ring(), a.col_deg(), std::move(cd));
    for (size_t j = 0; j < cols_out.size(); ++j) k.set_col(j, cols_out[j]);
    k.sort_cols_canonical();
    k.validate("kernel_gens");
    return k;
}

SpanGB span_gb(const PolyMatrix& a) {
    const PolyCtx& ctx = a.ring()->ctx();
    std::vector<ModVec> gens;
    for (size_t c = 0; c < a.cols(); ++c) gens.push_back(a.col_vec(c));
    for (const auto& q : a.ring()->relation_gb())
        for (size_t j = 0; j < a.rows(); ++j) {
            ModVec g(a.rows());
            g.c[j] = q;
            gens.push_back(std::move(g));
        }
    TopOrder ord(ctx.ord, ctx.weights);
    GBOptions opt;
    opt.comp_twist = a.row_twist();
    SpanGB out;
    out.ring = a.ring();
    out.rank = a.rows();
    out.gb = module_gb(ctx, ord, std::move(gens), opt);
    return out;
}

bool in_span(const ModVec& v, const SpanGB& s) {
    const PolyCtx& ctx = s.ring->ctx();
    TopOrder ord(ctx.ord, ctx.weights);
    return module_nf(ctx, ord, v, s.gb).is_zero();
}

std::optional<std::vector<Polynomial>> solve_membership(const ModVec& v, const PolyMatrix& a) {
    const PolyCtx& ctx = a.ring()->ctx();
    size_t r = a.rows(), s = a.cols();
    std::vector<char> track(s, 1);
    Augmented aug = build_augmented(a, track);
    auto gb = module_gb(ctx, *aug.order, std::move(aug.gens), aug.opt);

    ModVec w(r + s);
    for (size_t i = 0; i < r; ++i) w.c[i] = v.c[i];
    ModVec nf = module_nf(ctx, *aug.order, w, gb);
    for (size_t i = 0; i < r; ++i)
        if (!nf.c[i].is_zero()) return std::nullopt;
    std::vector<Polynomial> h(s);
    for (size_t c = 0; c < s; ++c) h[c] = a.ring()->nf(poly_neg(ctx, nf.c[r + c]));
    return h;
}

}  // namespace lk
