#include "lk/ideal.hpp"

#include <algorithm>

namespace lk {

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> gens, bool require_homogeneous)
    : ring_(std::move(ring)) {
    for (auto& f : gens) {
        Polynomial g = ring_->nf(f);
        if (g.is_zero()) continue;
        if (require_homogeneous && !poly_is_homogeneous(g))
            throw EngineError("ideal generator is inhomogeneous: " + poly_to_string(ring_->ctx(), g));
        gens_.push_back(std::move(g));
    }
    std::vector<Polynomial> all = gens_;
    for (const auto& q : ring_->relation_gb()) all.push_back(q);
    gb_ = buchberger(ring_->ctx(), all);
}

std::vector<Polynomial> IdealHandle::reduced_gens() const {
    const PolyCtx& ctx = ring_->ctx();
    std::vector<Polynomial> cand;
    for (const auto& g : gb_) {
        Polynomial r = ring_->nf(g);
        if (!r.is_zero()) cand.push_back(std::move(r));
    }
    std::sort(cand.begin(), cand.end(), [&](const Polynomial& a, const Polynomial& b) {
        return poly_cmp_total(ctx, a, b) < 0;
    });
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    // prune generators redundant in R, largest first
    for (size_t i = cand.size(); i-- > 0;) {
        std::vector<Polynomial> rest;
        for (size_t j = 0; j < cand.size(); ++j)
            if (j != i) rest.push_back(cand[j]);
        for (const auto& q : ring_->relation_gb()) rest.push_back(q);
        if (poly_nf(ctx, cand[i], buchberger(ctx, rest)).is_zero()) cand.erase(cand.begin() + static_cast<long>(i));
    }
    std::sort(cand.begin(), cand.end(), [&](const Polynomial& a, const Polynomial& b) {
        int32_t da = a.lead().m.deg, db = b.lead().m.deg;
        if (da != db) return da < db;
        return poly_cmp_total(ctx, a, b) > 0;
    });
    return cand;
}

bool IdealHandle::contains(const IdealHandle& other) const {
    for (const auto& g : other.gens())
        if (!contains(g)) return false;
    return true;
}

bool IdealHandle::is_unit() const {
    return !gb_.empty() && gb_.front().lead().m.is_one();
}

bool IdealHandle::equals(const IdealHandle& other) const {
    require_same_ring(ring_, other.ring_, "ideal equality");
    if (gb_.size() != other.gb_.size()) return false;
    for (size_t i = 0; i < gb_.size(); ++i)
        if (!(gb_[i] == other.gb_[i])) return false;
    return true;
}

std::string IdealHandle::to_string() const {
    auto rg = reduced_gens();
    std::string s = "(";
    if (rg.empty()) s += "0";
    for (size_t i = 0; i < rg.size(); ++i) {
        if (i) s += ", ";
        s += poly_to_string(ring_->ctx(), rg[i]);
    }
    s += ")";
    return s;
}

IdealHandle ideal_zero(const RingPtr& ring) { return IdealHandle(ring, {}); }

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
    require_same_ring(a.ring(), b.ring(), "ideal sum");
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
    require_same_ring(a.ring(), b.ring(), "ideal product");
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(poly_mul(a.ring()->ctx(), f, g));
    return IdealHandle(a.ring(), std::move(gens));
}

namespace {

// intersection of two ideals of the ambient polynomial ring, by eliminating
// one auxiliary variable of weight zero from t*A + (1-t)*B
std::vector<Polynomial> intersect_in_p(const PolyCtx& ctx, const std::vector<Polynomial>& a,
                                       const std::vector<Polynomial>& b) {
    size_t n = ctx.nvars();
    PolyCtx ectx{ctx.vars, ctx.weights, ctx.field, MonomialOrder::grevlex()};
    ectx.vars.push_back("#t");
    ectx.weights.push_back(0);
    std::vector<char> mask(n + 1, 0);
    mask[n] = 1;
    ectx.ord = MonomialOrder::elimination(mask);

    auto extend = [&](const Polynomial& f) {
        std::vector<Term> ts;
        for (const auto& t : f.ts) {
            std::vector<int32_t> e = t.m.e;
            e.push_back(0);
            ts.push_back({mono_make(std::move(e), ectx.weights), t.c});
        }
        return poly_normalize(ectx, std::move(ts));
    };

    Polynomial t = poly_var(ectx, n);
    Polynomial one_minus_t = poly_sub(ectx, poly_const(ectx, 1), t);
    std::vector<Polynomial> gens;
    for (const auto& f : a) gens.push_back(poly_mul(ectx, t, extend(f)));
    for (const auto& g : b) gens.push_back(poly_mul(ectx, one_minus_t, extend(g)));

    auto gb = buchberger(ectx, gens);
    std::vector<Polynomial> out;
    for (const auto& g : gb) {
        bool tfree = true;
        for (const auto& tm : g.ts)
            if (tm.m.e[n] != 0) {
                tfree = false;
                break;
            }
        if (!tfree) continue;
        std::vector<Term> ts;
        for (const auto& tm : g.ts) {
            std::vector<int32_t> e(tm.m.e.begin(), tm.m.e.end() - 1);
            ts.push_back({mono_make(std::move(e), ctx.weights), tm.c});
        }
        out.push_back(poly_normalize(ctx, std::move(ts)));
    }
    return out;
}

}  // namespace

IdealHandle ideal_intersection(const IdealHandle& a, const IdealHandle& b) {
    require_same_ring(a.ring(), b.ring(), "ideal intersection");
    auto gens = intersect_in_p(a.ring()->ctx(), a.gb(), b.gb());
    return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle ideal_colon(const IdealHandle& a, const IdealHandle& b, bool* divided_by_zero) {
    require_same_ring(a.ring(), b.ring(), "ideal colon");
    if (divided_by_zero) *divided_by_zero = false;
    const PolyCtx& ctx = a.ring()->ctx();
    auto divisors = b.reduced_gens();
    if (divisors.empty()) {
        // (a : 0) = R
        if (divided_by_zero) *divided_by_zero = true;
        return IdealHandle(a.ring(), {poly_const(ctx, 1)});
    }
    std::optional<IdealHandle> acc;
    for (const auto& f : divisors) {
        auto meet = intersect_in_p(ctx, a.gb(), {f});
        std::vector<Polynomial> quot;
        for (const auto& g : meet) quot.push_back(poly_divexact(ctx, g, f));
        IdealHandle cf(a.ring(), std::move(quot), false);
        acc = acc ? ideal_intersection(*acc, cf) : cf;
    }
    return *acc;
}

IdealHandle ideal_eliminate(const IdealHandle& a, const std::vector<char>& mask) {
    const PolyCtx& ctx = a.ring()->ctx();
    if (mask.size() != ctx.nvars()) throw EngineError("eliminate: variable mask has the wrong length");
    bool any = false;
    for (char c : mask) any |= (c != 0);
    if (!any) return a;

    PolyCtx ectx = ctx;
    ectx.ord = MonomialOrder::elimination(mask);
    std::vector<Polynomial> gens;
    for (const auto& g : a.gb()) gens.push_back(poly_reorder(ectx, g));
    auto gb = buchberger(ectx, gens);
    std::vector<Polynomial> out;
    for (const auto& g : gb) {
        bool free_of_mask = true;
        for (const auto& tm : g.ts)
            for (size_t i = 0; i < mask.size() && free_of_mask; ++i)
                if (mask[i] && tm.m.e[i] != 0) free_of_mask = false;
        if (free_of_mask) out.push_back(poly_reorder(ctx, g));
    }
    return IdealHandle(a.ring(), std::move(out), false);
}

// ---- Hilbert data ----

namespace {

// minimal generators of a monomial ideal
std::vector<Monomial> minimalize_monos(std::vector<Monomial> ms) {
    std::vector<Monomial> out;
    std::sort(ms.begin(), ms.end(), [](const Monomial& x, const Monomial& y) {
        if (x.deg != y.deg) return x.deg < y.deg;
        return x.e < y.e;
    });
    for (const auto& m : ms) {
        bool red = false;
        for (const auto& g : out)
            if (mono_divides(g, m)) {
                red = true;
                break;
            }
        if (!red) out.push_back(m);
    }
    return out;
}

// numerator of the Hilbert series of P/(monomial ideal), standard recursion
// N(G + (m)) = N(G) - t^deg(m) * N(G : m)
std::vector<int64_t> staircase_numerator(std::vector<Monomial> gens, const std::vector<int32_t>& weights) {
    gens = minimalize_monos(std::move(gens));
    if (gens.empty()) return {1};
    if (gens.front().is_one()) return {};  // unit ideal: zero series
    Monomial m = gens.back();
    gens.pop_back();
    std::vector<int64_t> n_g = staircase_numerator(gens, weights);
    std::vector<Monomial> colon;
    for (const auto& g : gens) {
        std::vector<int32_t> e(g.e.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(0, g.e[i] - m.e[i]);
        colon.push_back(mono_make(std::move(e), weights));
    }
    std::vector<int64_t> n_c = staircase_numerator(std::move(colon), weights);
    size_t d = static_cast<size_t>(m.deg);
    std::vector<int64_t> out(std::max(n_g.size(), n_c.size() + d), 0);
    for (size_t i = 0; i < n_g.size(); ++i) out[i] += n_g[i];
    for (size_t i = 0; i < n_c.size(); ++i) out[i + d] -= n_c[i];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// multiplicity of the root t = 1; divides in place
int strip_root_one(std::vector<int64_t>& n) {
    int v = 0;
    while (!n.empty()) {
        int64_t sum = 0;
        for (int64_t c : n) sum += c;
        if (sum != 0) break;
        // n = (1 - t) q  =>  q_i = q_{i-1} + n_i
        std::vector<int64_t> q(n.size() - 1, 0);
        int64_t acc = 0;
        for (size_t i = 0; i < n.size(); ++i) {
            acc += n[i];
            if (i < q.size()) q[i] = acc;
        }
        n = std::move(q);
        while (!n.empty() && n.back() == 0) n.pop_back();
        ++v;
    }
    return v;
}

int combinatorial_dim(const std::vector<Monomial>& leads, size_t nvars) {
    // largest coordinate subspace avoiding the staircase
    int best = -1;
    for (uint32_t s = 0; s < (1u << nvars); ++s) {
        bool ok = true;
        for (const auto& m : leads) {
            bool inside = true;
            for (size_t i = 0; i < nvars && inside; ++i)
                if (m.e[i] > 0 && !(s >> i & 1)) inside = false;
            if (inside) {
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, static_cast<int>(std::popcount(s)));
    }
    return best;
}

}  // namespace

HilbertData hilbert_data(const IdealHandle& a) {
    const PolyCtx& ctx = a.ring()->ctx();
    std::vector<Monomial> leads;
    for (const auto& g : a.gb()) leads.push_back(g.lead().m);
    leads = minimalize_monos(std::move(leads));

    HilbertData out;
    out.numerator = staircase_numerator(leads, ctx.weights);
    out.dim_combinatorial = combinatorial_dim(leads, ctx.nvars());

    if (a.is_unit()) {
        out.krull_dim = -1;
        out.multiplicity = 0;
        return out;
    }
    bool standard = std::all_of(ctx.weights.begin(), ctx.weights.end(), [](int32_t w) { return w == 1; });
    if (standard) {
        std::vector<int64_t> n = out.numerator;
        int v = strip_root_one(n);
        out.krull_dim = static_cast<int>(ctx.nvars()) - v;
        int64_t e = 0;
        for (int64_t c : n) e += c;
        out.multiplicity = e < 0 ? -e : e;
        if (out.krull_dim != out.dim_combinatorial)
            throw EngineError("hilbert_data: series dimension disagrees with the staircase dimension");
    } else {
        out.krull_dim = out.dim_combinatorial;
        out.multiplicity = 0;
    }
    return out;
}

int ring_krull_dim(const RingPtr& ring) { return hilbert_data(ideal_zero(ring)).krull_dim; }

}  // namespace lk
