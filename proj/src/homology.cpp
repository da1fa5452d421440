#include "lk/homology.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "lk/linalg.hpp"

namespace lk {

namespace {

PolyMatrix make_identity(const RingPtr& ring, const std::vector<int32_t>& twists) {
    PolyMatrix m(ring, twists, twists);
    for (size_t i = 0; i < twists.size(); ++i) m.set(i, i, poly_const(ring->ctx(), 1));
    return m;
}

PolyMatrix empty_cols(const RingPtr& ring, const std::vector<int32_t>& row_twists) {
    return PolyMatrix(ring, row_twists, {});
}

// first `b` rows, zero columns dropped
PolyMatrix top_rows(const PolyMatrix& k, size_t b) {
    std::vector<size_t> keep;
    for (size_t c = 0; c < k.cols(); ++c) {
        bool nz = false;
        for (size_t r = 0; r < b && !nz; ++r) nz = !k.at(r, c).is_zero();
        if (nz) keep.push_back(c);
    }
    std::vector<int32_t> rt(k.row_twist().begin(), k.row_twist().begin() + static_cast<long>(b));
    std::vector<int32_t> cd;
    for (size_t c : keep) cd.push_back(k.col_deg()[c]);
    PolyMatrix out(k.ring(), std::move(rt), std::move(cd));
    for (size_t j = 0; j < keep.size(); ++j)
        for (size_t r = 0; r < b; ++r) out.set(r, j, k.at(r, keep[j]));
    return out;
}

// caches that belong to the ring rather than to one module; mu guards every
// member (the FPModule handles carry their own write-once caches)
struct RingScope {
    std::mutex mu;
    std::shared_ptr<FPModule> ring_mod, k_mod;
    std::optional<int> depth, dim;
    std::optional<bool> gorenstein;
    std::map<int, std::vector<Monomial>> std_monos;
};

RingScope& ring_scope(const RingPtr& ring) {
    static std::mutex mu;
    static std::map<const GradedRing*, std::pair<RingPtr, std::unique_ptr<RingScope>>> scopes;
    std::lock_guard<std::mutex> lock(mu);
    auto& entry = scopes[ring.get()];
    entry.first = ring;
    if (!entry.second) entry.second = std::make_unique<RingScope>();
    return *entry.second;
}

FPModule ring_module_cached(const RingPtr& ring) {
    auto& sc = ring_scope(ring);
    std::lock_guard<std::mutex> lock(sc.mu);
    if (!sc.ring_mod) sc.ring_mod = std::make_shared<FPModule>(FPModule::ring_module(ring));
    return *sc.ring_mod;
}

FPModule residue_field_cached(const RingPtr& ring) {
    auto& sc = ring_scope(ring);
    std::lock_guard<std::mutex> lock(sc.mu);
    if (!sc.k_mod) sc.k_mod = std::make_shared<FPModule>(FPModule::residue_field(ring));
    return *sc.k_mod;
}

}  // namespace

Subquotient subquotient_homology(const PolyMatrix& mout, const PolyMatrix& relC, const PolyMatrix& min,
                                 const PolyMatrix& relB, const std::vector<int32_t>& mid_twists,
                                 const RingPtr& ring) {
    const size_t b = mid_twists.size();
    PolyMatrix z;
    if (mout.rows() == 0) {
        z = make_identity(ring, mid_twists);
    } else {
        PolyMatrix k = kernel_gens(hconcat(mout, relC));
        z = top_rows(k, b);
    }
    PolyMatrix big = hconcat(hconcat(z, min), relB);
    PolyMatrix w = top_rows(kernel_gens(big), z.cols());
    PolyMatrix pres(ring, z.col_deg(), w.col_deg());
    for (size_t r = 0; r < w.rows(); ++r)
        for (size_t c = 0; c < w.cols(); ++c) pres.set(r, c, w.at(r, c));
    return Subquotient{std::move(z), FPModule(std::move(pres))};
}

Subquotient hom_module(const FPModule& m, const FPModule& n) {
    require_same_ring(m.ring(), n.ring(), "hom");
    const RingPtr& ring = m.ring();
    const PolyMatrix& a = m.pres();
    const PolyMatrix& bmat = n.pres();
    const auto& t = m.gen_twists();
    const auto& s = n.gen_twists();
    const size_t r0 = t.size(), mm = s.size();
    if (r0 == 0 || mm == 0)
        return Subquotient{PolyMatrix(ring, std::vector<int32_t>(r0 * mm, 0), {}),
                           FPModule::zero_module(ring)};

    std::vector<int32_t> mid(r0 * mm);
    for (size_t r = 0; r < r0; ++r)
        for (size_t u = 0; u < mm; ++u) mid[r * mm + u] = s[u] - t[r];

    std::vector<int32_t> neg_t(t);
    for (auto& v : neg_t) v = -v;
    PolyMatrix relB = diag_blocks(bmat, neg_t);
    PolyMatrix min = empty_cols(ring, mid);
    if (a.cols() == 0) {
        // M free: Hom(M, N) = N^{r0}
        PolyMatrix mout(ring, {}, {});
        PolyMatrix relC(ring, {}, {});
        return subquotient_homology(mout, relC, min, relB, mid, ring);
    }
    std::vector<int32_t> neg_cd(a.col_deg());
    for (auto& v : neg_cd) v = -v;
    PolyMatrix mout = hom_map(a, s);
    PolyMatrix relC = diag_blocks(bmat, neg_cd);
    return subquotient_homology(mout, relC, min, relB, mid, ring);
}

FPModule ext_module(int i, const FPModule& m, const FPModule& n) {
    if (i < 0) throw EngineError("ext: homological degree must be >= 0");
    require_same_ring(m.ring(), n.ring(), "ext");
    const RingPtr& ring = m.ring();
    FPModule mm = minimal_presentation(m);
    FPModule nn = minimal_presentation(n);
    if (mm.gen_count() == 0 || nn.gen_count() == 0) return FPModule::zero_module(ring);
    if (i == 0) return hom_module(mm, nn).mod;

    Resolution res = free_resolution(mm, i + 1);
    std::vector<int32_t> fi = res.free_twists(i);
    if (fi.empty()) return FPModule::zero_module(ring);
    const auto& s = nn.gen_twists();
    const size_t msz = s.size();

    std::vector<int32_t> mid(fi.size() * msz);
    for (size_t r = 0; r < fi.size(); ++r)
        for (size_t u = 0; u < msz; ++u) mid[r * msz + u] = s[u] - fi[r];

    std::vector<int32_t> neg_fi(fi);
    for (auto& v : neg_fi) v = -v;
    PolyMatrix relB = diag_blocks(nn.pres(), neg_fi);
    PolyMatrix min = hom_map(res.chain[static_cast<size_t>(i) - 1], s);

    if (static_cast<size_t>(i) < res.chain.size() && res.chain[static_cast<size_t>(i)].cols() > 0) {
        const PolyMatrix& d_next = res.chain[static_cast<size_t>(i)];
        PolyMatrix mout = hom_map(d_next, s);
        std::vector<int32_t> neg_fj(d_next.col_deg());
        for (auto& v : neg_fj) v = -v;
        PolyMatrix relC = diag_blocks(nn.pres(), neg_fj);
        return subquotient_homology(mout, relC, min, relB, mid, ring).mod;
    }
    PolyMatrix mout(ring, {}, {});
    PolyMatrix relC(ring, {}, {});
    return subquotient_homology(mout, relC, min, relB, mid, ring).mod;
}

FPModule tensor_product(const FPModule& m, const FPModule& n) {
    require_same_ring(m.ring(), n.ring(), "tensor");
    const auto& t = m.gen_twists();
    const auto& s = n.gen_twists();
    if (t.empty() || s.empty()) return FPModule::zero_module(m.ring());
    PolyMatrix rels = hconcat(tensor_map(m.pres(), s), diag_blocks(n.pres(), t));
    return FPModule(std::move(rels));
}

FPModule tor_module(int i, const FPModule& m, const FPModule& n, bool symmetry_cross_check) {
    if (i < 0) throw EngineError("tor: homological degree must be >= 0");
    require_same_ring(m.ring(), n.ring(), "tor");
    const RingPtr& ring = m.ring();
    FPModule mm = minimal_presentation(m);
    FPModule nn = minimal_presentation(n);
    if (mm.gen_count() == 0 || nn.gen_count() == 0) return FPModule::zero_module(ring);

    FPModule h;
    if (i == 0) {
        h = tensor_product(mm, nn);
    } else {
        Resolution res = free_resolution(mm, i + 1);
        std::vector<int32_t> fi = res.free_twists(i);
        if (fi.empty()) return FPModule::zero_module(ring);
        const auto& s = nn.gen_twists();
        const size_t msz = s.size();
        std::vector<int32_t> mid(fi.size() * msz);
        for (size_t r = 0; r < fi.size(); ++r)
            for (size_t u = 0; u < msz; ++u) mid[r * msz + u] = fi[r] + s[u];

        PolyMatrix mout = tensor_map(res.chain[static_cast<size_t>(i) - 1], s);
        PolyMatrix relC = diag_blocks(nn.pres(), res.free_twists(i - 1));
        PolyMatrix relB = diag_blocks(nn.pres(), fi);
        PolyMatrix min = (static_cast<size_t>(i) < res.chain.size())
                             ? tensor_map(res.chain[static_cast<size_t>(i)], s)
                             : empty_cols(ring, mid);
        h = subquotient_homology(mout, relC, min, relB, mid, ring).mod;
    }
    if (symmetry_cross_check) {
        FPModule swapped = tor_module(i, n, m, false);
        if (!modules_numerically_agree_up_to_shift(h, swapped))
            throw EngineError("tor symmetry cross-check failed");
    }
    return h;
}

IdealHandle annihilator(const FPModule& m) {
    {
        std::lock_guard<std::mutex> lock(m.cache()->mu);
        if (m.cache()->ann) return *m.cache()->ann;
    }
    FPModule mm = minimal_presentation(m);
    const RingPtr& ring = m.ring();
    std::optional<IdealHandle> acc;
    if (mm.gen_count() == 0) {
        acc = IdealHandle(ring, {poly_const(ring->ctx(), 1)});  // Ann(0) = R
    } else {
        for (size_t j = 0; j < mm.gen_count(); ++j) {
            PolyMatrix ej(ring, mm.gen_twists(), {mm.gen_twists()[j]});
            ej.set(j, 0, poly_const(ring->ctx(), 1));
            PolyMatrix k = kernel_gens(hconcat(ej, mm.pres()));
            std::vector<Polynomial> gens;
            for (size_t c = 0; c < k.cols(); ++c)
                if (!k.at(0, c).is_zero()) gens.push_back(k.at(0, c));
            IdealHandle colon_j(ring, std::move(gens), false);
            acc = acc ? ideal_intersection(*acc, colon_j) : colon_j;
        }
    }
    auto ptr = std::make_shared<const IdealHandle>(*acc);
    {
        std::lock_guard<std::mutex> lock(m.cache()->mu);
        if (!m.cache()->ann) m.cache()->ann = ptr;
    }
    return *acc;
}

StabilityReport trace_and_stability(const FPModule& m) {
    const RingPtr& ring = m.ring();
    const PolyCtx& ctx = ring->ctx();
    FPModule cur = minimal_presentation(m);

    auto dual_kernel = [&](const FPModule& w) { return kernel_gens(w.pres().transpose_dual()); };

    StabilityReport rep{ideal_zero(ring), true, 0, cur};
    if (cur.gen_count() == 0) return rep;

    PolyMatrix k = dual_kernel(cur);
    std::vector<Polynomial> trace_gens;
    for (size_t r = 0; r < k.rows(); ++r)
        for (size_t c = 0; c < k.cols(); ++c)
            if (!k.at(r, c).is_zero()) trace_gens.push_back(k.at(r, c));
    rep.trace = IdealHandle(ring, std::move(trace_gens), false);
    rep.stable = !rep.trace.is_unit();

    // split off free summands: a degree-0 entry of the dual kernel is a
    // split surjection onto R
    FPModule work = cur;
    bool first = true;
    while (work.gen_count() > 0) {
        PolyMatrix kw = first ? k : dual_kernel(work);
        first = false;
        std::optional<std::pair<size_t, size_t>> hit;
        for (size_t c = 0; c < kw.cols() && !hit; ++c)
            for (size_t j = 0; j < kw.rows() && !hit; ++j)
                if (!kw.at(j, c).is_zero() && kw.col_deg()[c] + work.gen_twists()[j] == 0) hit = {{j, c}};
        if (!hit) break;
        auto [j, c] = *hit;
        const PolyMatrix& a = work.pres();
        // with U = identity except row j := (column c of kw)^T, row j of U*A
        // must vanish; the other rows are unchanged, so drop row j
        for (size_t cc = 0; cc < a.cols(); ++cc) {
            Polynomial srow;
            for (size_t i = 0; i < a.rows(); ++i)
                srow = poly_add(ctx, srow, poly_mul(ctx, kw.at(i, c), a.at(i, cc)));
            if (!ring->nf(srow).is_zero())
                throw EngineError("trace_and_stability: split functional does not kill the relations");
        }
        std::vector<int32_t> rt;
        for (size_t i = 0; i < a.rows(); ++i)
            if (i != j) rt.push_back(a.row_twist()[i]);
        PolyMatrix rest(ring, std::move(rt), a.col_deg());
        size_t ri = 0;
        for (size_t i = 0; i < a.rows(); ++i) {
            if (i == j) continue;
            for (size_t cc = 0; cc < a.cols(); ++cc) rest.set(ri, cc, a.at(i, cc));
            ++ri;
        }
        ++rep.free_rank;
        work = minimal_presentation(FPModule(std::move(rest)));
    }
    rep.stable_part = work;
    if (rep.stable != (rep.free_rank == 0))
        throw EngineError("trace_and_stability: trace test and splitting disagree");
    return rep;
}

HomDim grade_of_ideal(const IdealHandle& i) {
    if (i.is_unit()) return HomDim::infinite();
    return grade_of_module(FPModule::quotient_by_ideal(i));
}

HomDim grade_of_module(const FPModule& m) {
    if (is_zero_module(m)) return HomDim::infinite();
    const RingPtr& ring = m.ring();
    FPModule rmod = ring_module_cached(ring);
    int top = ring_dim(ring) + 1;
    for (int i = 0; i <= top; ++i)
        if (!is_zero_module(ext_module(i, m, rmod))) return HomDim::finite(i);
    throw EngineError("grade: no nonvanishing Ext up to dim R + 1");
}

HomDim depth_of(const FPModule& m) {
    {
        std::lock_guard<std::mutex> lock(m.cache()->mu);
        if (m.cache()->depth) return HomDim::finite(*m.cache()->depth);
    }
    if (is_zero_module(m)) return HomDim::infinite();
    const RingPtr& ring = m.ring();
    FPModule k = residue_field_cached(ring);
    int top = ring_dim(ring);
    for (int i = 0; i <= top; ++i) {
        if (!is_zero_module(ext_module(i, k, m))) {
            std::lock_guard<std::mutex> lock(m.cache()->mu);
            m.cache()->depth = i;
            return HomDim::finite(i);
        }
    }
    throw EngineError("depth: Ext(k, M) vanished through dim R");
}

int ring_depth(const RingPtr& ring) {
    auto& sc = ring_scope(ring);
    {
        std::lock_guard<std::mutex> lock(sc.mu);
        if (sc.depth) return *sc.depth;
    }
    HomDim d = depth_of(ring_module_cached(ring));
    if (!d.is_finite()) throw EngineError("ring depth must be finite");
    std::lock_guard<std::mutex> lock(sc.mu);
    if (!sc.depth) sc.depth = d.value;
    return *sc.depth;
}

int ring_dim(const RingPtr& ring) {
    auto& sc = ring_scope(ring);
    {
        std::lock_guard<std::mutex> lock(sc.mu);
        if (sc.dim) return *sc.dim;
    }
    int d = ring_krull_dim(ring);
    std::lock_guard<std::mutex> lock(sc.mu);
    if (!sc.dim) sc.dim = d;
    return *sc.dim;
}

HomDim pd_of(const FPModule& m) {
    FPModule mm = minimal_presentation(m);
    if (mm.gen_count() == 0) return HomDim::neg_infinite();
    int s = ring_depth(m.ring());
    Resolution res = free_resolution(mm, s + 1);
    if (res.betti.total(s + 1) != 0) return HomDim::infinite();
    int pd = 0;
    for (int i = 0; i <= s + 1; ++i)
        if (res.betti.total(i) != 0) pd = i;
    // Auslander-Buchsbaum, asserted whenever a finite value is returned
    HomDim dm = depth_of(mm);
    if (!dm.is_finite() || pd + dm.value != s)
        throw EngineError("Auslander-Buchsbaum identity failed");
    return HomDim::finite(pd);
}

bool totally_reflexive_check(const FPModule& m) {
    const RingPtr& ring = m.ring();
    FPModule mm = minimal_presentation(m);
    if (mm.gen_count() == 0) return true;
    FPModule rmod = ring_module_cached(ring);
    int top = ring_dim(ring) + 1;
    for (int i = 1; i <= top; ++i)
        if (!is_zero_module(ext_module(i, mm, rmod))) return false;

    Subquotient dual = hom_module(mm, rmod);
    for (int i = 1; i <= top; ++i)
        if (!is_zero_module(ext_module(i, dual.mod, rmod))) return false;

    // the bidual map, built explicitly: gen_j of M evaluates the generators
    // of M* (the columns of dual.embed)
    Subquotient bidual = hom_module(dual.mod, rmod);
    const PolyMatrix& k1 = dual.embed;
    const PolyMatrix& k2 = bidual.embed;
    size_t r0 = mm.gen_count(), g1 = k1.cols();
    PolyMatrix h(ring, k2.col_deg(), mm.gen_twists());
    for (size_t j = 0; j < r0; ++j) {
        ModVec v(g1);
        for (size_t c = 0; c < g1; ++c) v.c[c] = k1.at(j, c);
        auto sol = solve_membership(v, k2);
        if (!sol) throw EngineError("bidual: evaluation functional is not in Hom(M*, R)");
        for (size_t l = 0; l < k2.cols(); ++l) h.set(l, j, (*sol)[l]);
    }
    h.validate("bidual map");

    // surjective: coker(h) = 0
    if (!is_zero_module(FPModule(hconcat(h, bidual.mod.pres())))) return false;
    // injective: preimages of Im(pres M**) land in Im(pres M)
    PolyMatrix zk = top_rows(kernel_gens(hconcat(h, bidual.mod.pres())), r0);
    const SpanGB& span = module_span(mm);
    for (size_t c = 0; c < zk.cols(); ++c) {
        ModVec v(r0);
        for (size_t r = 0; r < r0; ++r) v.c[r] = zk.at(r, c);
        if (!in_span(v, span)) return false;
    }
    return true;
}

GdimReport gdim_suite(const FPModule& m) {
    FPModule mm = minimal_presentation(m);
    if (mm.gen_count() == 0) return {true, HomDim::neg_infinite()};
    int s = ring_depth(m.ring());
    FPModule x = syzygy_power(mm, s);
    bool finite = is_zero_module(x) || is_free_module(x) || totally_reflexive_check(x);
    GdimReport rep;
    if (finite) {
        HomDim dm = depth_of(mm);
        if (!dm.is_finite() || s - dm.value < 0) throw EngineError("Auslander-Bridger identity failed");
        rep.gdim = HomDim::finite(s - dm.value);
    } else {
        rep.gdim = HomDim::infinite();
    }
    rep.totally_reflexive = totally_reflexive_check(mm);
    if (rep.totally_reflexive && !(rep.gdim == HomDim::finite(0)))
        throw EngineError("totally reflexive module with nonzero G-dimension");
    return rep;
}

std::vector<Monomial> std_monomials(const RingPtr& ring, int degree) {
    if (degree < 0) return {};
    auto& sc = ring_scope(ring);
    std::lock_guard<std::mutex> lock(sc.mu);
    auto it = sc.std_monos.find(degree);
    if (it != sc.std_monos.end()) return it->second;

    const PolyCtx& ctx = ring->ctx();
    std::vector<Monomial> out;
    std::vector<int32_t> exps(ctx.nvars(), 0);
    std::vector<Monomial> leads;
    for (const auto& g : ring->relation_gb()) leads.push_back(g.lead().m);

    std::function<void(size_t, int)> rec = [&](size_t v, int rem) {
        if (v == ctx.nvars()) {
            if (rem != 0) return;
            Monomial m = mono_make(exps, ctx.weights);
            for (const auto& l : leads)
                if (mono_divides(l, m)) return;
            out.push_back(std::move(m));
            return;
        }
        int w = ctx.weights[v];
        for (int e = 0; e * w <= rem; ++e) {
            exps[v] = e;
            rec(v + 1, rem - e * w);
        }
        exps[v] = 0;
    };
    rec(0, degree);
    sc.std_monos[degree] = out;
    return out;
}

Numerics module_numerics(const FPModule& m, int lo, int hi) {
    const RingPtr& ring = m.ring();
    const PolyCtx& ctx = ring->ctx();
    const PolyMatrix& a = m.pres();
    const Fp& f = ctx.field;

    Numerics out;
    out.lo = lo;
    for (int d = lo; d <= hi; ++d) {
        std::map<std::pair<size_t, std::vector<int32_t>>, size_t> index;
        size_t dimfree = 0;
        for (size_t r = 0; r < a.rows(); ++r)
            for (const auto& mono : std_monomials(ring, d - a.row_twist()[r]))
                index[{r, mono.e}] = dimfree++;
        if (dimfree == 0) {
            out.hf.push_back(0);
            continue;
        }
        DenseMat rel(0, dimfree);
        for (size_t c = 0; c < a.cols(); ++c) {
            for (const auto& mono : std_monomials(ring, d - a.col_deg()[c])) {
                std::vector<uint32_t> row(dimfree, 0);
                bool nz = false;
                for (size_t r = 0; r < a.rows(); ++r) {
                    if (a.at(r, c).is_zero()) continue;
                    Polynomial p = ring->nf(poly_mul_term(ctx, a.at(r, c), mono, 1));
                    for (const auto& t : p.ts) {
                        auto it2 = index.find({r, t.m.e});
                        if (it2 == index.end())
                            throw EngineError("module_numerics: non-standard monomial after normal form");
                        row[it2->second] = f.add(row[it2->second], t.c);
                        nz = true;
                    }
                }
                if (nz) rel.append_row(row);
            }
        }
        size_t rk = rel.rows() ? rel.rank(f) : 0;
        out.hf.push_back(static_cast<int64_t>(dimfree) - static_cast<int64_t>(rk));
    }

    // certify finiteness: the window must reach past the generators and end
    // with a run of zeros at least as wide as the largest variable weight
    if (a.row_twist().empty()) {
        out.finite_certified = true;
        out.length = 0;
        return out;
    }
    int32_t wmax = *std::max_element(ctx.weights.begin(), ctx.weights.end());
    int32_t tmin = *std::min_element(a.row_twist().begin(), a.row_twist().end());
    int32_t tmax = *std::max_element(a.row_twist().begin(), a.row_twist().end());
    if (lo <= tmin && hi >= tmax + wmax) {
        bool zeros = true;
        for (int d = hi - wmax + 1; d <= hi && zeros; ++d) zeros = out.hf[static_cast<size_t>(d - lo)] == 0;
        if (zeros) {
            out.finite_certified = true;
            for (int64_t v : out.hf) out.length += v;
        }
    }
    return out;
}

std::optional<int64_t> certified_length(const FPModule& m) {
    if (is_zero_module(m)) return 0;
    IdealHandle ann = annihilator(m);
    if (hilbert_data(ann).krull_dim > 0) return std::nullopt;
    const auto& tw = m.gen_twists();
    int lo = *std::min_element(tw.begin(), tw.end());
    int hi = *std::max_element(tw.begin(), tw.end()) + 4;
    for (int rounds = 0; rounds < 64; ++rounds) {
        Numerics n = module_numerics(m, lo, hi);
        if (n.finite_certified) return n.length;
        hi += 8;
    }
    throw EngineError("certified_length: Hilbert function refused to vanish");
}

bool is_cyclic(const FPModule& m) { return minimal_presentation(m).gen_count() == 1; }

FPModule canonical_module(const RingPtr& ring) {
    if (!ring->is_quotient()) return ring_module_cached(ring);
    int d = ring_dim(ring), dep = ring_depth(ring);
    if (d != dep) throw EngineError("canonical module requires a Cohen-Macaulay ring");
    const PolyCtx& ctx = ring->ctx();
    auto p = GradedRing::polynomial(ctx.vars, ctx.weights, ctx.field.modulus(), ctx.ord);
    IdealHandle defining(p, ring->relations());
    FPModule r_over_p = FPModule::quotient_by_ideal(defining);
    int c = static_cast<int>(ctx.nvars()) - d;
    FPModule w = ext_module(c, r_over_p, ring_module_cached(p));
    return base_change(minimal_presentation(w), ring);
}

bool ring_is_gorenstein(const RingPtr& ring) {
    auto& sc = ring_scope(ring);
    {
        std::lock_guard<std::mutex> lock(sc.mu);
        if (sc.gorenstein) return *sc.gorenstein;
    }
    bool g;
    if (ring_dim(ring) != ring_depth(ring)) {
        g = false;
    } else {
        FPModule wm = minimal_presentation(canonical_module(ring));
        g = wm.gen_count() == 1 && wm.pres().cols() == 0;
    }
    std::lock_guard<std::mutex> lock(sc.mu);
    if (!sc.gorenstein) sc.gorenstein = g;
    return *sc.gorenstein;
}

bool free_over(const FPModule& m, const IdealHandle& i) {
    IdealHandle ann = annihilator(m);
    if (!ann.contains(i)) throw EngineError("free_over: the ideal does not annihilate the module");
    auto rq = GradedRing::quotient(m.ring(), i.gens());
    return is_free_module(base_change(minimal_presentation(m), rq));
}

namespace {

bool agree_core(const FPModule& a, const FPModule& b, int betti_bound, int shift) {
    FPModule am = minimal_presentation(a), bm = minimal_presentation(b);
    if (am.gen_count() != bm.gen_count()) return false;
    if (am.gen_count() == 0) return true;

    std::vector<int32_t> ta = am.gen_twists(), tb = bm.gen_twists();
    for (auto& v : tb) v += shift;
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    if (ta != tb) return false;

    Resolution ra = free_resolution(am, betti_bound), rb = free_resolution(bm, betti_bound);
    BettiTable shifted;
    for (const auto& [key, v] : rb.betti.b) shifted.b[{key.first, key.second + shift}] = v;
    if (!(ra.betti == shifted)) return false;

    if (!annihilator(am).equals(annihilator(bm))) return false;

    int lo = std::min(ta.front(), tb.front());
    int hi = std::max(ta.back(), tb.back()) + ring_dim(a.ring()) + 4;
    std::vector<int64_t> ha = module_numerics(am, lo, hi).hf;
    std::vector<int64_t> hb = module_numerics(bm, lo - shift, hi - shift).hf;
    return ha == hb;
}

}  // namespace

bool modules_numerically_agree(const FPModule& a, const FPModule& b, int betti_bound) {
    require_same_ring(a.ring(), b.ring(), "numeric agreement");
    return agree_core(a, b, betti_bound, 0);
}

bool modules_numerically_agree_up_to_shift(const FPModule& a, const FPModule& b, int betti_bound) {
    require_same_ring(a.ring(), b.ring(), "numeric agreement");
    FPModule am = minimal_presentation(a), bm = minimal_presentation(b);
    if (am.gen_count() == 0 || bm.gen_count() == 0) return am.gen_count() == bm.gen_count();
    int shift = *std::min_element(am.gen_twists().begin(), am.gen_twists().end()) -
                *std::min_element(bm.gen_twists().begin(), bm.gen_twists().end());
    return agree_core(am, bm, betti_bound, shift);
}

}  // namespace lk
