#include "lk/fpmodule.hpp"

#include <algorithm>
#include <sstream>

namespace lk {

std::string BettiTable::to_string() const {
    if (b.empty()) return "(zero module)";
    int imax = 0, jmin = 0, jmax = 0;
    bool first = true;
    for (const auto& [k, v] : b) {
        (void)v;
        imax = std::max(imax, k.first);
        if (first) {
            jmin = jmax = k.second;
            first = false;
        } else {
            jmin = std::min(jmin, k.second);
            jmax = std::max(jmax, k.second);
        }
    }
    std::ostringstream os;
    os << "betti (rows j-i, cols i):\n";
    for (int d = jmin; d <= jmax; ++d) {
        os << "  " << d << ":";
        for (int i = 0; i <= imax; ++i) {
            auto it = b.find({i, d + i});
            os << " " << (it == b.end() ? 0 : it->second);
        }
        os << "\n";
    }
    return os.str();
}

std::vector<int32_t> Resolution::free_twists(int i) const {
    if (i == 0) return chain.empty() ? std::vector<int32_t>{} : chain[0].row_twist();
    if (static_cast<size_t>(i) <= chain.size()) return chain[static_cast<size_t>(i) - 1].col_deg();
    return {};
}

bool Resolution::finished() const {
    return !chain.empty() && chain.back().cols() == 0 && static_cast<int>(chain.size()) <= bound + 1;
}

FPModule::FPModule(PolyMatrix pres) : pres_(std::move(pres)), cache_(std::make_shared<Cache>()) {
    pres_.validate("module presentation");
}

FPModule FPModule::ring_module(const RingPtr& ring) {
    return FPModule(PolyMatrix(ring, {0}, {}));
}

FPModule FPModule::free_module(const RingPtr& ring, std::vector<int32_t> twists) {
    return FPModule(PolyMatrix(ring, std::move(twists), {}));
}

FPModule FPModule::zero_module(const RingPtr& ring) {
    return FPModule(PolyMatrix(ring, {}, {}));
}

FPModule FPModule::quotient_by_ideal(const IdealHandle& i) {
    auto gens = i.reduced_gens();
    std::vector<int32_t> cd;
    for (const auto& g : gens) {
        int32_t d = 0;
        poly_is_homogeneous(g, &d);
        cd.push_back(d);
    }
    PolyMatrix p(i.ring(), {0}, std::move(cd));
    for (size_t c = 0; c < gens.size(); ++c) p.set(0, c, gens[c]);
    return FPModule(std::move(p));
}

FPModule FPModule::ideal_as_module(const IdealHandle& i) {
    auto gens = i.reduced_gens();
    if (gens.empty()) return zero_module(i.ring());
    std::vector<int32_t> cd;
    for (const auto& g : gens) {
        int32_t d = 0;
        poly_is_homogeneous(g, &d);
        cd.push_back(d);
    }
    PolyMatrix row(i.ring(), {0}, cd);
    for (size_t c = 0; c < gens.size(); ++c) row.set(0, c, gens[c]);
    PolyMatrix rels = kernel_gens(row);  // syzygies among the ideal generators
    return FPModule(std::move(rels));
}

FPModule FPModule::residue_field(const RingPtr& ring) {
    const PolyCtx& ctx = ring->ctx();
    std::vector<int32_t> cd(ctx.nvars());
    for (size_t v = 0; v < ctx.nvars(); ++v) cd[v] = ctx.weights[v];
    PolyMatrix p(ring, {0}, std::move(cd));
    for (size_t v = 0; v < ctx.nvars(); ++v) p.set(0, v, poly_var(ctx, v));
    return FPModule(std::move(p));
}

// ---- chain minimalization ----

namespace {

struct UnitPos {
    size_t level, r, c;
};

std::optional<UnitPos> find_unit(const std::vector<PolyMatrix>& chain) {
    for (size_t l = 0; l < chain.size(); ++l) {
        const PolyMatrix& d = chain[l];
        for (size_t r = 0; r < d.rows(); ++r)
            for (size_t c = 0; c < d.cols(); ++c) {
                const Polynomial& f = d.at(r, c);
                if (!f.is_zero() && d.col_deg()[c] == d.row_twist()[r]) return UnitPos{l, r, c};
            }
    }
    return std::nullopt;
}

PolyMatrix drop_row_col(const PolyMatrix& m, std::optional<size_t> drop_r, std::optional<size_t> drop_c) {
    std::vector<int32_t> rt, cd;
    for (size_t r = 0; r < m.rows(); ++r)
        if (!drop_r || r != *drop_r) rt.push_back(m.row_twist()[r]);
    for (size_t c = 0; c < m.cols(); ++c)
        if (!drop_c || c != *drop_c) cd.push_back(m.col_deg()[c]);
    PolyMatrix out(m.ring(), std::move(rt), std::move(cd));
    size_t rr = 0;
    for (size_t r = 0; r < m.rows(); ++r) {
        if (drop_r && r == *drop_r) continue;
        size_t cc = 0;
        for (size_t c = 0; c < m.cols(); ++c) {
            if (drop_c && c == *drop_c) continue;
            out.set(rr, cc, m.at(r, c));
            ++cc;
        }
        ++rr;
    }
    return out;
}

}  // namespace

void minimalize_chain(std::vector<PolyMatrix>& chain) {
    if (chain.empty()) return;
    const RingPtr ring = chain[0].ring();
    const PolyCtx& ctx = ring->ctx();
    while (auto u = find_unit(chain)) {
        PolyMatrix& d = chain[u->level];
        const size_t r = u->r, c = u->c;
        uint32_t unit = d.at(r, c).lead().c;
        uint32_t uinv = ctx.field.inv(unit);

        // alphas from the original row r
        std::vector<Polynomial> alpha(d.cols());
        for (size_t c2 = 0; c2 < d.cols(); ++c2)
            if (c2 != c) alpha[c2] = poly_scale(ctx, d.at(r, c2), uinv);

        // clear row r: col_{c2} -= alpha_{c2} * col_c
        for (size_t c2 = 0; c2 < d.cols(); ++c2) {
            if (c2 == c || alpha[c2].is_zero()) continue;
            for (size_t r2 = 0; r2 < d.rows(); ++r2)
                d.set(r2, c2, poly_sub(ctx, d.at(r2, c2), poly_mul(ctx, alpha[c2], d.at(r2, c))));
        }

        // row c of the next differential picks up the basis change
        if (u->level + 1 < chain.size()) {
            PolyMatrix& nx = chain[u->level + 1];
            for (size_t c2 = 0; c2 < d.cols(); ++c2) {
                if (c2 == c || alpha[c2].is_zero()) continue;
                for (size_t j = 0; j < nx.cols(); ++j)
                    nx.set(c, j, poly_add(ctx, nx.at(c, j), poly_mul(ctx, alpha[c2], nx.at(c2, j))));
            }
            for (size_t j = 0; j < nx.cols(); ++j)
                if (!nx.at(c, j).is_zero())
                    throw EngineError("minimalize_chain: cancelled row did not vanish (chain is not a complex)");
            chain[u->level + 1] = drop_row_col(nx, c, std::nullopt);
        }

        // the cancelled basis vector of F_level maps to zero downstairs
        if (u->level > 0) chain[u->level - 1] = drop_row_col(chain[u->level - 1], std::nullopt, r);

        chain[u->level] = drop_row_col(d, r, c);
    }
    // no per-matrix column sorting here: bases are shared between
    // consecutive differentials
}

// ---- resolutions ----

namespace {

std::shared_ptr<const Resolution> compute_resolution(const FPModule& m, int bound) {
    std::vector<PolyMatrix> chain;
    chain.push_back(m.pres());
    while (static_cast<int>(chain.size()) < bound + 2) {
        if (chain.back().cols() == 0) break;  // kernel of a zero map from nothing: done
        PolyMatrix k = kernel_gens(chain.back());
        bool ended = k.cols() == 0;
        chain.push_back(std::move(k));
        if (ended) break;
    }
    minimalize_chain(chain);

    auto res = std::make_shared<Resolution>();
    res->ring = m.ring();
    res->chain = std::move(chain);
    res->bound = bound;

    // invariants: complex property and minimality (always asserted)
    for (size_t j = 0; j + 1 < res->chain.size(); ++j) {
        if (!mat_mul(res->chain[j], res->chain[j + 1]).is_zero())
            throw EngineError("resolution invariant failed: d o d != 0");
    }
    for (const auto& d : res->chain) {
        d.validate("resolution differential");
        for (size_t r = 0; r < d.rows(); ++r)
            for (size_t c = 0; c < d.cols(); ++c)
                if (!d.at(r, c).is_zero() && d.col_deg()[c] - d.row_twist()[r] <= 0)
                    throw EngineError("resolution invariant failed: non-positive degree entry in a minimal resolution");
    }

    if (!res->chain.empty()) {
        for (int32_t t : res->chain[0].row_twist()) res->betti.b[{0, t}] += 1;
        for (int i = 1; i <= bound && static_cast<size_t>(i) <= res->chain.size(); ++i)
            for (int32_t t : res->chain[static_cast<size_t>(i) - 1].col_deg()) res->betti.b[{i, t}] += 1;
    }
    return res;
}

}  // namespace

Resolution free_resolution(const FPModule& m, int bound) {
    if (bound < 0) throw EngineError("free_resolution: bound must be >= 0");
    auto& cache = *m.cache();
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        if (cache.res && cache.res->bound >= bound) {
            Resolution r = *cache.res;
            // restrict the Betti table to the requested bound
            r.bound = bound;
            std::erase_if(r.betti.b, [&](const auto& kv) { return kv.first.first > bound; });
            return r;
        }
    }
    auto res = compute_resolution(m, bound);
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        if (!cache.res || cache.res->bound < bound) cache.res = res;
    }
    return *res;
}

FPModule minimal_presentation(const FPModule& m) {
    {
        std::lock_guard<std::mutex> lock(m.cache()->mu);
        if (m.cache()->is_minimal) return m;
        if (m.cache()->minimal) return *m.cache()->minimal;
    }
    Resolution r = free_resolution(m, 0);
    FPModule out = r.chain.empty() ? FPModule::zero_module(m.ring()) : FPModule(r.chain[0]);
    {
        // a minimal presentation is its own minimal presentation (flag, not
        // a self-pointer, to keep the cache cycle-free)
        std::lock_guard<std::mutex> lock(out.cache()->mu);
        out.cache()->is_minimal = true;
    }
    auto ptr = std::make_shared<const FPModule>(out);
    {
        std::lock_guard<std::mutex> lock(m.cache()->mu);
        if (!m.cache()->minimal) m.cache()->minimal = ptr;
    }
    return out;
}

FPModule syzygy_power(const FPModule& m, int n) {
    if (n < 0) throw EngineError("syzygy_power: n must be >= 0");
    if (n == 0) return minimal_presentation(m);
    Resolution r = free_resolution(m, n);
    // Omega^n is generated by the columns of d_n with relations d_{n+1}
    if (static_cast<size_t>(n) > r.chain.size()) return FPModule::zero_module(m.ring());
    if (static_cast<size_t>(n) == r.chain.size())  // resolution ended: kernel of the last map is zero
        return FPModule::free_module(m.ring(), r.chain.back().col_deg());
    return FPModule(r.chain[static_cast<size_t>(n)]);
}

bool is_zero_module(const FPModule& m) {
    if (m.gen_count() == 0) return true;
    return minimal_presentation(m).gen_count() == 0;
}

bool is_free_module(const FPModule& m) {
    FPModule mp = minimal_presentation(m);
    return mp.pres().cols() == 0;
}

FPModule direct_sum(const FPModule& a, const FPModule& b) {
    require_same_ring(a.ring(), b.ring(), "direct sum");
    std::vector<int32_t> rt = a.gen_twists();
    rt.insert(rt.end(), b.gen_twists().begin(), b.gen_twists().end());
    std::vector<int32_t> cd = a.pres().col_deg();
    cd.insert(cd.end(), b.pres().col_deg().begin(), b.pres().col_deg().end());
    PolyMatrix p(a.ring(), std::move(rt), std::move(cd));
    for (size_t r = 0; r < a.pres().rows(); ++r)
        for (size_t c = 0; c < a.pres().cols(); ++c) p.set(r, c, a.pres().at(r, c));
    for (size_t r = 0; r < b.pres().rows(); ++r)
        for (size_t c = 0; c < b.pres().cols(); ++c)
            p.set(a.pres().rows() + r, a.pres().cols() + c, b.pres().at(r, c));
    return FPModule(std::move(p));
}

FPModule base_change(const FPModule& m, const RingPtr& new_ring) {
    if (!m.ring()->ctx().same_signature(new_ring->ctx()))
        throw EngineError("base_change: rings have different ambient polynomial rings");
    PolyMatrix p(new_ring, m.pres().row_twist(), m.pres().col_deg());
    for (size_t r = 0; r < m.pres().rows(); ++r)
        for (size_t c = 0; c < m.pres().cols(); ++c) p.set(r, c, m.pres().at(r, c));
    return FPModule(std::move(p));
}

const SpanGB& module_span(const FPModule& m) {
    auto& cache = *m.cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    if (!cache.span) cache.span = std::make_shared<const SpanGB>(span_gb(m.pres()));
    return *cache.span;
}

}  // namespace lk
