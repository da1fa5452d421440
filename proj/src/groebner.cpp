#include "lk/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lk {

ModVec mv_add(const PolyCtx& ctx, const ModVec& a, const ModVec& b) {
    ModVec out(a.rank());
    for (size_t i = 0; i < a.rank(); ++i) out.c[i] = poly_add(ctx, a.c[i], b.c[i]);
    return out;
}

ModVec mv_sub(const PolyCtx& ctx, const ModVec& a, const ModVec& b) {
    ModVec out(a.rank());
    for (size_t i = 0; i < a.rank(); ++i) out.c[i] = poly_sub(ctx, a.c[i], b.c[i]);
    return out;
}

ModVec mv_scale(const PolyCtx& ctx, const ModVec& a, uint32_t k) {
    ModVec out(a.rank());
    for (size_t i = 0; i < a.rank(); ++i) out.c[i] = poly_scale(ctx, a.c[i], k);
    return out;
}

ModVec mv_mul_term(const PolyCtx& ctx, const ModVec& a, const Monomial& m, uint32_t k) {
    ModVec out(a.rank());
    for (size_t i = 0; i < a.rank(); ++i) out.c[i] = poly_mul_term(ctx, a.c[i], m, k);
    return out;
}

int mv_cmp_total(const PolyCtx& ctx, const ModVec& a, const ModVec& b) {
    for (size_t i = 0; i < a.rank(); ++i) {
        int c = poly_cmp_total(ctx, a.c[i], b.c[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::optional<ModLead> mv_lead(const PolyCtx& ctx, const ModOrder& ord, const ModVec& v) {
    (void)ctx;
    std::optional<ModLead> best;
    for (size_t i = 0; i < v.rank(); ++i) {
        if (v.c[i].is_zero()) continue;
        const Term& t = v.c[i].lead();
        if (!best || ord.cmp(static_cast<int>(i), t.m, best->comp, best->m) > 0)
            best = ModLead{static_cast<int>(i), t.m, t.c};
    }
    return best;
}

namespace {

// subtract a single term from component `comp`
ModVec mv_drop_term(const PolyCtx& ctx, ModVec v, int comp, const Monomial& m, uint32_t c) {
    Polynomial t = poly_term(m, ctx.field.neg(c));
    v.c[static_cast<size_t>(comp)] = poly_add(ctx, v.c[static_cast<size_t>(comp)], t);
    return v;
}

struct Basis {
    const PolyCtx& ctx;
    const ModOrder& ord;
    std::vector<ModVec> elems;
    std::vector<ModLead> leads;
    std::vector<char> alive;

    int add(ModVec v) {
        auto l = mv_lead(ctx, ord, v);
        elems.push_back(std::move(v));
        leads.push_back(*l);
        alive.push_back(1);
        return static_cast<int>(elems.size()) - 1;
    }
};

// full normal form against the alive elements of a basis
ModVec nf_against(const PolyCtx& ctx, const ModOrder& ord, ModVec work, const Basis& B, int skip = -1) {
    ModVec out(work.rank());
    while (true) {
        auto l = mv_lead(ctx, ord, work);
        if (!l) break;
        int red = -1;
        for (size_t k = 0; k < B.elems.size(); ++k) {
            if (!B.alive[k] || static_cast<int>(k) == skip) continue;
            const ModLead& gl = B.leads[k];
            if (gl.comp == l->comp && mono_divides(gl.m, l->m)) {
                red = static_cast<int>(k);
                break;
            }
        }
        if (red >= 0) {
            const ModLead& gl = B.leads[static_cast<size_t>(red)];
            Monomial q = mono_div(l->m, gl.m);
            uint32_t k = ctx.field.div(l->coeff, gl.coeff);
            work = mv_sub(ctx, work, mv_mul_term(ctx, B.elems[static_cast<size_t>(red)], q, k));
        } else {
            out.c[static_cast<size_t>(l->comp)] =
                poly_add(ctx, out.c[static_cast<size_t>(l->comp)], poly_term(l->m, l->coeff));
            work = mv_drop_term(ctx, work, l->comp, l->m, l->coeff);
        }
    }
    return out;
}

struct Pair {
    int32_t deg;
    int comp;
    int i, j;  // i < j
    Monomial lcm;
};

struct PairCmp {
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.comp != b.comp) return a.comp < b.comp;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    }
};

}  // namespace

ModVec module_nf(const PolyCtx& ctx, const ModOrder& ord, const ModVec& v, const std::vector<ModVec>& basis) {
    Basis B{ctx, ord, {}, {}, {}};
    for (const auto& g : basis)
        if (!g.is_zero()) B.add(g);
    return nf_against(ctx, ord, v, B);
}

std::vector<ModVec> module_gb(const PolyCtx& ctx, const ModOrder& ord, std::vector<ModVec> gens,
                              const GBOptions& opt) {
    Basis B{ctx, ord, {}, {}, {}};

    // canonical input: drop zeros, sort, pre-reduce each generator
    std::erase_if(gens, [](const ModVec& v) { return v.is_zero(); });
    std::sort(gens.begin(), gens.end(), [&](const ModVec& a, const ModVec& b) {
        auto la = mv_lead(ctx, ord, a), lb = mv_lead(ctx, ord, b);
        int c = ord.cmp(la->comp, la->m, lb->comp, lb->m);
        if (c != 0) return c < 0;
        return mv_cmp_total(ctx, a, b) < 0;
    });

    std::set<Pair, PairCmp> queue;

    auto pair_deg = [&](int comp, const Monomial& lcm) {
        int32_t tw = opt.comp_twist.empty() ? 0 : opt.comp_twist[static_cast<size_t>(comp)];
        return lcm.deg + tw;
    };

    auto add_element = [&](ModVec v) {
        auto l = mv_lead(ctx, ord, v);
        uint32_t inv = ctx.field.inv(l->coeff);
        if (inv != 1) v = mv_scale(ctx, v, inv);
        int t = B.add(std::move(v));
        const ModLead& lt = B.leads[static_cast<size_t>(t)];

        // Gebauer-Moeller B criterion on surviving old pairs
        if (opt.gm_criteria)
            for (auto it = queue.begin(); it != queue.end();) {
                const Pair& pr = *it;
                if (pr.comp == lt.comp && mono_divides(lt.m, pr.lcm)) {
                    Monomial l_it = mono_lcm(B.leads[static_cast<size_t>(pr.i)].m, lt.m, ctx.weights);
                    Monomial l_jt = mono_lcm(B.leads[static_cast<size_t>(pr.j)].m, lt.m, ctx.weights);
                    if (!(l_it == pr.lcm) && !(l_jt == pr.lcm)) {
                        it = queue.erase(it);
                        continue;
                    }
                }
                ++it;
            }

        // candidate new pairs (i, t)
        struct Cand {
            int i;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> cands;
        for (int i = 0; i < t; ++i) {
            if (!B.alive[static_cast<size_t>(i)]) continue;
            const ModLead& li = B.leads[static_cast<size_t>(i)];
            if (li.comp != lt.comp) continue;
            cands.push_back({i, mono_lcm(li.m, lt.m, ctx.weights), mono_coprime(li.m, lt.m)});
        }
        // M criterion: drop (i,t) when lcm(j,t) properly divides lcm(i,t)
        std::vector<char> drop(cands.size(), 0);
        if (opt.gm_criteria) {
            for (size_t a = 0; a < cands.size(); ++a)
                for (size_t b = 0; b < cands.size(); ++b) {
                    if (a == b || drop[a]) continue;
                    if (!(cands[b].lcm == cands[a].lcm) && mono_divides(cands[b].lcm, cands[a].lcm)) {
                        drop[a] = 1;
                        break;
                    }
                }
            // F criterion: one representative per equal-lcm class (lowest i)
            for (size_t a = 0; a < cands.size(); ++a) {
                if (drop[a]) continue;
                for (size_t b = 0; b < a; ++b) {
                    if (drop[b]) continue;
                    if (cands[b].lcm == cands[a].lcm) {
                        drop[a] = 1;
                        break;
                    }
                }
            }
        }
        for (size_t a = 0; a < cands.size(); ++a) {
            if (drop[a]) continue;
            if (opt.product_criterion && cands[a].coprime) continue;
            queue.insert({pair_deg(lt.comp, cands[a].lcm), lt.comp, cands[a].i, t, cands[a].lcm});
        }
    };

    for (auto& g : gens) {
        ModVec r = nf_against(ctx, ord, g, B);
        if (!r.is_zero()) add_element(std::move(r));
    }

    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        const ModLead& li = B.leads[static_cast<size_t>(pr.i)];
        const ModLead& lj = B.leads[static_cast<size_t>(pr.j)];
        ModVec s = mv_sub(
            ctx,
            mv_mul_term(ctx, B.elems[static_cast<size_t>(pr.i)], mono_div(pr.lcm, li.m), ctx.field.inv(li.coeff)),
            mv_mul_term(ctx, B.elems[static_cast<size_t>(pr.j)], mono_div(pr.lcm, lj.m), ctx.field.inv(lj.coeff)));
        ModVec h = nf_against(ctx, ord, s, B);
        if (!h.is_zero()) add_element(std::move(h));
    }

    // minimal basis: drop elements whose lead is divisible by another lead
    std::vector<int> order_idx;
    for (size_t k = 0; k < B.elems.size(); ++k) order_idx.push_back(static_cast<int>(k));
    for (size_t a = 0; a < order_idx.size(); ++a) {
        int g = order_idx[a];
        if (!B.alive[static_cast<size_t>(g)]) continue;
        for (size_t b = 0; b < order_idx.size(); ++b) {
            int h = order_idx[b];
            if (h == g || !B.alive[static_cast<size_t>(h)]) continue;
            const ModLead& lg = B.leads[static_cast<size_t>(g)];
            const ModLead& lh = B.leads[static_cast<size_t>(h)];
            if (lg.comp == lh.comp && mono_divides(lh.m, lg.m)) {
                B.alive[static_cast<size_t>(g)] = 0;
                break;
            }
        }
    }

    // tail reduction to the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k < B.elems.size(); ++k) {
            if (!B.alive[k]) continue;
            ModVec r = nf_against(ctx, ord, B.elems[k], B, static_cast<int>(k));
            if (mv_cmp_total(ctx, r, B.elems[k]) != 0) {
                B.elems[k] = std::move(r);
                changed = true;
            }
        }
    }

    std::vector<ModVec> out;
    for (size_t k = 0; k < B.elems.size(); ++k)
        if (B.alive[k]) out.push_back(B.elems[k]);
    std::sort(out.begin(), out.end(), [&](const ModVec& a, const ModVec& b) {
        auto la = mv_lead(ctx, ord, a), lb = mv_lead(ctx, ord, b);
        int c = ord.cmp(la->comp, la->m, lb->comp, lb->m);
        if (c != 0) return c > 0;
        return mv_cmp_total(ctx, a, b) > 0;
    });
    return out;
}

std::vector<Polynomial> buchberger(const PolyCtx& ctx, const std::vector<Polynomial>& gens) {
    std::vector<ModVec> wrapped;
    for (const auto& f : gens) {
        if (f.is_zero()) continue;
        ModVec v(1);
        v.c[0] = f;
        wrapped.push_back(std::move(v));
    }
    TopOrder ord(ctx.ord, ctx.weights);
    GBOptions opt;
    opt.product_criterion = true;
    auto gb = module_gb(ctx, ord, std::move(wrapped), opt);
    std::vector<Polynomial> out;
    out.reserve(gb.size());
    for (auto& v : gb) out.push_back(std::move(v.c[0]));
    return out;
}

Polynomial poly_nf(const PolyCtx& ctx, const Polynomial& f, const std::vector<Polynomial>& gb) {
    std::vector<ModVec> basis;
    for (const auto& g : gb) {
        ModVec v(1);
        v.c[0] = g;
        basis.push_back(std::move(v));
    }
    ModVec v(1);
    v.c[0] = f;
    TopOrder ord(ctx.ord, ctx.weights);
    return module_nf(ctx, ord, v, basis).c[0];
}

}  // namespace lk
