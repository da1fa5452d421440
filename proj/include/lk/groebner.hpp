#pragma once

#include <memory>
#include <optional>

#include "lk/poly.hpp"

// Buchberger engine for submodules of free modules over a polynomial ring.
// Ideals are the rank-one case. Quotient-ring computations happen here too:
// callers adjoin the ring relations (times each free-module basis vector)
// before computing, so the engine itself only ever sees honest P-modules.
namespace lk {

// Element of a free module, dense by component. Each component polynomial is
// kept sorted under the ambient PolyCtx order.
struct ModVec {
    std::vector<Polynomial> c;

    explicit ModVec(size_t rank = 0) : c(rank) {}
    size_t rank() const { return c.size(); }
    bool is_zero() const {
        for (const auto& f : c)
            if (!f.is_zero()) return false;
        return true;
    }
};

ModVec mv_add(const PolyCtx& ctx, const ModVec& a, const ModVec& b);
ModVec mv_sub(const PolyCtx& ctx, const ModVec& a, const ModVec& b);
ModVec mv_scale(const PolyCtx& ctx, const ModVec& a, uint32_t k);
ModVec mv_mul_term(const PolyCtx& ctx, const ModVec& a, const Monomial& m, uint32_t k);
int mv_cmp_total(const PolyCtx& ctx, const ModVec& a, const ModVec& b);

// Order on module terms (component, monomial).
class ModOrder {
public:
    virtual ~ModOrder() = default;
    // strict total order; 0 only for identical (comp, monomial)
    virtual int cmp(int c1, const Monomial& m1, int c2, const Monomial& m2) const = 0;
};

// term-over-position: ring order first, lower component wins ties
class TopOrder final : public ModOrder {
public:
    TopOrder(const MonomialOrder& ord, const std::vector<int32_t>& weights) : ord_(ord), weights_(weights) {}
    int cmp(int c1, const Monomial& m1, int c2, const Monomial& m2) const override {
        int c = mono_cmp(ord_, weights_, m1, m2);
        if (c != 0) return c;
        if (c1 != c2) return c1 < c2 ? 1 : -1;
        return 0;
    }

private:
    const MonomialOrder& ord_;
    const std::vector<int32_t>& weights_;
};

// position-over-term: lower component dominates
class PotOrder final : public ModOrder {
public:
    PotOrder(const MonomialOrder& ord, const std::vector<int32_t>& weights) : ord_(ord), weights_(weights) {}
    int cmp(int c1, const Monomial& m1, int c2, const Monomial& m2) const override {
        if (c1 != c2) return c1 < c2 ? 1 : -1;
        return mono_cmp(ord_, weights_, m1, m2);
    }

private:
    const MonomialOrder& ord_;
    const std::vector<int32_t>& weights_;
};

// Order induced by a set of module elements (the columns of a presentation):
// e_i m > e_j m' iff lead(col_i) * m > lead(col_j) * m' in the target order,
// ties broken by lower column index.
class SchreyerOrder final : public ModOrder {
public:
    SchreyerOrder(const ModOrder& target, std::vector<std::pair<int, Monomial>> keys)
        : target_(target), keys_(std::move(keys)) {}
    int cmp(int c1, const Monomial& m1, int c2, const Monomial& m2) const override {
        const auto& k1 = keys_[static_cast<size_t>(c1)];
        const auto& k2 = keys_[static_cast<size_t>(c2)];
        int c = target_.cmp(k1.first, mono_mul(k1.second, m1), k2.first, mono_mul(k2.second, m2));
        if (c != 0) return c;
        if (c1 != c2) return c1 < c2 ? 1 : -1;
        return 0;
    }

private:
    const ModOrder& target_;
    std::vector<std::pair<int, Monomial>> keys_;
};

// Augmented order for syzygy computations on F (+) R^s: any term in the F
// part beats any tracking term; F part uses `front`, tracking part uses a
// Schreyer order induced by the tracked columns.
class SyzOrder final : public ModOrder {
public:
    SyzOrder(int front_rank, const ModOrder& front, const ModOrder& tracking)
        : front_rank_(front_rank), front_(front), tracking_(tracking) {}
    int cmp(int c1, const Monomial& m1, int c2, const Monomial& m2) const override {
        bool f1 = c1 < front_rank_, f2 = c2 < front_rank_;
        if (f1 != f2) return f1 ? 1 : -1;
        if (f1) return front_.cmp(c1, m1, c2, m2);
        return tracking_.cmp(c1 - front_rank_, m1, c2 - front_rank_, m2);
    }

private:
    int front_rank_;
    const ModOrder& front_;
    const ModOrder& tracking_;
};

struct ModLead {
    int comp;
    Monomial m;
    uint32_t coeff;
};

std::optional<ModLead> mv_lead(const PolyCtx& ctx, const ModOrder& ord, const ModVec& v);

struct GBOptions {
    // Buchberger's coprimality criterion; only valid for ideal (rank-one,
    // relation-free) computations in the polynomial ring.
    bool product_criterion = false;
    // Gebauer-Moeller pair pruning; affects speed only, never the reduced
    // basis (equivalence-tested)
    bool gm_criteria = true;
    // degree of each component, used by the normal selection strategy
    std::vector<int32_t> comp_twist;
};

// Reduced Groebner basis of the submodule generated by `gens`.
// Deterministic: canonical input normalization, normal selection strategy,
// Gebauer-Moeller pruning, full inter-reduction, canonical output order.
std::vector<ModVec> module_gb(const PolyCtx& ctx, const ModOrder& ord, std::vector<ModVec> gens,
                              const GBOptions& opt = {});

// Unique fully reduced normal form with respect to a (not necessarily
// reduced) basis; deterministic divisor choice.
ModVec module_nf(const PolyCtx& ctx, const ModOrder& ord, const ModVec& v, const std::vector<ModVec>& basis);

// ---- ideal-level wrappers (rank one) ----

std::vector<Polynomial> buchberger(const PolyCtx& ctx, const std::vector<Polynomial>& gens);
Polynomial poly_nf(const PolyCtx& ctx, const Polynomial& f, const std::vector<Polynomial>& gb);

}  // namespace lk
