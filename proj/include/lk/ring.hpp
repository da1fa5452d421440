#pragma once

#include <memory>

#include "lk/groebner.hpp"

namespace lk {

struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A standard graded polynomial ring P = k[x1..xn], or a quotient R = P/I
// carrying the reduced Groebner basis of its defining ideal. Immutable after
// construction; shared freely.
class GradedRing {
public:
    // polynomial ring
    static std::shared_ptr<const GradedRing> polynomial(std::vector<std::string> vars,
                                                        std::vector<int32_t> weights, uint32_t p,
                                                        MonomialOrder ord = MonomialOrder::grevlex());

    // quotient of `base` by additional homogeneous relations (base may itself
    // be a quotient; relations accumulate)
    static std::shared_ptr<const GradedRing> quotient(const std::shared_ptr<const GradedRing>& base,
                                                      const std::vector<Polynomial>& extra_relations);

    const PolyCtx& ctx() const { return ctx_; }
    const std::vector<Polynomial>& relations() const { return relations_; }
    const std::vector<Polynomial>& relation_gb() const { return rel_gb_; }
    bool is_quotient() const { return !rel_gb_.empty(); }
    uint32_t prime() const { return ctx_.field.modulus(); }

    // normal form mod the defining ideal; the canonical representative in R
    Polynomial nf(const Polynomial& f) const { return rel_gb_.empty() ? f : poly_nf(ctx_, f, rel_gb_); }

    bool structurally_equal(const GradedRing& o) const {
        if (!ctx_.same_signature(o.ctx_) || !(ctx_.ord == o.ctx_.ord)) return false;
        if (rel_gb_.size() != o.rel_gb_.size()) return false;
        for (size_t i = 0; i < rel_gb_.size(); ++i)
            if (!(rel_gb_[i] == o.rel_gb_[i])) return false;
        return true;
    }

    std::string describe() const;

private:
    GradedRing(PolyCtx ctx, std::vector<Polynomial> relations, std::vector<Polynomial> rel_gb)
        : ctx_(std::move(ctx)), relations_(std::move(relations)), rel_gb_(std::move(rel_gb)) {}

    PolyCtx ctx_;
    std::vector<Polynomial> relations_;
    std::vector<Polynomial> rel_gb_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

inline void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->structurally_equal(*b))
        throw EngineError(std::string(what) + ": operands live in different rings");
}

}  // namespace lk
