#include "lk/ring.hpp"

#include <set>

namespace lk {

std::shared_ptr<const GradedRing> GradedRing::polynomial(std::vector<std::string> vars,
                                                         std::vector<int32_t> weights, uint32_t p,
                                                         MonomialOrder ord) {
    if (vars.empty()) throw EngineError("a ring needs at least one variable");
    if (weights.empty()) weights.assign(vars.size(), 1);
    if (weights.size() != vars.size()) throw EngineError("degree list does not match the variable list");
    for (int32_t w : weights)
        if (w < 1) throw EngineError("variable degrees must be positive");
    std::set<std::string> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size()) throw EngineError("duplicate variable name");
    PolyCtx ctx{std::move(vars), std::move(weights), Fp(p), std::move(ord)};
    return std::shared_ptr<const GradedRing>(new GradedRing(std::move(ctx), {}, {}));
}

std::shared_ptr<const GradedRing> GradedRing::quotient(const std::shared_ptr<const GradedRing>& base,
                                                       const std::vector<Polynomial>& extra_relations) {
    std::vector<Polynomial> rels = base->relations();
    for (const auto& f : extra_relations) {
        if (f.is_zero()) continue;
        if (!poly_is_homogeneous(f))
            throw EngineError("quotient relations must be homogeneous: " + poly_to_string(base->ctx(), f));
        rels.push_back(f);
    }
    auto gb = buchberger(base->ctx(), rels);
    for (const auto& g : gb)
        if (g.lead().m.is_one()) throw EngineError("quotient by the unit ideal is not a graded ring");
    return std::shared_ptr<const GradedRing>(new GradedRing(base->ctx(), std::move(rels), std::move(gb)));
}

std::string GradedRing::describe() const {
    std::string s = "k[";
    for (size_t i = 0; i < ctx_.vars.size(); ++i) {
        if (i) s += ",";
        s += ctx_.vars[i];
    }
    s += "]";
    if (is_quotient()) {
        s += "/(";
        for (size_t i = 0; i < relations_.size(); ++i) {
            if (i) s += ", ";
            s += poly_to_string(ctx_, relations_[i]);
        }
        s += ")";
    }
    s += " p=" + std::to_string(prime());
    return s;
}

}  // namespace lk
