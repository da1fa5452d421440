#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "lk/fp.hpp"
#include "lk/monomial.hpp"

namespace lk {

// Variable names, grading weights, coefficient field and active order.
// Polynomials are plain term containers; every operation takes the context.
struct PolyCtx {
    std::vector<std::string> vars;
    std::vector<int32_t> weights;
    Fp field;
    MonomialOrder ord;

    size_t nvars() const { return vars.size(); }

    int var_index(std::string_view name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool same_signature(const PolyCtx& o) const {
        return vars == o.vars && weights == o.weights && field == o.field;
    }
};

struct Term {
    Monomial m;
    uint32_t c = 0;
};

// Terms strictly descending under the active order, no zero coefficients,
// no duplicate monomials. The zero polynomial is the empty list.
struct Polynomial {
    std::vector<Term> ts;

    bool is_zero() const { return ts.empty(); }
    const Term& lead() const { return ts.front(); }
    bool operator==(const Polynomial& o) const {
        if (ts.size() != o.ts.size()) return false;
        for (size_t i = 0; i < ts.size(); ++i)
            if (ts[i].c != o.ts[i].c || !(ts[i].m == o.ts[i].m)) return false;
        return true;
    }
};

struct PolyParseError : std::runtime_error {
    size_t pos;
    PolyParseError(size_t at, const std::string& msg) : std::runtime_error(msg), pos(at) {}
};

// ---- construction / normalization ----

inline Polynomial poly_zero() { return {}; }

inline Polynomial poly_const(const PolyCtx& ctx, uint32_t c) {
    Polynomial f;
    if (c % ctx.field.modulus() != 0) f.ts.push_back({mono_one(ctx.nvars()), c % ctx.field.modulus()});
    return f;
}

inline Polynomial poly_term(const Monomial& m, uint32_t c) {
    Polynomial f;
    if (c) f.ts.push_back({m, c});
    return f;
}

inline Polynomial poly_var(const PolyCtx& ctx, size_t i) {
    std::vector<int32_t> e(ctx.nvars(), 0);
    e[i] = 1;
    return poly_term(mono_make(std::move(e), ctx.weights), 1);
}

// Sort descending, merge duplicates, drop zeros.
Polynomial poly_normalize(const PolyCtx& ctx, std::vector<Term> ts);

// Re-sort an existing polynomial after an order change.
inline Polynomial poly_reorder(const PolyCtx& ctx, const Polynomial& f) { return poly_normalize(ctx, f.ts); }

// ---- arithmetic ----

Polynomial poly_add(const PolyCtx& ctx, const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const PolyCtx& ctx, const Polynomial& f, const Polynomial& g);
Polynomial poly_neg(const PolyCtx& ctx, const Polynomial& f);
Polynomial poly_scale(const PolyCtx& ctx, const Polynomial& f, uint32_t c);
Polynomial poly_mul_term(const PolyCtx& ctx, const Polynomial& f, const Monomial& m, uint32_t c);
Polynomial poly_mul(const PolyCtx& ctx, const Polynomial& f, const Polynomial& g);

// f / g for an exact multiple of a single divisor; throws if the division
// leaves a remainder.
Polynomial poly_divexact(const PolyCtx& ctx, const Polynomial& f, const Polynomial& g);

// ---- degrees ----

struct DegreeInfo {
    enum class Kind { Zero, Homogeneous, Inhomogeneous } kind;
    int32_t degree = 0;  // valid for Homogeneous
};

inline DegreeInfo degree_check(const Polynomial& f) {
    if (f.is_zero()) return {DegreeInfo::Kind::Zero, 0};
    int32_t d = f.ts.front().m.deg;
    for (const auto& t : f.ts)
        if (t.m.deg != d) return {DegreeInfo::Kind::Inhomogeneous, 0};
    return {DegreeInfo::Kind::Homogeneous, d};
}

inline bool poly_is_homogeneous(const Polynomial& f, int32_t* deg_out = nullptr) {
    auto di = degree_check(f);
    if (di.kind == DegreeInfo::Kind::Inhomogeneous) return false;
    if (deg_out) *deg_out = di.degree;
    return true;
}

// ---- canonical order on whole polynomials (for deterministic output) ----

int poly_cmp_total(const PolyCtx& ctx, const Polynomial& f, const Polynomial& g);

// ---- text form ----

// Canonical interchange form: terms descending, symmetric coefficients,
// monomials as x^2*y, e.g. "x^2*y - 3*z + 1".
std::string poly_to_string(const PolyCtx& ctx, const Polynomial& f);

// Parse the canonical form (tolerant of whitespace); throws PolyParseError.
Polynomial poly_parse(const PolyCtx& ctx, std::string_view text);

}  // namespace lk
