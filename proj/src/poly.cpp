#include "lk/poly.hpp"

#include <algorithm>

namespace lk {

Polynomial poly_normalize(const PolyCtx& ctx, std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
        return mono_cmp(ctx.ord, ctx.weights, a.m, b.m) > 0;
    });
    Polynomial out;
    out.ts.reserve(ts.size());
    for (auto& t : ts) {
        uint32_t c = t.c % ctx.field.modulus();
        if (c == 0) continue;
        if (!out.ts.empty() && out.ts.back().m == t.m) {
            out.ts.back().c = ctx.field.add(out.ts.back().c, c);
            if (out.ts.back().c == 0) out.ts.pop_back();
        } else {
            out.ts.push_back({std::move(t.m), c});
        }
    }
    return out;
}

Polynomial poly_add(const PolyCtx& ctx, const Polynomial& f, const Polynomial& g) {
    Polynomial out;
    out.ts.reserve(f.ts.size() + g.ts.size());
    size_t i = 0, j = 0;
    while (i < f.ts.size() && j < g.ts.size()) {
        int c = mono_cmp(ctx.ord, ctx.weights, f.ts[i].m, g.ts[j].m);
        if (c > 0) {
            out.ts.push_back(f.ts[i++]);
        } else if (c < 0) {
            out.ts.push_back(g.ts[j++]);
        } else {
            uint32_t s = ctx.field.add(f.ts[i].c, g.ts[j].c);
            if (s) out.ts.push_back({f.ts[i].m, s});
            ++i;
            ++j;
        }
    }
    for (; i < f.ts.size(); ++i) out.ts.push_back(f.ts[i]);
    for (; j < g.ts.size(); ++j) out.ts.push_back(g.ts[j]);
    return out;
}

Polynomial poly_neg(const PolyCtx& ctx, const Polynomial& f) {
    Polynomial out = f;
    for (auto& t : out.ts) t.c = ctx.field.neg(t.c);
    return out;
}

Polynomial poly_sub(const PolyCtx& ctx, const Polynomial& f, const Polynomial& g) {
    return poly_add(ctx, f, poly_neg(ctx, g));
}

Polynomial poly_scale(const PolyCtx& ctx, const Polynomial& f, uint32_t c) {
    c %= ctx.field.modulus();
    if (c == 0) return {};
    if (c == 1) return f;
    Polynomial out = f;
    for (auto& t : out.ts) t.c = ctx.field.mul(t.c, c);
    return out;
}

Polynomial poly_mul_term(const PolyCtx& ctx, const Polynomial& f, const Monomial& m, uint32_t c) {
    c %= ctx.field.modulus();
    if (c == 0) return {};
    Polynomial out;
    out.ts.reserve(f.ts.size());
    for (const auto& t : f.ts) out.ts.push_back({mono_mul(t.m, m), ctx.field.mul(t.c, c)});
    return out;  // multiplying by a monomial preserves the strict ordering
}

Polynomial poly_mul(const PolyCtx& ctx, const Polynomial& f, const Polynomial& g) {
    Polynomial acc;
    const Polynomial& small = f.ts.size() <= g.ts.size() ? f : g;
    const Polynomial& big = f.ts.size() <= g.ts.size() ? g : f;
    for (const auto& t : small.ts) acc = poly_add(ctx, acc, poly_mul_term(ctx, big, t.m, t.c));
    return acc;
}

Polynomial poly_divexact(const PolyCtx& ctx, const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::domain_error("exact division by zero polynomial");
    Polynomial rem = f, quot;
    uint32_t glc_inv = ctx.field.inv(g.lead().c);
    while (!rem.is_zero()) {
        const Term& lt = rem.lead();
        if (!mono_divides(g.lead().m, lt.m))
            throw std::domain_error("exact polynomial division has a remainder");
        Monomial q = mono_div(lt.m, g.lead().m);
        uint32_t qc = ctx.field.mul(lt.c, glc_inv);
        quot.ts.push_back({q, qc});
        rem = poly_sub(ctx, rem, poly_mul_term(ctx, g, q, qc));
    }
    return poly_normalize(ctx, std::move(quot.ts));
}

int poly_cmp_total(const PolyCtx& ctx, const Polynomial& f, const Polynomial& g) {
    size_t n = std::min(f.ts.size(), g.ts.size());
    for (size_t i = 0; i < n; ++i) {
        int c = mono_cmp(ctx.ord, ctx.weights, f.ts[i].m, g.ts[i].m);
        if (c != 0) return c;
        if (f.ts[i].c != g.ts[i].c) return f.ts[i].c < g.ts[i].c ? -1 : 1;
    }
    if (f.ts.size() != g.ts.size()) return f.ts.size() < g.ts.size() ? -1 : 1;
    return 0;
}

// ---- text form ----

static void mono_print(const PolyCtx& ctx, const Monomial& m, std::string& out) {
    bool first = true;
    for (size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!first) out += '*';
        first = false;
        out += ctx.vars[i];
        if (m.e[i] != 1) {
            out += '^';
            out += std::to_string(m.e[i]);
        }
    }
    if (first) out += '1';
}

std::string poly_to_string(const PolyCtx& ctx, const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.ts) {
        int64_t s = ctx.field.symmetric(t.c);
        bool neg = s < 0;
        uint64_t a = neg ? static_cast<uint64_t>(-s) : static_cast<uint64_t>(s);
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (t.m.is_one()) {
            out += std::to_string(a);
        } else {
            if (a != 1) {
                out += std::to_string(a);
                out += '*';
            }
            mono_print(ctx, t.m, out);
        }
    }
    return out;
}

namespace {

struct PolyLexer {
    std::string_view s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    std::optional<uint64_t> number() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        uint64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<uint64_t>(s[i] - '0');
            if (v > (1ull << 62)) throw PolyParseError(i, "integer literal too large");
            ++i;
        }
        return v;
    }
    std::optional<std::string> ident() {
        skip_ws();
        if (i >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) return std::nullopt;
        size_t b = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        return std::string(s.substr(b, i - b));
    }
};

}  // namespace

Polynomial poly_parse(const PolyCtx& ctx, std::string_view text) {
    PolyLexer lx{text};
    std::vector<Term> terms;
    bool first = true;
    while (true) {
        lx.skip_ws();
        if (lx.eof()) {
            if (first) throw PolyParseError(lx.i, "empty polynomial");
            break;
        }
        bool neg = false;
        if (lx.accept('-')) neg = true;
        else if (lx.accept('+')) {
            if (first) throw PolyParseError(lx.i, "polynomial cannot start with '+'");
        } else if (!first) {
            throw PolyParseError(lx.i, "expected '+' or '-' between terms");
        }
        // one term: factors joined by '*'
        uint64_t coeff = 1;
        std::vector<int32_t> exps(ctx.nvars(), 0);
        bool any_factor = false;
        while (true) {
            if (auto n = lx.number()) {
                coeff = (coeff * (*n % ctx.field.modulus())) % ctx.field.modulus();
                any_factor = true;
            } else if (auto id = lx.ident()) {
                int vi = ctx.var_index(*id);
                if (vi < 0) throw PolyParseError(lx.i, "unknown variable '" + *id + "'");
                int64_t e = 1;
                if (lx.accept('^')) {
                    auto n = lx.number();
                    if (!n) throw PolyParseError(lx.i, "expected exponent after '^'");
                    e = static_cast<int64_t>(*n);
                    if (e > 100000) throw PolyParseError(lx.i, "exponent too large");
                }
                exps[static_cast<size_t>(vi)] += static_cast<int32_t>(e);
                any_factor = true;
            } else {
                throw PolyParseError(lx.i, "expected a coefficient or variable");
            }
            if (!lx.accept('*')) break;
        }
        if (!any_factor) throw PolyParseError(lx.i, "empty term");
        uint32_t c = static_cast<uint32_t>(coeff);
        if (neg) c = ctx.field.neg(c);
        terms.push_back({mono_make(std::move(exps), ctx.weights), c});
        first = false;
        char nxt = lx.peek();
        if (nxt == '\0') break;
        if (nxt != '+' && nxt != '-') throw PolyParseError(lx.i, "unexpected character in polynomial");
    }
    return poly_normalize(ctx, std::move(terms));
}

}  // namespace lk
