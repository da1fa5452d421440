#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lk {

// Exponent vector with cached weighted degree.
struct Monomial {
    std::vector<int32_t> e;
    int32_t deg = 0;

    bool is_one() const { return deg == 0 && std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; }); }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

inline Monomial mono_one(size_t nvars) {
    Monomial m;
    m.e.assign(nvars, 0);
    m.deg = 0;
    return m;
}

inline Monomial mono_make(std::vector<int32_t> exps, const std::vector<int32_t>& weights) {
    Monomial m;
    m.deg = 0;
    for (size_t i = 0; i < exps.size(); ++i) m.deg += exps[i] * weights[i];
    m.e = std::move(exps);
    return m;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.e.resize(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) m.e[i] = a.e[i] + b.e[i];
    m.deg = a.deg + b.deg;
    return m;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {  // a | b
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& b, const Monomial& a) {  // b / a, assumes a | b
    Monomial m;
    m.e.resize(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) m.e[i] = b.e[i] - a.e[i];
    m.deg = b.deg - a.deg;
    return m;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b, const std::vector<int32_t>& weights) {
    std::vector<int32_t> e(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) e[i] = std::max(a.e[i], b.e[i]);
    return mono_make(std::move(e), weights);
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

// Admissible monomial orders. Block is the elimination order: monomials are
// compared first by their total exponent in the block variables (unweighted,
// so a degree-0 auxiliary variable still gets eliminated), then within the
// block, then by grevlex on the remaining variables.
struct MonomialOrder {
    enum class Kind { Grevlex, Lex, Block };
    Kind kind = Kind::Grevlex;
    std::vector<char> block;  // Block only: block[i] != 0 marks an eliminated variable

    static MonomialOrder grevlex() { return {Kind::Grevlex, {}}; }
    static MonomialOrder lex() { return {Kind::Lex, {}}; }
    static MonomialOrder elimination(std::vector<char> mask) { return {Kind::Block, std::move(mask)}; }

    bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
    const char* name() const {
        switch (kind) {
            case Kind::Grevlex: return "grevlex";
            case Kind::Lex: return "lex";
            default: return "elimination-block";
        }
    }
};

namespace detail {

inline int cmp_grevlex_raw(const int32_t* a, const int32_t* b, size_t n, int32_t dega, int32_t degb) {
    if (dega != degb) return dega < degb ? -1 : 1;
    // equal degree: the last differing exponent decides, smaller exponent wins
    for (size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

inline int cmp_lex_raw(const int32_t* a, const int32_t* b, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

}  // namespace detail

// Strict total-order comparison: -1 if a < b, 0 if equal, 1 if a > b.
inline int mono_cmp(const MonomialOrder& ord, const std::vector<int32_t>& weights, const Monomial& a,
                    const Monomial& b) {
    const size_t n = a.e.size();
    if (n != b.e.size()) throw std::invalid_argument("monomial comparison across different variable sets");
    switch (ord.kind) {
        case MonomialOrder::Kind::Grevlex:
            return detail::cmp_grevlex_raw(a.e.data(), b.e.data(), n, a.deg, b.deg);
        case MonomialOrder::Kind::Lex:
            return detail::cmp_lex_raw(a.e.data(), b.e.data(), n);
        case MonomialOrder::Kind::Block: {
            int32_t sa = 0, sb = 0;
            for (size_t i = 0; i < n; ++i)
                if (ord.block[i]) {
                    sa += a.e[i];
                    sb += b.e[i];
                }
            if (sa != sb) return sa < sb ? -1 : 1;
            // within the block: grevlex on block exponents (unweighted)
            {
                std::vector<int32_t> ba, bb;
                for (size_t i = 0; i < n; ++i)
                    if (ord.block[i]) {
                        ba.push_back(a.e[i]);
                        bb.push_back(b.e[i]);
                    }
                int c = detail::cmp_grevlex_raw(ba.data(), bb.data(), ba.size(), sa, sb);
                if (c != 0) return c;
            }
            // remaining variables: weighted grevlex
            std::vector<int32_t> ra, rb;
            int32_t da = 0, db = 0;
            for (size_t i = 0; i < n; ++i)
                if (!ord.block[i]) {
                    ra.push_back(a.e[i]);
                    rb.push_back(b.e[i]);
                    da += a.e[i] * weights[i];
                    db += b.e[i] * weights[i];
                }
            return detail::cmp_grevlex_raw(ra.data(), rb.data(), ra.size(), da, db);
        }
    }
    return 0;
}

}  // namespace lk
