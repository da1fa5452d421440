#pragma once

// Dense linear-algebra oracle for Ext/Tor over A = k[x]/(x^m), independent of
// the Groebner/homology path. Cyclic modules M_a = A/(x^a), 1 <= a <= m
// (a = m is A itself), have the periodic minimal resolution
//   ... -> A -x^{m-a}-> A -x^a-> A -> M_a -> 0,
// so every Ext/Tor dimension is a kernel/rank computation with explicit
// multiplication matrices over F_p.

#include "lk/linalg.hpp"

namespace lk::testing {

struct PeriodicOracle {
    uint32_t p;
    int m;

    // multiplication by x^c on M_b = span(1, x, .., x^{b-1})
    DenseMat mult(int c, int b) const {
        DenseMat d(static_cast<size_t>(b), static_cast<size_t>(b));
        for (int j = 0; j + c < b; ++j) d.at(static_cast<size_t>(j + c), static_cast<size_t>(j)) = 1;
        return d;
    }

    int exp_at(int j, int a) const { return j % 2 == 1 ? a : m - a; }  // d_j multiplies by x^{exp}

    int ext_dim(int i, int a, int b) const {
        Fp f(p);
        if (a == m) return i == 0 ? b : 0;  // free module
        // delta^j = mult by x^{exp(j+1)} on M_b
        auto ker_dim = [&](int c) {
            DenseMat d = mult(c, b);
            return b - static_cast<int>(d.rank(f));
        };
        auto rank_of = [&](int c) { return static_cast<int>(mult(c, b).rank(f)); };
        if (i == 0) return ker_dim(exp_at(1, a));
        return ker_dim(exp_at(i + 1, a)) - rank_of(exp_at(i, a));
    }

    int tor_dim(int i, int a, int b) const {
        Fp f(p);
        if (a == m) return i == 0 ? b : 0;
        auto rank_of = [&](int c) { return static_cast<int>(mult(c, b).rank(f)); };
        if (i == 0) return b - rank_of(exp_at(1, a));
        int ker = b - rank_of(exp_at(i, a));
        return ker - rank_of(exp_at(i + 1, a));
    }
};

}  // namespace lk::testing
