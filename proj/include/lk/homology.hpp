#pragma once

#include "lk/fpmodule.hpp"

namespace lk {

// A module given as a subquotient of a free module: `embed` holds generator
// vectors (columns) inside R^b, `mod` the abstract presentation.
struct Subquotient {
    PolyMatrix embed;
    FPModule mod;
};

// H = ker(R^b/relB -> R^c/relC) / im(min), where `mout` is the outgoing map
// (c x b) and `min` the incoming one (b x a); relB/relC are the coefficient
// relations at the middle/target spots (their columns are quotiented away).
Subquotient subquotient_homology(const PolyMatrix& mout, const PolyMatrix& relC, const PolyMatrix& min,
                                 const PolyMatrix& relB, const std::vector<int32_t>& mid_twists,
                                 const RingPtr& ring);

// Hom_R(M, N); embed lives in Hom(F0_M, N-cover) = R^(r0*m), position-major
Subquotient hom_module(const FPModule& m, const FPModule& n);

FPModule ext_module(int i, const FPModule& m, const FPModule& n);
FPModule tor_module(int i, const FPModule& m, const FPModule& n, bool symmetry_cross_check = false);

// direct presentation of M (x) N
FPModule tensor_product(const FPModule& m, const FPModule& n);

// Ann_R(M), intersected row by row per the module colon
IdealHandle annihilator(const FPModule& m);

struct StabilityReport {
    IdealHandle trace;
    bool stable = true;
    int free_rank = 0;  // a in M = R^a (+) N
    FPModule stable_part;
};
StabilityReport trace_and_stability(const FPModule& m);

// explicit sentinel states, never magic numbers
struct HomDim {
    enum class Kind { Finite, Infinite, NegInfinite } kind = Kind::Finite;
    int value = 0;  // valid for Finite

    static HomDim finite(int v) { return {Kind::Finite, v}; }
    static HomDim infinite() { return {Kind::Infinite, 0}; }
    static HomDim neg_infinite() { return {Kind::NegInfinite, 0}; }
    bool is_finite() const { return kind == Kind::Finite; }
    bool operator==(const HomDim& o) const { return kind == o.kind && (kind != Kind::Finite || value == o.value); }
    std::string to_string() const {
        if (kind == Kind::Infinite) return "inf";
        if (kind == Kind::NegInfinite) return "-inf";
        return std::to_string(value);
    }
};

// grade = least i with Ext^i(R/I, R) != 0; +inf for the unit ideal
HomDim grade_of_ideal(const IdealHandle& i);
HomDim grade_of_module(const FPModule& m);  // least i with Ext^i(M, R) != 0

// graded depth w.r.t. the irrelevant maximal ideal; +inf for the zero module
HomDim depth_of(const FPModule& m);
int ring_depth(const RingPtr& ring);
int ring_dim(const RingPtr& ring);

// pd via the Omega^(depth R) freeness criterion; Auslander-Buchsbaum asserted
HomDim pd_of(const FPModule& m);

struct GdimReport {
    bool totally_reflexive = false;
    HomDim gdim;
};
GdimReport gdim_suite(const FPModule& m);
bool totally_reflexive_check(const FPModule& m);

struct Numerics {
    int lo = 0;
    std::vector<int64_t> hf;  // dimensions of graded pieces lo, lo+1, ...
    bool finite_certified = false;
    int64_t length = 0;  // valid when finite_certified
};
// graded piece dimensions by F_p linear algebra on standard monomials
Numerics module_numerics(const FPModule& m, int lo, int hi);
// finiteness certified through dim(R/Ann M) = 0, then the exact length
std::optional<int64_t> certified_length(const FPModule& m);

bool is_cyclic(const FPModule& m);

// omega_R = Ext^codim_P(R, P); requires R Cohen-Macaulay
FPModule canonical_module(const RingPtr& ring);
bool ring_is_gorenstein(const RingPtr& ring);

// is M free after passing to R/I? requires I <= Ann(M)
bool free_over(const FPModule& m, const IdealHandle& i);

// numeric certificate used in place of an isomorphism test: Betti tables
// through homological degree `betti_bound`, Hilbert functions on a window,
// annihilators and minimal generator counts all agree
bool modules_numerically_agree(const FPModule& a, const FPModule& b, int betti_bound = 3);

// twist-insensitive variant: Hilbert functions compared after aligning the
// first nonzero degree
bool modules_numerically_agree_up_to_shift(const FPModule& a, const FPModule& b, int betti_bound = 3);

std::vector<Monomial> std_monomials(const RingPtr& ring, int degree);

}  // namespace lk
