#pragma once

#include "lk/matrix.hpp"

namespace lk {

// Ideal of a graded ring, with the reduced Groebner basis of its lift to the
// ambient polynomial ring (defining relations adjoined) cached eagerly.
// Reduced GBs are unique for a fixed order, so ideal equality is GB equality.
class IdealHandle {
public:
    IdealHandle(RingPtr ring, std::vector<Polynomial> gens, bool require_homogeneous = true);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    // reduced GB of lift(gens) + defining relations, in the ambient P
    const std::vector<Polynomial>& gb() const { return gb_; }
    // GB elements that are nonzero mod the ring: a canonical generating set in R
    std::vector<Polynomial> reduced_gens() const;

    Polynomial nf(const Polynomial& f) const { return poly_nf(ring_->ctx(), f, gb_); }
    bool contains(const Polynomial& f) const { return nf(f).is_zero(); }
    bool contains(const IdealHandle& other) const;
    bool is_unit() const;
    bool is_zero_ideal() const { return reduced_gens().empty(); }
    bool equals(const IdealHandle& other) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::vector<Polynomial> gb_;
};

IdealHandle ideal_zero(const RingPtr& ring);
IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b);

// computed by eliminating an internal degree-0 auxiliary variable from
// t*I + (1-t)*J; the auxiliary never leaks into user-visible rings
IdealHandle ideal_intersection(const IdealHandle& a, const IdealHandle& b);

// (a : b) = intersection over b's generators of (a : f), each single colon via
// (a : f) = (1/f)(a cap (f)). Colon by the zero ideal yields the unit ideal
// and sets *divided_by_zero for the caller's report.
IdealHandle ideal_colon(const IdealHandle& a, const IdealHandle& b, bool* divided_by_zero = nullptr);

// generators of I cap k[vars not in mask], via a block elimination order
IdealHandle ideal_eliminate(const IdealHandle& a, const std::vector<char>& mask);

struct HilbertData {
    std::vector<int64_t> numerator;  // of the Hilbert series over (1-t)^n (weights 1) resp. prod(1-t^w)
    int krull_dim = 0;               // dim R/I; -1 for the unit ideal
    int64_t multiplicity = 0;
    int dim_combinatorial = 0;  // independent staircase recomputation
};

HilbertData hilbert_data(const IdealHandle& a);

int ring_krull_dim(const RingPtr& ring);

}  // namespace lk
