#pragma once

#include <map>
#include <mutex>

#include "lk/ideal.hpp"

namespace lk {

struct BettiTable {
    std::map<std::pair<int, int>, int64_t> b;  // (homological degree i, internal degree j) -> beta

    int64_t total(int i) const {
        int64_t s = 0;
        for (const auto& [k, v] : b)
            if (k.first == i) s += v;
        return s;
    }
    bool operator==(const BettiTable& o) const { return b == o.b; }
    std::string to_string() const;
};

// Minimal free resolution out to homological degree `bound`:
// chain[j] is the matrix of d_{j+1} : F_{j+1} -> F_j. Every entry has
// positive degree and consecutive matrices compose to zero (validated).
struct Resolution {
    RingPtr ring;
    std::vector<PolyMatrix> chain;
    int bound = 0;
    BettiTable betti;

    // ranks and twists of F_i
    std::vector<int32_t> free_twists(int i) const;
    bool finished() const;  // the chain reached a zero kernel within bound
};

// Finitely presented graded module, given by a presentation matrix
// (rows = generators with their twists, columns = relations).
class FPModule {
public:
    FPModule() = default;
    explicit FPModule(PolyMatrix pres);

    static FPModule ring_module(const RingPtr& ring);                      // R itself
    static FPModule free_module(const RingPtr& ring, std::vector<int32_t> twists);
    static FPModule zero_module(const RingPtr& ring);
    static FPModule quotient_by_ideal(const IdealHandle& i);               // R/I
    static FPModule ideal_as_module(const IdealHandle& i);                 // I as a submodule of R
    static FPModule residue_field(const RingPtr& ring);                    // k = R/m

    const RingPtr& ring() const { return pres_.ring(); }
    const PolyMatrix& pres() const { return pres_; }
    size_t gen_count() const { return pres_.rows(); }
    const std::vector<int32_t>& gen_twists() const { return pres_.row_twist(); }

    // write-once caches, shared across copies
    struct Cache;
    const std::shared_ptr<Cache>& cache() const { return cache_; }

private:
    PolyMatrix pres_;
    std::shared_ptr<Cache> cache_;
};

struct FPModule::Cache {
    std::mutex mu;
    std::shared_ptr<const FPModule> minimal;
    bool is_minimal = false;  // this module is its own minimal presentation
    std::shared_ptr<const Resolution> res;
    std::shared_ptr<const SpanGB> span;
    std::shared_ptr<const IdealHandle> ann;
    std::optional<int> depth;
};

// Strip unit entries from a chain of composable presentation/differential
// matrices by exact Gaussian cancellation; deterministic pivot order.
void minimalize_chain(std::vector<PolyMatrix>& chain);

// minimal presentation: no unit entries, minimally many generators and
// relations; idempotent
FPModule minimal_presentation(const FPModule& m);

Resolution free_resolution(const FPModule& m, int bound);

// Omega^n: the image of d_n in the minimal resolution, presented by d_{n+1}
FPModule syzygy_power(const FPModule& m, int n);

bool is_zero_module(const FPModule& m);
bool is_free_module(const FPModule& m);

FPModule direct_sum(const FPModule& a, const FPModule& b);

// same presentation over a further quotient of the same ambient ring
FPModule base_change(const FPModule& m, const RingPtr& new_ring);

// membership GB of the presentation columns (cached)
const SpanGB& module_span(const FPModule& m);

}  // namespace lk
