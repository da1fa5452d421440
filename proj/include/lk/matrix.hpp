#pragma once

#include "lk/ring.hpp"

namespace lk {

// Homogeneous matrix over a graded ring. Rows are indexed by the target free
// module basis (row_twist = generator degrees), columns by the source basis
// (col_deg). Every nonzero entry (r,c) is homogeneous of degree
// col_deg[c] - row_twist[r]; entries are stored in normal form mod the ring.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingPtr ring, std::vector<int32_t> row_twist, std::vector<int32_t> col_deg);

    const RingPtr& ring() const { return ring_; }
    size_t rows() const { return row_twist_.size(); }
    size_t cols() const { return col_deg_.size(); }
    const std::vector<int32_t>& row_twist() const { return row_twist_; }
    const std::vector<int32_t>& col_deg() const { return col_deg_; }

    const Polynomial& at(size_t r, size_t c) const { return e_[r * cols() + c]; }
    void set(size_t r, size_t c, Polynomial f);  // applies ring normal form

    // throws EngineError when an entry violates the grading
    void validate(const char* what) const;

    ModVec col_vec(size_t c) const;
    void set_col(size_t c, const ModVec& v);

    PolyMatrix transpose_dual() const;  // matrix of Hom(-, R): transpose, negated twists
    bool is_zero() const;

    // deterministic column order: by degree, then entry-wise
    void sort_cols_canonical();

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<int32_t> row_twist_, col_deg_;
    std::vector<Polynomial> e_;
};

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b);

// B repeated `copies` times along the diagonal; copy c gets an extra twist
// shift[c] on both its rows and columns. Used for coefficient modules N^beta.
PolyMatrix diag_blocks(const PolyMatrix& b, const std::vector<int32_t>& shift);

// d (x) Id_m : rows (r,u) -> r*m+u, cols (c,u) -> c*m+u, entry d[r][c] on the
// diagonal blocks. N_twists supplies the m extra twists.
PolyMatrix tensor_map(const PolyMatrix& d, const std::vector<int32_t>& n_twists);

// Hom(d, N): the map Hom(F_j, N) -> Hom(F_{j+1}, N) of precomposition with
// d: F_{j+1} -> F_j. Rows (c,u) over columns of d, cols (r,u) over rows of d.
PolyMatrix hom_map(const PolyMatrix& d, const std::vector<int32_t>& n_twists);

// Columns generating {h in R^cols(A) : A h = 0 over R}. Ring relations are
// adjoined to every row before the kernel is computed; the result is reduced
// mod the ring, homogeneous, canonically ordered.
PolyMatrix kernel_gens(const PolyMatrix& a);

// Groebner basis of the column span (ring relations adjoined), for
// membership tests against the submodule the columns generate.
struct SpanGB {
    RingPtr ring;
    size_t rank = 0;
    std::vector<ModVec> gb;
};
SpanGB span_gb(const PolyMatrix& a);
bool in_span(const ModVec& v, const SpanGB& s);

// Solve v = A h (mod ring relations); returns the coefficient vector h.
std::optional<std::vector<Polynomial>> solve_membership(const ModVec& v, const PolyMatrix& a);

}  // namespace lk
