#pragma once

#include <cstdint>
#include <vector>

#include "lk/fp.hpp"
#include "lk/kernels.hpp"

// Dense linear algebra over F_p, on top of the scalar/SIMD kernels.
// Used for graded-piece dimension counts and for the test oracles.
namespace lk {

class DenseMat {
public:
    DenseMat() : rows_(0), cols_(0) {}
    DenseMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    uint32_t* row(size_t r) { return a_.data() + r * cols_; }
    const uint32_t* row(size_t r) const { return a_.data() + r * cols_; }

    void append_row(const std::vector<uint32_t>& v) {
        a_.insert(a_.end(), v.begin(), v.end());
        ++rows_;
    }

    // In-place reduced row echelon form; returns rank. Deterministic:
    // pivots are chosen leftmost-column, topmost-row.
    size_t rref(const Fp& f) {
        const uint32_t p = f.modulus();
        size_t rank = 0;
        for (size_t c = 0; c < cols_ && rank < rows_; ++c) {
            size_t piv = rank;
            while (piv < rows_ && at(piv, c) == 0) ++piv;
            if (piv == rows_) continue;
            if (piv != rank)
                for (size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(rank, j));
            uint32_t inv = f.inv(at(rank, c));
            if (inv != 1) kern::scale(row(rank) + c, inv, cols_ - c, p);
            for (size_t r = 0; r < rows_; ++r) {
                if (r == rank) continue;
                uint32_t v = at(r, c);
                if (v == 0) continue;
                kern::axpy(row(r) + c, row(rank) + c, f.neg(v), cols_ - c, p);
            }
            ++rank;
        }
        return rank;
    }

    size_t rank(const Fp& f) const {
        DenseMat m = *this;
        return m.rref(f);
    }

    // Basis of the right kernel {v : A v = 0}, one column vector per entry.
    std::vector<std::vector<uint32_t>> kernel_basis(const Fp& f) const {
        DenseMat m = *this;
        m.rref(f);
        std::vector<size_t> pivot_of_col(cols_, SIZE_MAX);
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; ++c)
            if (m.at(r, c) != 0) pivot_of_col[c] = r++;
        std::vector<std::vector<uint32_t>> basis;
        for (size_t c = 0; c < cols_; ++c) {
            if (pivot_of_col[c] != SIZE_MAX) continue;
            std::vector<uint32_t> v(cols_, 0);
            v[c] = 1;
            for (size_t cc = 0; cc < c; ++cc)
                if (pivot_of_col[cc] != SIZE_MAX) v[cc] = f.neg(m.at(pivot_of_col[cc], c));
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

}  // namespace lk
