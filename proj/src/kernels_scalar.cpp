#include "lk/kernels.hpp"

namespace lk::kern {

void axpy_scalar(uint32_t* y, const uint32_t* x, uint32_t a, size_t n, uint32_t p) {
    if (a == 0) return;
    for (size_t i = 0; i < n; ++i) {
        uint64_t v = y[i] + static_cast<uint64_t>(a) * x[i];
        y[i] = static_cast<uint32_t>(v % p);
    }
}

void scale_scalar(uint32_t* v, uint32_t a, size_t n, uint32_t p) {
    for (size_t i = 0; i < n; ++i)
        v[i] = static_cast<uint32_t>((static_cast<uint64_t>(a) * v[i]) % p);
}

}  // namespace lk::kern
