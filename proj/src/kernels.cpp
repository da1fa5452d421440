#include "lk/kernels.hpp"

#include <atomic>

namespace lk::kern {

namespace {
std::atomic<Backend> g_forced{Backend::Auto};

bool use_avx2(uint32_t p) {
#if defined(__x86_64__) || defined(_M_X64)
    if (p >= (1u << 15)) return false;  // products must fit the 32-bit lanes
    Backend f = g_forced.load(std::memory_order_relaxed);
    if (f == Backend::Scalar) return false;
    if (f == Backend::Avx2) return true;
    return cpu_has_avx2();
#else
    (void)p;
    return false;
#endif
}
}  // namespace

void set_backend(Backend b) { g_forced.store(b, std::memory_order_relaxed); }
Backend forced_backend() { return g_forced.load(std::memory_order_relaxed); }

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    static const bool has = __builtin_cpu_supports("avx2");
    return has;
#else
    return false;
#endif
}

const char* backend_name(uint32_t p) { return use_avx2(p) ? "avx2" : "scalar"; }

void axpy(uint32_t* y, const uint32_t* x, uint32_t a, size_t n, uint32_t p) {
#if defined(__x86_64__) || defined(_M_X64)
    if (use_avx2(p)) {
        axpy_avx2(y, x, a, n, p);
        return;
    }
#endif
    axpy_scalar(y, x, a, n, p);
}

void scale(uint32_t* v, uint32_t a, size_t n, uint32_t p) {
#if defined(__x86_64__) || defined(_M_X64)
    if (use_avx2(p)) {
        scale_avx2(v, a, n, p);
        return;
    }
#endif
    scale_scalar(v, a, n, p);
}

}  // namespace lk::kern
