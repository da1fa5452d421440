// AVX2 variants of the mod-p vector kernels. Compiled with -mavx2 and only
// ever called after a runtime cpuid check; p must be < 2^15 (see dispatch).
//
// Reduction is Barrett with k = 30: for v < 2^30 and M = floor(2^30 / p),
// q = (v * M) >> 30 is floor(v/p) or floor(v/p) - 1, so one conditional
// subtract finishes the job. The 32x32->64 products go through the usual
// even/odd lane split around _mm256_mul_epu32.

#include "lk/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace lk::kern {

namespace {

inline __m256i barrett_mod(__m256i v, __m256i vm, __m256i vp) {
    __m256i vo = _mm256_srli_epi64(v, 32);
    __m256i pe = _mm256_mul_epu32(v, vm);
    __m256i po = _mm256_mul_epu32(vo, vm);
    __m256i qe = _mm256_srli_epi64(pe, 30);
    __m256i qo = _mm256_srli_epi64(po, 30);
    __m256i q = _mm256_or_si256(qe, _mm256_slli_epi64(qo, 32));
    __m256i r = _mm256_sub_epi32(v, _mm256_mullo_epi32(q, vp));
    return _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
}

}  // namespace

void axpy_avx2(uint32_t* y, const uint32_t* x, uint32_t a, size_t n, uint32_t p) {
    if (a == 0) return;
    const uint32_t m = static_cast<uint32_t>((1ull << 30) / p);
    const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i v = _mm256_add_epi32(vy, _mm256_mullo_epi32(vx, va));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), barrett_mod(v, vm, vp));
    }
    if (i < n) axpy_scalar(y + i, x + i, a, n - i, p);
}

void scale_avx2(uint32_t* v, uint32_t a, size_t n, uint32_t p) {
    const uint32_t m = static_cast<uint32_t>((1ull << 30) / p);
    const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
        w = _mm256_mullo_epi32(w, va);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + i), barrett_mod(w, vm, vp));
    }
    if (i < n) scale_scalar(v + i, a, n - i, p);
}

}  // namespace lk::kern

#endif
