#pragma once

#include <cstddef>
#include <cstdint>

// Dense mod-p vector kernels used by the F_p linear algebra layer.
//
// Every kernel has a scalar reference implementation and (on x86-64) an AVX2
// variant selected at runtime. The two are equivalence-tested against each
// other; callers never observe which one ran. The vector path requires
// p < 2^15 so that products and Barrett reduction stay inside 32/64-bit lanes;
// larger primes silently take the scalar path.
namespace lk::kern {

enum class Backend { Auto, Scalar, Avx2 };

// Force a backend (tests); Auto restores runtime dispatch.
void set_backend(Backend b);
Backend forced_backend();

// Name of the backend that axpy/scale would use for this modulus.
const char* backend_name(uint32_t p);

// y[i] = (y[i] + a * x[i]) mod p, 0 <= i < n. Inputs reduced mod p.
void axpy(uint32_t* y, const uint32_t* x, uint32_t a, size_t n, uint32_t p);

// v[i] = (a * v[i]) mod p.
void scale(uint32_t* v, uint32_t a, size_t n, uint32_t p);

// reference implementations, exposed for the equivalence tests
void axpy_scalar(uint32_t* y, const uint32_t* x, uint32_t a, size_t n, uint32_t p);
void scale_scalar(uint32_t* v, uint32_t a, size_t n, uint32_t p);

bool cpu_has_avx2();

#if defined(__x86_64__) || defined(_M_X64)
void axpy_avx2(uint32_t* y, const uint32_t* x, uint32_t a, size_t n, uint32_t p);
void scale_avx2(uint32_t* v, uint32_t a, size_t n, uint32_t p);
#endif

}  // namespace lk::kern
