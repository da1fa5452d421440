#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lk/linalg.hpp"

using namespace lk;

namespace {

std::vector<uint32_t> random_vec(std::mt19937_64& rng, size_t n, uint32_t p) {
    std::vector<uint32_t> v(n);
    for (auto& x : v) x = static_cast<uint32_t>(rng() % p);
    return v;
}

}  // namespace

TEST_CASE("axpy and scale: simd variant matches the scalar reference") {
    if (!kern::cpu_has_avx2()) {
        MESSAGE("no AVX2 on this host, dispatch test skipped");
        return;
    }
    std::mt19937_64 rng(42);
    for (uint32_t p : {3u, 5u, 101u, 32003u, 32749u}) {
        for (size_t n : {0ul, 1ul, 7ul, 8ul, 9ul, 64ul, 1001ul}) {
            std::vector<uint32_t> x = random_vec(rng, n, p);
            std::vector<uint32_t> y = random_vec(rng, n, p);
            // boundary values too
            if (n > 2) {
                x[0] = p - 1;
                y[0] = p - 1;
                x[1] = 0;
                y[n - 1] = p - 1;
            }
            for (uint32_t a : {0u, 1u, p - 1, static_cast<uint32_t>(rng() % p)}) {
                std::vector<uint32_t> y1 = y, y2 = y;
                kern::axpy_scalar(y1.data(), x.data(), a, n, p);
                kern::axpy_avx2(y2.data(), x.data(), a, n, p);
                CHECK(y1 == y2);

                std::vector<uint32_t> v1 = x, v2 = x;
                kern::scale_scalar(v1.data(), a, n, p);
                kern::scale_avx2(v2.data(), a, n, p);
                CHECK(v1 == v2);
            }
        }
    }
}

TEST_CASE("backend dispatch honors the forced backend and the prime bound") {
    CHECK(std::string(kern::backend_name(65537)) == "scalar");  // too wide for the lanes
    kern::set_backend(kern::Backend::Scalar);
    CHECK(std::string(kern::backend_name(32003)) == "scalar");
    kern::set_backend(kern::Backend::Auto);
    if (kern::cpu_has_avx2()) CHECK(std::string(kern::backend_name(32003)) == "avx2");
}

TEST_CASE("dispatched kernels agree with the reference under both backends") {
    std::mt19937_64 rng(7);
    const uint32_t p = 32003;
    std::vector<uint32_t> x = random_vec(rng, 333, p), y = random_vec(rng, 333, p);
    std::vector<uint32_t> want = y;
    kern::axpy_scalar(want.data(), x.data(), 12345 % p, x.size(), p);
    for (auto b : {kern::Backend::Scalar, kern::Backend::Auto}) {
        kern::set_backend(b);
        std::vector<uint32_t> got = y;
        kern::axpy(got.data(), x.data(), 12345 % p, x.size(), p);
        CHECK(got == want);
    }
    kern::set_backend(kern::Backend::Auto);
}

TEST_CASE("rref: rank and kernel over F_p") {
    Fp f(32003);
    DenseMat m(3, 4);
    // rows: (1,2,3,4), (2,4,6,8), (0,0,1,1): rank 2
    uint32_t rows[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 0, 1, 1}};
    for (size_t r = 0; r < 3; ++r)
        for (size_t c = 0; c < 4; ++c) m.at(r, c) = rows[r][c];
    CHECK(m.rank(f) == 2);
    auto ker = m.kernel_basis(f);
    CHECK(ker.size() == 2);
    DenseMat chk = m;
    for (const auto& v : ker) {
        for (size_t r = 0; r < 3; ++r) {
            uint64_t acc = 0;
            for (size_t c = 0; c < 4; ++c) acc = (acc + static_cast<uint64_t>(chk.at(r, c)) * v[c]) % 32003;
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("rref is involutive on already-reduced matrices") {
    std::mt19937_64 rng(99);
    Fp f(5);
    DenseMat m(6, 9);
    for (size_t r = 0; r < 6; ++r)
        for (size_t c = 0; c < 9; ++c) m.at(r, c) = static_cast<uint32_t>(rng() % 5);
    DenseMat a = m;
    size_t rk1 = a.rref(f);
    DenseMat b = a;
    size_t rk2 = b.rref(f);
    CHECK(rk1 == rk2);
    for (size_t r = 0; r < 6; ++r)
        for (size_t c = 0; c < 9; ++c) CHECK(a.at(r, c) == b.at(r, c));
}
