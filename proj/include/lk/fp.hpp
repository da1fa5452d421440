#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lk {

// Arithmetic context for the coefficient field Z/p, p an odd word-size prime.
// All operations are exact; values live in [0, p).
class Fp {
public:
    explicit Fp(uint32_t p) : p_(p) {
        if (p < 3 || (p & 1u) == 0 || !is_prime(p))
            throw std::invalid_argument("coefficient modulus must be an odd prime, got " + std::to_string(p));
    }

    uint32_t modulus() const { return p_; }

    uint32_t reduce(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }

    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    }

    uint32_t pow(uint32_t a, uint64_t e) const {
        uint32_t r = 1, base = a % p_;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("division by zero in prime field");
        // extended Euclid
        int64_t t = 0, nt = 1, r = p_, nr = a % p_;
        while (nr != 0) {
            int64_t q = r / nr;
            int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<uint32_t>(t);
    }

    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    // symmetric representative in (-p/2, p/2], used by the canonical text form
    int64_t symmetric(uint32_t a) const {
        return a <= p_ / 2 ? static_cast<int64_t>(a) : static_cast<int64_t>(a) - p_;
    }

    bool operator==(const Fp& o) const { return p_ == o.p_; }

private:
    static bool is_prime(uint32_t n) {
        if (n < 2) return false;
        for (uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    uint32_t p_;
};

}  // namespace lk
