#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace addcyc {

/*
 * Arithmetic in the prime field F_p. Elements are plain integers in [0, p).
 * The modulus is a runtime value; primality is checked at construction.
 */
class PrimeField {
   public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p))
            throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) + " is not prime");
    }

    std::uint32_t p() const noexcept { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint64_t s = std::uint64_t(a) + b;
        if (s >= p_) s -= p_;
        return static_cast<std::uint32_t>(s);
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
        return b <= a ? a - b : static_cast<std::uint32_t>(a + std::uint64_t(p_) - b);
    }

    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept {
        std::uint32_t r = 1 % p_;
        std::uint32_t base = a % p_;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a % p_ == 0) throw std::invalid_argument("PrimeField: inversion of zero");
        return pow(a, p_ - 2);
    }

    bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

    static bool is_prime(std::uint32_t p) noexcept {
        if (p < 2) return false;
        if (p % 2 == 0) return p == 2;
        for (std::uint64_t d = 3; d * d <= p; d += 2)
            if (p % d == 0) return false;
        return true;
    }

   private:
    std::uint32_t p_;
};

}  // namespace addcyc
