#pragma once

#include <cstdint>

#include "pandiag/error.hpp"

namespace pandiag {

// Largest modulus accepted anywhere. With d <= 4 every intermediate value stays
// far below 2^63.
inline constexpr std::int64_t kMaxModulus = 1000;

// A canonical representative in [0, modulus).
class Residue {
public:
    Residue(std::int64_t value, std::int64_t modulus);

    std::int64_t value() const noexcept { return value_; }
    std::int64_t modulus() const noexcept { return modulus_; }

    friend bool operator==(const Residue&, const Residue&) = default;

private:
    std::int64_t value_;
    std::int64_t modulus_;
};

// Reduces any integer, negative included, into [0, n). Requires 1 <= n <= kMaxModulus.
std::int64_t reduce(std::int64_t a, std::int64_t n);

// Greatest common divisor; gcd(a, 0) = a. Throws Error("undefined gcd") for (0, 0).
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

bool coprime(std::int64_t a, std::int64_t n);

// r with (a * r) mod n == 1. Throws Error("not invertible") when gcd(a mod n, n) != 1.
Residue mod_inverse(std::int64_t a, std::int64_t n);

}  // namespace pandiag
