#include "pandiag/modarith.hpp"

#include <string>

namespace pandiag {

namespace {

void check_modulus(std::int64_t n) {
    if (n < 1 || n > kMaxModulus) {
        throw Error("modulus " + std::to_string(n) + " outside [1, " + std::to_string(kMaxModulus) + "]");
    }
}

}  // namespace

Residue::Residue(std::int64_t value, std::int64_t modulus) : value_(0), modulus_(modulus) {
    check_modulus(modulus);
    value_ = reduce(value, modulus);
}

std::int64_t reduce(std::int64_t a, std::int64_t n) {
    check_modulus(n);
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    if (a == 0 && b == 0) {
        throw Error("undefined gcd");
    }
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool coprime(std::int64_t a, std::int64_t n) {
    return gcd(static_cast<std::uint64_t>(reduce(a, n)), static_cast<std::uint64_t>(n)) == 1;
}

Residue mod_inverse(std::int64_t a, std::int64_t n) {
    if (n < 2) {
        throw Error("mod_inverse requires n >= 2");
    }
    // Extended Euclid on (a mod n, n); tracks only the coefficient of a.
    std::int64_t r0 = n, r1 = reduce(a, n);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) {
        throw Error("not invertible: gcd(" + std::to_string(a) + ", " + std::to_string(n) + ") = " +
                    std::to_string(r0));
    }
    return Residue(t0, n);
}

}  // namespace pandiag
