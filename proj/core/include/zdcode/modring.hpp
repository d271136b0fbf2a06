#pragma once

#include <cstdint>
#include <vector>

namespace zdcode {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization of n, primes ascending. n >= 2.
std::vector<PrimePower> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t smallest_prime_factor(std::uint64_t n);
bool is_prime(std::uint64_t n);
bool is_squarefree(std::uint64_t n);

// Nonzero zero divisors of Z_n, ascending. Empty iff n is prime or n < 4.
std::vector<std::uint64_t> zero_divisors(std::uint64_t n);

struct DivisorClass {
    std::uint64_t d;                    // proper divisor of n, 1 < d < n
    std::vector<std::uint64_t> members; // { x in Z_n : gcd(x, n) = d }, ascending
};

// Partition of the zero divisors into classes A_d, ordered by d ascending.
// Every proper divisor d of n appears; A_d is never empty (|A_d| = phi(n/d)).
std::vector<DivisorClass> divisor_classes(std::uint64_t n);

// |A_d| = phi(n/d). Throws InvalidArgument unless d is a proper divisor of n.
std::uint64_t class_size_formula(std::uint64_t n, std::uint64_t d);

} // namespace zdcode
