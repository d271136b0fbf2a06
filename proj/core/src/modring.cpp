#include "zdcode/modring.hpp"

#include "zdcode/errors.hpp"

#include <numeric>

namespace zdcode {

std::vector<PrimePower> factorize(std::uint64_t n) {
    if (n < 2) throw InvalidArgument("factorize: n must be >= 2");
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("euler_phi: n must be >= 1");
    if (n == 1) return 1;
    std::uint64_t r = n;
    for (const auto& [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
    if (n < 2) throw InvalidArgument("smallest_prime_factor: n must be >= 2");
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
        if (n % p == 0) return p;
    return n;
}

bool is_prime(std::uint64_t n) {
    return n >= 2 && smallest_prime_factor(n) == n;
}

bool is_squarefree(std::uint64_t n) {
    if (n == 0) return false;
    if (n == 1) return true;
    for (const auto& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

std::vector<std::uint64_t> zero_divisors(std::uint64_t n) {
    if (n < 2) throw InvalidArgument("zero_divisors: n must be >= 2");
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 2; x < n; ++x)
        if (std::gcd(x, n) > 1) out.push_back(x);
    return out;
}

std::vector<DivisorClass> divisor_classes(std::uint64_t n) {
    if (n < 2) throw InvalidArgument("divisor_classes: n must be >= 2");
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t d = 2; d < n; ++d)
        if (n % d == 0) divisors.push_back(d);
    std::vector<DivisorClass> out;
    out.reserve(divisors.size());
    for (std::uint64_t d : divisors) out.push_back({d, {}});
    for (std::uint64_t x = 2; x < n; ++x) {
        std::uint64_t g = std::gcd(x, n);
        if (g == 1) continue;
        for (auto& c : out)
            if (c.d == g) { c.members.push_back(x); break; }
    }
    return out;
}

std::uint64_t class_size_formula(std::uint64_t n, std::uint64_t d) {
    if (n < 2 || d <= 1 || d >= n || n % d != 0)
        throw InvalidArgument("class_size_formula: d must be a proper divisor of n");
    return euler_phi(n / d);
}

} // namespace zdcode
