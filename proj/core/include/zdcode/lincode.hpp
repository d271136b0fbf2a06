#pragma once

#include "zdcode/gfmat.hpp"

#include <cstdint>
#include <vector>

namespace zdcode {

std::uint64_t hamming_weight(const std::vector<std::uint8_t>& v);
std::uint64_t hamming_distance(const std::vector<std::uint8_t>& a,
                               const std::vector<std::uint8_t>& b);

// Dimension of the code spanned by the rows of gen.
std::size_t dimension(const GfMatrix& gen);

// Exact minimum distance by enumerating all p^k codewords from an RREF
// basis. Throws BudgetExceeded when p^k > max_codewords, DegenerateInput
// when the code is trivial (k = 0).
std::uint64_t min_distance_exact(const GfMatrix& gen,
                                 std::uint64_t max_codewords = std::uint64_t{1} << 24);

struct DistanceBounds {
    std::uint64_t lo = 1;
    std::uint64_t hi = 0;
    unsigned levels_completed = 0;   // support sizes fully enumerated
    std::uint64_t candidates = 0;    // codewords examined
    bool exact() const { return lo == hi; }
};

struct SearchOptions {
    // A weight-w codeword combines at most w RREF generator rows (its
    // coefficients appear on the pivot columns), so enumerating all
    // combinations of exactly j rows, j = 1..max_level, first nonzero
    // coefficient normalized to 1, is complete per level:
    // C(k, j) * (p-1)^(j-1) candidates. After finishing level j every
    // unseen codeword has weight > j.
    std::uint64_t max_candidates = 30'000'000;
    unsigned max_level = 4;
    std::uint64_t upper_hint = 0; // known codeword weight, 0 = none
};

// Lower/upper bounds on the minimum distance; exact when they meet.
// Level 1 (the basis rows) always runs; deeper levels only when they fit
// in the remaining candidate budget, so hi is always finite.
DistanceBounds min_distance_bounds(const GfMatrix& gen,
                                   const SearchOptions& opts = {});

// Full weight enumerator, counts[w] = number of codewords of weight w
// (counts[0] == 1). Same budget rule as min_distance_exact.
std::vector<std::uint64_t> weight_distribution(
    const GfMatrix& gen, std::uint64_t max_codewords = std::uint64_t{1} << 24);

} // namespace zdcode
