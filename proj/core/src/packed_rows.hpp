#pragma once

// Internal kernels shared by the GF(p) elimination and the codeword
// enumeration loops. Not installed.

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace zdcode::detail {

// Rows of a GF(2) matrix packed 64 columns per word.
struct PackedRows {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t wpr = 0; // words per row
    std::vector<std::uint64_t> w;

    PackedRows() = default;
    PackedRows(std::size_t r, std::size_t c)
        : rows(r), cols(c), wpr((c + 63) / 64), w(r * wpr, 0) {}

    std::uint64_t* row(std::size_t i) { return w.data() + i * wpr; }
    const std::uint64_t* row(std::size_t i) const { return w.data() + i * wpr; }

    bool get(std::size_t i, std::size_t j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        std::uint64_t mask = std::uint64_t{1} << (j & 63);
        if (v) row(i)[j >> 6] |= mask; else row(i)[j >> 6] &= ~mask;
    }
};

inline void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t t = 0; t < words; ++t) dst[t] ^= src[t];
}

inline std::size_t popcount_row(const std::uint64_t* r, std::size_t words) {
    std::size_t c = 0;
    for (std::size_t t = 0; t < words; ++t) c += std::popcount(r[t]);
    return c;
}

// Inverse table for GF(p), p prime. inv[0] unused.
inline std::vector<std::uint8_t> inverse_table(std::uint16_t p) {
    std::vector<std::uint8_t> inv(p, 0);
    if (p > 1) inv[1] = 1;
    for (std::uint32_t a = 2; a < p; ++a)
        inv[a] = static_cast<std::uint8_t>(
            (p - std::uint32_t(p / a) * inv[p % a] % p) % p);
    return inv;
}

// dst += coef * src over GF(p), counting nonzeros of dst afterwards.
inline std::size_t add_scaled_count(std::uint8_t* dst, const std::uint8_t* src,
                                    std::size_t len, std::uint32_t coef,
                                    std::uint32_t p) {
    std::size_t nz = 0;
    if (coef == 1) {
        // hot path in the enumeration loops; conditional subtract beats %
        for (std::size_t j = 0; j < len; ++j) {
            std::uint32_t v = dst[j] + std::uint32_t{src[j]};
            if (v >= p) v -= p;
            dst[j] = static_cast<std::uint8_t>(v);
            nz += v != 0;
        }
        return nz;
    }
    for (std::size_t j = 0; j < len; ++j) {
        std::uint32_t v = (dst[j] + coef * src[j]) % p;
        dst[j] = static_cast<std::uint8_t>(v);
        nz += v != 0;
    }
    return nz;
}

inline void add_scaled(std::uint8_t* dst, const std::uint8_t* src,
                       std::size_t len, std::uint32_t coef, std::uint32_t p) {
    for (std::size_t j = 0; j < len; ++j)
        dst[j] = static_cast<std::uint8_t>((dst[j] + coef * src[j]) % p);
}

} // namespace zdcode::detail
