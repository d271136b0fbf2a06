#include "zdcode/lincode.hpp"

#include "packed_rows.hpp"
#include "zdcode/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace zdcode {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSat / b) return kSat;
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp--) r = sat_mul(r, base);
    return r;
}

std::uint64_t binomial_sat(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (r > kSat / (n - k + i)) return kSat;
        r = r * (n - k + i) / i;
    }
    return r;
}

struct Basis {
    GfMatrix mat;          // k x n RREF rows
    std::size_t k;
    std::size_t n;
};

Basis reduce(const GfMatrix& gen) {
    RrefResult rr = rref(gen);
    std::size_t k = rr.rank();
    GfMatrix b(gen.field(), k, gen.cols());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < gen.cols(); ++j)
            b.at(i, j) = rr.mat.at(i, j);
    return {std::move(b), k, gen.cols()};
}

detail::PackedRows pack_basis(const Basis& b) {
    detail::PackedRows pk(b.k, b.n);
    for (std::size_t i = 0; i < b.k; ++i)
        for (std::size_t j = 0; j < b.n; ++j)
            if (b.mat.at(i, j)) pk.set(i, j, true);
    return pk;
}

// Visits the weight of every codeword with nonzero coefficient vector,
// Gray-code order, one row xor per step.
template <typename Visit>
void enumerate_gf2(const Basis& b, Visit&& visit) {
    detail::PackedRows pk = pack_basis(b);
    std::vector<std::uint64_t> cur(pk.wpr, 0);
    const std::uint64_t total = std::uint64_t{1} << b.k;
    for (std::uint64_t t = 1; t < total; ++t) {
        unsigned idx = static_cast<unsigned>(std::countr_zero(t));
        detail::xor_into(cur.data(), pk.row(idx), pk.wpr);
        visit(detail::popcount_row(cur.data(), pk.wpr));
    }
}

// Odd p: depth-first over coefficient vectors, one scaled row add per move.
template <typename Visit>
struct OddEnum {
    const Basis& b;
    std::uint32_t p;
    Visit visit;
    std::vector<std::uint8_t> cur;
    std::size_t wt = 0;

    OddEnum(const Basis& basis, Visit v)
        : b(basis), p(basis.mat.field()), visit(std::move(v)), cur(basis.n, 0) {}

    void run() { rec(0); }

    void rec(std::size_t j) {
        if (j == b.k) {
            visit(wt);
            return;
        }
        rec(j + 1);
        for (std::uint32_t c = 1; c < p; ++c) {
            wt = detail::add_scaled_count(cur.data(), b.mat.row(j), b.n, 1, p);
            rec(j + 1);
        }
        wt = detail::add_scaled_count(cur.data(), b.mat.row(j), b.n, 1, p);
    }
};

std::uint64_t codeword_total(std::uint32_t p, std::size_t k) {
    return sat_pow(p, k);
}

} // namespace

std::uint64_t hamming_weight(const std::vector<std::uint8_t>& v) {
    std::uint64_t w = 0;
    for (std::uint8_t x : v) w += x != 0;
    return w;
}

std::uint64_t hamming_distance(const std::vector<std::uint8_t>& a,
                               const std::vector<std::uint8_t>& b) {
    if (a.size() != b.size())
        throw InvalidArgument("hamming_distance: length mismatch");
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < a.size(); ++i) w += a[i] != b[i];
    return w;
}

std::size_t dimension(const GfMatrix& gen) { return rank(gen); }

std::uint64_t min_distance_exact(const GfMatrix& gen, std::uint64_t max_codewords) {
    Basis b = reduce(gen);
    if (b.k == 0)
        throw DegenerateInput("min_distance_exact: trivial code");
    std::uint64_t total = codeword_total(gen.field(), b.k);
    if (total > max_codewords)
        throw BudgetExceeded("min_distance_exact: p^k = " +
                             (total == kSat ? std::string("overflow")
                                            : std::to_string(total)) +
                             " exceeds budget " + std::to_string(max_codewords));
    std::uint64_t best = kSat;
    if (gen.field() == 2) {
        enumerate_gf2(b, [&](std::size_t w) { best = std::min<std::uint64_t>(best, w); });
    } else {
        auto visit = [&](std::size_t w) {
            if (w) best = std::min<std::uint64_t>(best, w);
        };
        OddEnum<decltype(visit)> e(b, visit);
        e.run();
    }
    return best;
}

std::vector<std::uint64_t> weight_distribution(const GfMatrix& gen,
                                               std::uint64_t max_codewords) {
    Basis b = reduce(gen);
    std::uint64_t total = codeword_total(gen.field(), b.k);
    if (total > max_codewords)
        throw BudgetExceeded("weight_distribution: p^k exceeds budget");
    std::vector<std::uint64_t> hist(gen.cols() + 1, 0);
    if (b.k == 0) {
        hist[0] = 1;
        return hist;
    }
    if (gen.field() == 2) {
        hist[0] = 1;
        enumerate_gf2(b, [&](std::size_t w) { ++hist[w]; });
    } else {
        auto visit = [&](std::size_t w) { ++hist[w]; };
        OddEnum<decltype(visit)> e(b, visit);
        e.run();
    }
    return hist;
}

namespace {

// Level j of the information-set search over GF(2): all xors of exactly
// j distinct basis rows.
void level_gf2(const detail::PackedRows& pk, unsigned j, std::uint64_t& hi,
               std::uint64_t& candidates) {
    std::vector<std::uint64_t> cur(pk.wpr, 0);
    // iterative combination walk would obscure the incremental xor; recurse
    auto rec = [&](auto&& self, std::size_t start, unsigned left) -> void {
        for (std::size_t r = start; r + left <= pk.rows; ++r) {
            detail::xor_into(cur.data(), pk.row(r), pk.wpr);
            if (left == 1) {
                ++candidates;
                std::uint64_t w = detail::popcount_row(cur.data(), pk.wpr);
                if (w < hi) hi = w;
            } else {
                self(self, r + 1, left - 1);
            }
            detail::xor_into(cur.data(), pk.row(r), pk.wpr);
        }
    };
    rec(rec, 0, j);
}

void level_oddp(const Basis& b, unsigned j, std::uint64_t& hi,
                std::uint64_t& candidates) {
    const std::uint32_t p = b.mat.field();
    std::vector<std::uint8_t> cur(b.n, 0);
    std::size_t wt = 0;
    // First chosen row keeps coefficient 1 (codewords come in scalar orbits).
    auto rec = [&](auto&& self, std::size_t start, unsigned left,
                   bool first) -> void {
        for (std::size_t r = start; r + left <= b.k; ++r) {
            std::uint32_t reps = first ? 1 : p - 1;
            for (std::uint32_t c = 0; c < reps; ++c) {
                wt = detail::add_scaled_count(cur.data(), b.mat.row(r), b.n, 1, p);
                if (left == 1) {
                    ++candidates;
                    if (wt < hi) hi = wt;
                } else {
                    self(self, r + 1, left - 1, false);
                }
            }
            for (std::uint32_t c = reps; c < p; ++c)
                wt = detail::add_scaled_count(cur.data(), b.mat.row(r), b.n, 1, p);
        }
    };
    rec(rec, 0, j, true);
}

} // namespace

DistanceBounds min_distance_bounds(const GfMatrix& gen, const SearchOptions& opts) {
    Basis b = reduce(gen);
    if (b.k == 0)
        throw DegenerateInput("min_distance_bounds: trivial code");

    const std::uint32_t p = gen.field();
    DistanceBounds out;
    out.hi = opts.upper_hint ? opts.upper_hint : kSat;
    out.lo = 1;

    detail::PackedRows pk;
    if (p == 2) pk = pack_basis(b);

    for (unsigned j = 1; j <= opts.max_level; ++j) {
        std::uint64_t cost =
            sat_mul(binomial_sat(b.k, j), sat_pow(p - 1, j - 1));
        // level 1 is just the basis rows and always runs, so hi is finite
        if (j > 1 && (out.candidates + cost > opts.max_candidates || cost == kSat))
            break;
        if (p == 2)
            level_gf2(pk, j, out.hi, out.candidates);
        else
            level_oddp(b, j, out.hi, out.candidates);
        out.levels_completed = j;
        // every codeword not seen yet has more than j nonzero pivot
        // coordinates, hence weight at least j + 1
        out.lo = std::min<std::uint64_t>(j + 1, out.hi);
        if (out.hi <= j + 1) break;
    }
    if (out.lo > out.hi) out.lo = out.hi;
    return out;
}

} // namespace zdcode
