#include "zdcode/lincode.hpp"

#include "oracle.hpp"
#include "zdcode/errors.hpp"
#include "zdcode/modring.hpp"
#include "zdcode/zdgraph.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace zdcode;

TEST(Hamming, WeightAndDistance) {
    EXPECT_EQ(hamming_weight({}), 0u);
    EXPECT_EQ(hamming_weight({0, 2, 0, 1, 4}), 3u);
    EXPECT_EQ(hamming_distance({1, 0, 2}, {1, 1, 0}), 2u);
    EXPECT_EQ(hamming_distance({}, {}), 0u);
    EXPECT_THROW(hamming_distance({1}, {1, 0}), InvalidArgument);
}

TEST(Dimension, IncidenceOfK42IsFive) {
    // Gamma(Z_15) = K_{4,2}; connected bipartite, so rank |V| - 1 in any field
    Graph g = build_graph(15);
    for (std::uint16_t p : {2, 3, 5, 7, 11})
        EXPECT_EQ(dimension(incidence_matrix(g, p)), 5u) << "p=" << p;
}

TEST(MinDistanceExact, FrozenSmall) {
    EXPECT_EQ(min_distance_exact(incidence_matrix(build_graph(15), 2)), 2u);
    EXPECT_EQ(min_distance_exact(incidence_matrix(build_graph(15), 7)), 2u);
    EXPECT_EQ(min_distance_exact(incidence_matrix(build_graph(30), 2)), 1u);
    // K_4 from n = 25: d = lambda = 3 over GF(2)
    EXPECT_EQ(min_distance_exact(incidence_matrix(build_graph(25), 2)), 3u);
}

TEST(MinDistanceExact, SingleEdge) {
    auto m = incidence_matrix(build_graph(9), 5); // one edge, two identical rows
    EXPECT_EQ(dimension(m), 1u);
    EXPECT_EQ(min_distance_exact(m), 1u);
}

TEST(MinDistanceExact, BudgetAndDegenerate) {
    auto m = incidence_matrix(build_graph(30), 2); // k = 20
    EXPECT_THROW(min_distance_exact(m, 1000), BudgetExceeded);
    EXPECT_THROW(min_distance_exact(GfMatrix(2, 3, 4)), DegenerateInput);
}

TEST(MinDistanceExact, AgreesWithBruteForceOracle) {
    for (std::uint64_t n = 6; n <= 40; ++n) {
        if (is_prime(n)) continue;
        Graph g = build_graph(n);
        if (g.edge_count() == 0) continue;
        for (std::uint16_t p : {2, 3}) {
            GfMatrix m = incidence_matrix(g, p);
            std::uint64_t combos = 1;
            bool small = true;
            for (std::size_t i = 0; i < m.rows() && small; ++i) {
                combos *= p;
                small = combos <= (std::uint64_t{1} << 16);
            }
            if (!small) continue;
            EXPECT_EQ(min_distance_exact(m), zdoracle::min_distance_bruteforce(m))
                << "n=" << n << " p=" << p;
        }
    }
}

TEST(WeightDistribution, FrozenForK42) {
    // codewords of the GF(2) incidence code of K_{4,2}
    auto hist = weight_distribution(incidence_matrix(build_graph(15), 2));
    ASSERT_EQ(hist.size(), 9u);
    EXPECT_EQ(hist[0], 1u);
    EXPECT_EQ(std::accumulate(hist.begin(), hist.end(), std::uint64_t{0}), 32u);
    std::uint64_t min_w = 0;
    for (std::size_t w = 1; w < hist.size() && !min_w; ++w)
        if (hist[w]) min_w = w;
    EXPECT_EQ(min_w, 2u);
}

TEST(WeightDistribution, MatchesFieldSize) {
    for (std::uint16_t p : {2, 3, 5}) {
        auto m = incidence_matrix(build_graph(15), p);
        auto hist = weight_distribution(m);
        std::uint64_t total = std::accumulate(hist.begin(), hist.end(),
                                              std::uint64_t{0});
        std::uint64_t expect = 1;
        for (int i = 0; i < 5; ++i) expect *= p;
        EXPECT_EQ(total, expect) << "p=" << p;
        EXPECT_EQ(hist[0], 1u);
    }
    EXPECT_THROW(weight_distribution(incidence_matrix(build_graph(30), 2), 100),
                 BudgetExceeded);
}

TEST(WeightDistribution, TrivialCode) {
    auto hist = weight_distribution(GfMatrix(3, 2, 4));
    EXPECT_EQ(hist, (std::vector<std::uint64_t>{1, 0, 0, 0, 0}));
}

TEST(MinDistanceBounds, CollapsesOnSmallCodes) {
    // pairs kept within the enumeration budget of the reference value
    const std::vector<std::pair<std::uint64_t, std::uint16_t>> cases{
        {15, 2}, {15, 3}, {25, 2}, {25, 3}, {35, 2}, {35, 3}, {30, 2}};
    for (auto [n, p] : cases) {
        auto m = incidence_matrix(build_graph(n), p);
        auto b = min_distance_bounds(m);
        ASSERT_TRUE(b.exact()) << "n=" << n << " p=" << p;
        EXPECT_EQ(b.lo, min_distance_exact(m)) << "n=" << n << " p=" << p;
    }
}

TEST(MinDistanceBounds, LevelOneAlwaysRuns) {
    auto m = incidence_matrix(build_graph(30), 2);
    SearchOptions opts;
    opts.max_candidates = 0;
    auto b = min_distance_bounds(m, opts);
    EXPECT_EQ(b.levels_completed, 1u);
    EXPECT_EQ(b.candidates, 20u); // one candidate per basis row
    // a degree-1 vertex contributes a weight-1 row, so this is already exact
    EXPECT_TRUE(b.exact());
    EXPECT_EQ(b.lo, 1u);
}

TEST(MinDistanceBounds, IntervalWhenBudgetTooSmall) {
    // d = 4 here (n = 5 * 7, distance min(phi(5), phi(7)) = 4); forbid the
    // level-3 work that would pin it down
    auto m = incidence_matrix(build_graph(35), 2);
    SearchOptions opts;
    opts.max_candidates = 50; // level 1 (k = 9) fits, level 2 (36) fits, level 3 (84) not
    opts.upper_hint = 4;      // weight of the cut isolating a min-degree vertex
    auto b = min_distance_bounds(m, opts);
    EXPECT_EQ(b.levels_completed, 2u);
    EXPECT_EQ(b.candidates, 9u + 36u);
    EXPECT_FALSE(b.exact());
    EXPECT_EQ(b.lo, 3u);
    EXPECT_EQ(b.hi, 4u);
}

TEST(MinDistanceBounds, UpperHintTightens) {
    auto m = incidence_matrix(build_graph(35), 2);
    SearchOptions opts;
    opts.max_candidates = 0;
    opts.upper_hint = 4;
    auto b = min_distance_bounds(m, opts);
    EXPECT_LE(b.hi, 4u);
    EXPECT_GE(b.lo, 1u);
}

TEST(MinDistanceBounds, MaxLevelRespected) {
    auto m = incidence_matrix(build_graph(385), 2); // d = 4, k = 143
    SearchOptions opts;
    opts.max_level = 2;
    auto b = min_distance_bounds(m, opts);
    EXPECT_EQ(b.levels_completed, 2u);
    EXPECT_FALSE(b.exact());
    EXPECT_EQ(b.lo, 3u);
    EXPECT_GE(b.hi, 4u); // the interval must keep the true value inside
}

TEST(MinDistanceBounds, ExactViaLevelsOnMidSizeCode) {
    // n = 385 = 5*7*11: squarefree, GF(2) distance is 4, k = 143 is far
    // beyond enumeration, but a weight-4 word combines at most 4 basis rows
    auto m = incidence_matrix(build_graph(385), 2);
    auto b = min_distance_bounds(m);
    ASSERT_TRUE(b.exact());
    EXPECT_EQ(b.lo, 4u);
    EXPECT_LE(b.levels_completed, 4u);
}

TEST(MinDistanceBounds, TrivialCodeRejected) {
    EXPECT_THROW(min_distance_bounds(GfMatrix(2, 2, 2)), DegenerateInput);
}
