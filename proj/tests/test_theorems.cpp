#include "zdcode/theorems.hpp"

#include "zdcode/errors.hpp"
#include "zdcode/modring.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace zdcode;

namespace {

const ComponentCheck& get_check(const VerifyReport& r, const std::string& name) {
    auto it = std::find_if(r.checks.begin(), r.checks.end(),
                           [&](const ComponentCheck& c) { return c.component == name; });
    if (it == r.checks.end()) throw std::logic_error("missing check " + name);
    return *it;
}

} // namespace

TEST(Predict, TwoPrimeRoute) {
    for (std::uint16_t p : {2, 3, 5, 7, 11}) {
        Prediction pr = predict(15, p);
        EXPECT_EQ(pr.route, "two_prime");
        EXPECT_EQ(pr.length, 8u);
        EXPECT_EQ(pr.dim, 5u);
        EXPECT_EQ(pr.dist, 2u);
        EXPECT_EQ(pr.dist_basis, "closed_form");
        EXPECT_EQ(pr.lambda_formula, 2u);
    }
    Prediction pr = predict(2 * 199, 2);
    EXPECT_EQ(pr.length, 198u);
    EXPECT_EQ(pr.dim, 198u); // phi(2) + phi(199) - 1
    EXPECT_EQ(pr.dist, 1u);
}

TEST(Predict, SquarefreeRoute) {
    Prediction pr = predict(30, 2);
    EXPECT_EQ(pr.route, "squarefree");
    EXPECT_EQ(pr.length, 38u);
    EXPECT_EQ(pr.dim, 20u);
    EXPECT_EQ(pr.dist, 1u);
    EXPECT_EQ(pr.dist_basis, "closed_form");

    Prediction pr105 = predict(105, 2);
    EXPECT_EQ(pr105.route, "squarefree");
    EXPECT_EQ(pr105.length, 188u);
    EXPECT_EQ(pr105.dim, (105 - 1 - euler_phi(105)) - 1);
    EXPECT_EQ(pr105.dist, 2u);
}

TEST(Predict, GenericRoute) {
    // squarefree with three primes but odd field: rank rule takes over,
    // and the non-bipartite graph leaves the distance unclaimed
    Prediction pr = predict(30, 3);
    EXPECT_EQ(pr.route, "generic");
    EXPECT_EQ(pr.length, 38u);
    EXPECT_EQ(pr.dim, 21u); // non-bipartite, so full vertex count
    EXPECT_EQ(pr.dist_basis, "none");
    EXPECT_EQ(pr.dist, 0u);

    Prediction pr16 = predict(16, 2);
    EXPECT_EQ(pr16.route, "generic");
    EXPECT_EQ(pr16.dim, 6u); // 7 vertices, connected
    EXPECT_EQ(pr16.dist, 1u);
    EXPECT_EQ(pr16.dist_basis, "mincut");
    EXPECT_EQ(pr16.lambda_formula, 1u);

    // n = p^2: prediction carries the mincut value, the formula disagrees
    Prediction pr25 = predict(25, 2);
    EXPECT_EQ(pr25.dist, 3u);
    EXPECT_EQ(pr25.lambda_formula, 4u);

    // bipartite keeps the claim over odd fields: Gamma(Z_9) = K_2
    Prediction pr9 = predict(9, 3);
    EXPECT_EQ(pr9.dist_basis, "mincut");
    EXPECT_EQ(pr9.dist, 1u);
}

TEST(Predict, DegenerateInputs) {
    EXPECT_THROW(predict(7, 2), DegenerateInput);
    EXPECT_THROW(predict(1, 2), InvalidArgument);
}

TEST(Verify, N15AllFieldsMatch) {
    for (std::uint16_t p : {2, 3, 5, 7, 11}) {
        VerifyReport r = verify(15, p);
        EXPECT_EQ(r.route, "two_prime");
        EXPECT_FALSE(r.has_mismatch()) << "p=" << p;
        EXPECT_FALSE(r.has_unverified()) << "p=" << p;
        EXPECT_EQ(r.length, 8u);
        EXPECT_EQ(r.dim, 5u);
        ASSERT_TRUE(r.dist.exact());
        EXPECT_EQ(r.dist.lo, 2u);
        EXPECT_EQ(r.dist_method, "enumeration");
        EXPECT_EQ(get_check(r, "distance").status, CheckStatus::Match);
        EXPECT_EQ(get_check(r, "lambda").status, CheckStatus::Match);
    }
}

TEST(Verify, N30BinaryMatches) {
    VerifyReport r = verify(30, 2);
    EXPECT_EQ(r.route, "squarefree");
    EXPECT_FALSE(r.has_mismatch());
    EXPECT_EQ(r.length, 38u);
    EXPECT_EQ(r.dim, 20u);
    ASSERT_TRUE(r.dist.exact());
    EXPECT_EQ(r.dist.lo, 1u);
    EXPECT_EQ(r.vertices, 21u);
    EXPECT_EQ(r.edges, 38u);
    EXPECT_FALSE(r.bipartite);
    EXPECT_TRUE(r.connected);
    EXPECT_EQ(r.lambda_mincut, 1u);
}

TEST(Verify, PrimeSquareLambdaMismatch) {
    VerifyReport r = verify(9, 3);
    EXPECT_TRUE(r.has_mismatch());
    EXPECT_EQ(get_check(r, "lambda").status, CheckStatus::Mismatch);
    EXPECT_EQ(get_check(r, "lambda").predicted, "2");
    EXPECT_EQ(get_check(r, "lambda").computed, "1");
    // everything else is consistent
    EXPECT_EQ(get_check(r, "length").status, CheckStatus::Match);
    EXPECT_EQ(get_check(r, "dimension").status, CheckStatus::Match);
    EXPECT_EQ(get_check(r, "distance").status, CheckStatus::Match);

    VerifyReport r25 = verify(25, 2);
    EXPECT_EQ(get_check(r25, "lambda").status, CheckStatus::Mismatch);
    EXPECT_EQ(get_check(r25, "distance").status, CheckStatus::Match);
    ASSERT_TRUE(r25.dist.exact());
    EXPECT_EQ(r25.dist.lo, 3u);
}

// Over odd fields a non-bipartite graph can beat the edge connectivity:
// summing the rows on one shore of a vertex bipartition and negating the
// rest cancels every crossing edge, leaving weight |E| - cut. These two
// instances are why the generic route makes no odd-field distance claim.
TEST(Verify, OddFieldNonBipartiteDistanceUnclaimed) {
    // Gamma(Z_25) = K_4: the 2+2 split gives weight 2 < lambda = 3
    VerifyReport r = verify(25, 3);
    ASSERT_TRUE(r.dist.exact());
    EXPECT_EQ(r.dist.lo, 2u);
    EXPECT_EQ(r.lambda_mincut, 3u);
    EXPECT_EQ(get_check(r, "distance").status, CheckStatus::NotApplicable);
    EXPECT_EQ(get_check(r, "distance").predicted, "none");
    EXPECT_EQ(get_check(r, "distance").computed, "2");
    // the prime-square lambda mismatch is still a real mismatch
    EXPECT_EQ(get_check(r, "lambda").status, CheckStatus::Mismatch);

    // Gamma(Z_27): putting 9 and 18 on the same shore leaves a single
    // internal edge, weight 1 < lambda = 2
    VerifyReport r27 = verify(27, 3);
    ASSERT_TRUE(r27.dist.exact());
    EXPECT_EQ(r27.dist.lo, 1u);
    EXPECT_EQ(r27.lambda_mincut, 2u);
    EXPECT_EQ(get_check(r27, "distance").status, CheckStatus::NotApplicable);
    EXPECT_FALSE(r27.has_mismatch());
    EXPECT_FALSE(r27.has_unverified());
}

TEST(Verify, BoundedSearchPath) {
    // k = 143 forces the bounded search; the squarefree closed form d = 4
    // must come out exact
    VerifyOptions opts;
    VerifyReport r = verify(385, 2, opts);
    EXPECT_EQ(r.route, "squarefree");
    EXPECT_EQ(r.dist_method, "bounded_search");
    EXPECT_FALSE(r.has_mismatch());
    ASSERT_TRUE(r.dist.exact());
    EXPECT_EQ(r.dist.lo, 4u);
    EXPECT_EQ(get_check(r, "distance").status, CheckStatus::Match);
}

TEST(Verify, UnverifiedWhenIntervalStaysOpen) {
    // 7 * 11: d = 6, bounded search with a tiny level cap cannot close it
    VerifyOptions opts;
    opts.exact_budget = 1; // force the bounded path
    opts.search.max_level = 2;
    VerifyReport r = verify(77, 2, opts);
    EXPECT_EQ(r.dist_method, "bounded_search");
    EXPECT_FALSE(r.dist.exact());
    EXPECT_FALSE(r.has_mismatch());
    EXPECT_TRUE(r.has_unverified());
    EXPECT_EQ(get_check(r, "distance").status, CheckStatus::Unverified);
    EXPECT_EQ(r.dist.lo, 3u);
    EXPECT_EQ(r.dist.hi, 6u); // cut codeword from the min cut witness
}

TEST(Verify, DegenerateCases) {
    EXPECT_THROW(verify(4, 2), DegenerateInput);  // single vertex, no edges
    EXPECT_THROW(verify(13, 2), DegenerateInput); // prime
    EXPECT_THROW(verify(15, 6), InvalidArgument); // not a field
}

TEST(Sweep, SmallRangeCounts) {
    SweepResult res = sweep(4, 50, {2});
    EXPECT_EQ(res.instances, 47u);
    // composites 4..50 minus primes {5,...,47} and the edgeless n = 4
    EXPECT_EQ(res.degenerate, 14u);
    EXPECT_EQ(res.reports.size(), 33u);
    EXPECT_EQ(res.mismatched, 3u); // 9, 25, 49: the p^2 family
    EXPECT_EQ(res.unverified, 0u);
    EXPECT_EQ(res.matched, 30u);
    for (const auto& r : res.reports) {
        if (!r.has_mismatch()) continue;
        auto f = factorize(r.n);
        EXPECT_TRUE(f.size() == 1 && f[0].exponent == 2) << "n=" << r.n;
    }
}

TEST(Sweep, MultiplePrimes) {
    SweepResult res = sweep(14, 16, {2, 3});
    EXPECT_EQ(res.instances, 6u);
    EXPECT_EQ(res.degenerate, 0u);
    ASSERT_EQ(res.reports.size(), 6u);
    EXPECT_EQ(res.reports[0].n, 14u);
    EXPECT_EQ(res.reports[0].p, 2u);
    EXPECT_EQ(res.reports[1].p, 3u);
    EXPECT_TRUE(std::all_of(res.reports.begin(), res.reports.end(),
                            [](const VerifyReport& r) { return !r.has_mismatch(); }));
}

TEST(StatusStrings, Stable) {
    EXPECT_EQ(to_string(CheckStatus::Match), "match");
    EXPECT_EQ(to_string(CheckStatus::Mismatch), "mismatch");
    EXPECT_EQ(to_string(CheckStatus::NotApplicable), "not_applicable");
    EXPECT_EQ(to_string(CheckStatus::Unverified), "unverified");
}
