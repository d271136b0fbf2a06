#pragma once

#include "zdcode/lincode.hpp"
#include "zdcode/zdgraph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zdcode {

enum class CheckStatus {
    Match,
    Mismatch,
    NotApplicable,
    Unverified, // comparison hit an enumeration budget, not decided
};

std::string to_string(CheckStatus s);

// Closed-form expectations for the incidence code of Gamma(Z_n) over GF(p).
//
// Routes:
//   two_prime  n = p1*p2, p1 < p2 prime. Any field. Gamma is complete
//              bipartite K_{phi(p2), phi(p1)} and the code is
//              [phi(p1)phi(p2), phi(p1)+phi(p2)-1, min(phi(p1), phi(p2))].
//   squarefree n = p1...pr, r >= 3 distinct primes, field GF(2) only:
//              [|E|, |V|-1, p1-1].
//   generic    remaining composite n: length |E| by the class formula,
//              dimension from the incidence rank rule (|V| minus the number
//              of components over GF(2), minus the number of bipartite
//              components over odd p). The distance equals the edge
//              connectivity, taken from the computed min cut, over GF(2)
//              or over odd p when the graph is bipartite; an odd field on
//              a non-bipartite graph carries no distance claim (dist_basis
//              "none"), since same-sign bipartition codewords of weight
//              |E| - cut can undercut lambda (Gamma(Z_25) = K_4 over GF(3)
//              has d = 2 < lambda = 3).
struct Prediction {
    std::uint64_t n = 0;
    std::uint16_t p = 2;
    std::string route;
    std::uint64_t length = 0;
    std::uint64_t dim = 0;
    std::uint64_t dist = 0;        // 0 when dist_basis is "none"
    std::string dist_basis;        // "closed_form", "mincut" or "none"
    std::uint64_t lambda_formula = 0;
};

Prediction predict(std::uint64_t n, std::uint16_t p);

struct ComponentCheck {
    std::string component; // "length", "dimension", "distance", "lambda"
    CheckStatus status = CheckStatus::NotApplicable;
    std::string predicted;
    std::string computed;
    std::string note;
};

struct VerifyOptions {
    std::uint64_t exact_budget = std::uint64_t{1} << 24;
    SearchOptions search;
};

struct VerifyReport {
    std::uint64_t n = 0;
    std::uint16_t p = 2;
    std::string route;

    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;
    bool connected = false;
    bool bipartite = false;
    std::uint64_t min_deg = 0;
    std::uint64_t lambda_formula = 0;
    std::uint64_t lambda_mincut = 0;

    std::uint64_t length = 0;
    std::uint64_t dim = 0;
    DistanceBounds dist;
    std::string dist_method; // "enumeration" or "bounded_search"

    std::vector<ComponentCheck> checks;
    std::vector<std::string> notes;

    bool has_mismatch() const;
    bool has_unverified() const;
};

// Builds the graph and code, computes everything the budget allows, and
// compares against predict(n, p). Throws DegenerateInput when there is no
// code to check (prime n, n < 4, or an edgeless graph).
VerifyReport verify(std::uint64_t n, std::uint16_t p,
                    const VerifyOptions& opts = {});

struct SweepResult {
    std::vector<VerifyReport> reports; // non-degenerate instances, in order
    std::uint64_t instances = 0;       // (n, p) pairs attempted
    std::uint64_t degenerate = 0;
    std::uint64_t matched = 0;    // all components Match / NotApplicable
    std::uint64_t unverified = 0; // no mismatch, budget left something open
    std::uint64_t mismatched = 0; // at least one Mismatch
};

SweepResult sweep(std::uint64_t nmin, std::uint64_t nmax,
                  const std::vector<std::uint16_t>& primes,
                  const VerifyOptions& opts = {});

} // namespace zdcode
