#pragma once

#include "zdcode/gfmat.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace zdcode {

// Zero-divisor graph of Z_n: vertices are the nonzero zero divisors,
// x ~ y iff x*y = 0 (mod n). Vertices ascending; edges are index pairs
// (i, j) with i < j in lexicographic order, so the representation is
// canonical for a given n.
struct Graph {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> vertices;
    std::vector<std::uint64_t> vertex_gcd; // gcd(vertices[i], n)
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<std::vector<std::uint32_t>> adj;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t edge_count() const { return edges.size(); }
};

// Throws DegenerateInput when Z_n has no nonzero zero divisors
// (n prime or n < 4).
Graph build_graph(std::uint64_t n);

// Closed form for |E| from the divisor-class decomposition, no graph built.
std::uint64_t edge_count_formula(std::uint64_t n);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
std::uint64_t min_degree(const Graph& g);

// Closed form: smallest prime factor of n, minus one.
std::uint64_t edge_connectivity_formula(std::uint64_t n);

struct MinCut {
    std::uint64_t lambda = 0;
    std::vector<std::uint32_t> side; // vertex indices, one shore of the cut
};

// Exact edge connectivity by repeated s-t max flow, s fixed at a vertex of
// minimum degree. Requires at least 2 vertices.
MinCut edge_connectivity_mincut(const Graph& g);

// |V| x |E| vertex-edge incidence matrix over GF(p). Entries are 0/1;
// every column has exactly two ones. Throws DegenerateInput when there
// are no edges.
GfMatrix incidence_matrix(const Graph& g, std::uint16_t p);

// Codeword of the incidence code supported exactly on the edges crossing
// the cut (side, V \ side). Over GF(2) it is the sum of the rows indexed
// by side. Over odd p it is a +/-1 signed combination, which exists iff
// the subgraph induced by side is bipartite; otherwise InvalidArgument.
std::vector<std::uint8_t> cut_codeword(const Graph& g, std::uint16_t p,
                                       const std::vector<std::uint32_t>& side);

std::string to_dot(const Graph& g);

} // namespace zdcode
