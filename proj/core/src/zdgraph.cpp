#include "zdcode/zdgraph.hpp"

#include "zdcode/errors.hpp"
#include "zdcode/modring.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace zdcode {

namespace {

// x ~ y in Gamma(Z_n) depends only on the gcd classes: with d = gcd(x, n)
// and e = gcd(y, n), n | xy iff n | de, i.e. (n/d) | e.
bool classes_adjacent(std::uint64_t n, std::uint64_t d, std::uint64_t e) {
    return e % (n / d) == 0;
}

std::vector<int> bipartite_coloring(const std::vector<std::vector<std::uint32_t>>& adj) {
    std::vector<int> color(adj.size(), -1);
    for (std::size_t start = 0; start < adj.size(); ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::deque<std::uint32_t> q{static_cast<std::uint32_t>(start)};
        while (!q.empty()) {
            std::uint32_t u = q.front();
            q.pop_front();
            for (std::uint32_t v : adj[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push_back(v);
                } else if (color[v] == color[u]) {
                    return {};
                }
            }
        }
    }
    return color;
}

// Unit-capacity max flow (Edmonds-Karp), arcs stored as mirrored pairs.
struct FlowNet {
    std::size_t n;
    std::vector<std::vector<std::uint32_t>> out; // arc ids per node
    std::vector<std::uint32_t> to;
    std::vector<std::uint8_t> cap;

    explicit FlowNet(const Graph& g) : n(g.vertex_count()), out(n) {
        to.reserve(2 * g.edge_count());
        cap.reserve(2 * g.edge_count());
        for (const auto& [u, v] : g.edges) {
            out[u].push_back(static_cast<std::uint32_t>(to.size()));
            to.push_back(v);
            cap.push_back(1);
            out[v].push_back(static_cast<std::uint32_t>(to.size()));
            to.push_back(u);
            cap.push_back(1);
        }
    }

    void reset() { std::fill(cap.begin(), cap.end(), std::uint8_t{1}); }

    // Max flow s -> t, stopping once `limit` is reached.
    std::uint64_t max_flow(std::uint32_t s, std::uint32_t t, std::uint64_t limit) {
        std::uint64_t flow = 0;
        std::vector<std::int64_t> parent_arc(n);
        while (flow < limit) {
            std::fill(parent_arc.begin(), parent_arc.end(), std::int64_t{-1});
            parent_arc[s] = -2;
            std::deque<std::uint32_t> q{s};
            while (!q.empty() && parent_arc[t] == -1) {
                std::uint32_t u = q.front();
                q.pop_front();
                for (std::uint32_t a : out[u]) {
                    if (!cap[a] || parent_arc[to[a]] != -1) continue;
                    parent_arc[to[a]] = a;
                    q.push_back(to[a]);
                }
            }
            if (parent_arc[t] == -1) break;
            for (std::uint32_t u = t; u != s;) {
                std::uint32_t a = static_cast<std::uint32_t>(parent_arc[u]);
                --cap[a];
                ++cap[a ^ 1];
                u = to[a ^ 1];
            }
            ++flow;
        }
        return flow;
    }

    std::vector<std::uint32_t> residual_side(std::uint32_t s) const {
        std::vector<char> seen(n, 0);
        seen[s] = 1;
        std::deque<std::uint32_t> q{s};
        while (!q.empty()) {
            std::uint32_t u = q.front();
            q.pop_front();
            for (std::uint32_t a : out[u])
                if (cap[a] && !seen[to[a]]) {
                    seen[to[a]] = 1;
                    q.push_back(to[a]);
                }
        }
        std::vector<std::uint32_t> side;
        for (std::uint32_t i = 0; i < n; ++i)
            if (seen[i]) side.push_back(i);
        return side;
    }
};

} // namespace

Graph build_graph(std::uint64_t n) {
    if (n < 2) throw InvalidArgument("build_graph: n must be >= 2");
    Graph g;
    g.n = n;
    for (std::uint64_t x = 2; x < n; ++x)
        if (std::gcd(x, n) > 1) {
            g.vertices.push_back(x);
            g.vertex_gcd.push_back(std::gcd(x, n));
        }
    if (g.vertices.empty())
        throw DegenerateInput("build_graph: Z_" + std::to_string(n) +
                              " has no nonzero zero divisors");
    const std::size_t nv = g.vertices.size();
    g.adj.resize(nv);
    for (std::uint32_t i = 0; i < nv; ++i)
        for (std::uint32_t j = i + 1; j < nv; ++j)
            if (classes_adjacent(n, g.vertex_gcd[i], g.vertex_gcd[j])) {
                g.edges.emplace_back(i, j);
                g.adj[i].push_back(j);
                g.adj[j].push_back(i);
            }
    return g;
}

std::uint64_t edge_count_formula(std::uint64_t n) {
    if (n < 2) throw InvalidArgument("edge_count_formula: n must be >= 2");
    std::vector<std::uint64_t> divs;
    for (std::uint64_t d = 2; d < n; ++d)
        if (n % d == 0) divs.push_back(d);
    std::uint64_t total = 0;
    for (std::size_t a = 0; a < divs.size(); ++a) {
        std::uint64_t sa = euler_phi(n / divs[a]);
        if (classes_adjacent(n, divs[a], divs[a]))
            total += sa * (sa - 1) / 2; // class is a clique
        for (std::size_t b = a + 1; b < divs.size(); ++b)
            if (classes_adjacent(n, divs[a], divs[b]))
                total += sa * euler_phi(n / divs[b]);
    }
    return total;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    std::vector<char> seen(g.vertex_count(), 0);
    seen[0] = 1;
    std::deque<std::uint32_t> q{0};
    std::size_t reached = 1;
    while (!q.empty()) {
        std::uint32_t u = q.front();
        q.pop_front();
        for (std::uint32_t v : g.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push_back(v);
            }
    }
    return reached == g.vertex_count();
}

bool is_bipartite(const Graph& g) {
    return !g.vertices.empty() && !bipartite_coloring(g.adj).empty();
}

std::uint64_t min_degree(const Graph& g) {
    if (g.vertices.empty()) throw DegenerateInput("min_degree: empty graph");
    std::size_t best = g.adj[0].size();
    for (const auto& a : g.adj) best = std::min(best, a.size());
    return best;
}

std::uint64_t edge_connectivity_formula(std::uint64_t n) {
    if (n < 4 || is_prime(n))
        throw InvalidArgument("edge_connectivity_formula: n must be composite");
    return smallest_prime_factor(n) - 1;
}

MinCut edge_connectivity_mincut(const Graph& g) {
    const std::size_t nv = g.vertex_count();
    if (nv < 2)
        throw DegenerateInput("edge_connectivity_mincut: need at least 2 vertices");

    if (!is_connected(g)) {
        std::vector<char> seen(nv, 0);
        seen[0] = 1;
        std::deque<std::uint32_t> q{0};
        std::vector<std::uint32_t> side{0};
        while (!q.empty()) {
            std::uint32_t u = q.front();
            q.pop_front();
            for (std::uint32_t v : g.adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    side.push_back(v);
                    q.push_back(v);
                }
        }
        std::sort(side.begin(), side.end());
        return {0, std::move(side)};
    }

    std::uint32_t s = 0;
    for (std::uint32_t i = 1; i < nv; ++i)
        if (g.adj[i].size() < g.adj[s].size()) s = i;

    FlowNet net(g);
    std::uint64_t best = g.adj[s].size(); // cut isolating s
    std::uint32_t best_t = nv;            // nv means "the {s} cut"
    for (std::uint32_t t = 0; t < nv; ++t) {
        if (t == s) continue;
        net.reset();
        std::uint64_t f = net.max_flow(s, t, best);
        if (f < best) {
            best = f;
            best_t = t;
        }
    }
    if (best_t == nv) return {best, {s}};
    net.reset();
    net.max_flow(s, best_t, best + 1); // uncapped rerun to expose the cut
    return {best, net.residual_side(s)};
}

GfMatrix incidence_matrix(const Graph& g, std::uint16_t p) {
    if (g.edge_count() == 0)
        throw DegenerateInput("incidence_matrix: graph has no edges");
    GfMatrix m(p, g.vertex_count(), g.edge_count());
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        m.at(g.edges[j].first, j) = 1;
        m.at(g.edges[j].second, j) = 1;
    }
    return m;
}

std::vector<std::uint8_t> cut_codeword(const Graph& g, std::uint16_t p,
                                       const std::vector<std::uint32_t>& side) {
    const std::size_t nv = g.vertex_count();
    if (side.empty() || side.size() >= nv)
        throw InvalidArgument("cut_codeword: side must be a proper nonempty subset");
    std::vector<char> in_side(nv, 0);
    for (std::uint32_t v : side) {
        if (v >= nv || in_side[v])
            throw InvalidArgument("cut_codeword: bad vertex index in side");
        in_side[v] = 1;
    }

    std::vector<int> sign(nv, 0); // 0 outside; +1/-1 coefficients inside
    if (p == 2) {
        for (std::uint32_t v : side) sign[v] = 1;
    } else {
        // Need an induced proper 2-coloring of side so that internal edges cancel.
        std::vector<std::vector<std::uint32_t>> induced(nv);
        for (const auto& [u, v] : g.edges)
            if (in_side[u] && in_side[v]) {
                induced[u].push_back(v);
                induced[v].push_back(u);
            }
        for (std::uint32_t v : side)
            if (sign[v] == 0) {
                sign[v] = 1;
                std::deque<std::uint32_t> q{v};
                while (!q.empty()) {
                    std::uint32_t u = q.front();
                    q.pop_front();
                    for (std::uint32_t w : induced[u]) {
                        if (sign[w] == 0) {
                            sign[w] = -sign[u];
                            q.push_back(w);
                        } else if (sign[w] == sign[u]) {
                            throw InvalidArgument(
                                "cut_codeword: side induces an odd cycle, no signed "
                                "cut codeword over an odd field");
                        }
                    }
                }
            }
    }

    std::vector<std::uint8_t> c(g.edge_count(), 0);
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        auto [u, v] = g.edges[j];
        int val = (in_side[u] ? sign[u] : 0) + (in_side[v] ? sign[v] : 0);
        val %= p;
        if (val < 0) val += p;
        c[j] = static_cast<std::uint8_t>(val);
    }
    return c;
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph zd_" << g.n << " {\n";
    os << "  label=\"Gamma(Z_" << g.n << ")\";\n";
    for (std::uint64_t v : g.vertices) os << "  " << v << ";\n";
    for (const auto& [i, j] : g.edges)
        os << "  " << g.vertices[i] << " -- " << g.vertices[j] << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace zdcode
