#pragma once

#include <cstdint>
#include <optional>

#include "graph.hpp"
#include "recognition.hpp"

namespace dohf {

// SplitMix64. Fixed constants keep every generated graph reproducible
// across platforms; std::mt19937 distributions are not portable enough
// for golden files.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0,1), 53 mantissa bits
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

// sides 0..a-1 and a..a+b-1
inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

// outer cycle 0..4, inner pentagram 5..9, spokes i -- i+5
inline Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, i + 5);
    }
    return g;
}

// a=0, b=1, c=2, d=3, e=4; the triangle b,c,d with pendant edge ab and
// apex e adjacent to b,d
inline Graph dart_graph() {
    return Graph(5, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
}

inline Graph claw_graph() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

// pendant 0 at 1, four-cycle 1,2,4,3
inline Graph banner_graph() {
    return Graph(5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
}

// a keeps its labels, b shifts up by a.n()
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n() + b.n());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
    return g;
}

// disjoint union plus all edges between the sides
inline Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < b.n(); ++v) g.add_edge(u, a.n() + v);
    return g;
}

// G(n,p): pairs scanned in lexicographic order, one unit draw per pair.
// The draw order is part of the contract; golden files depend on it.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_unit() < p) g.add_edge(u, v);
    return g;
}

// Rejection-samples G(n,p) until the draw is (dart, odd hole)-free; one
// continuing SplitMix64 stream across tries. nullopt when max_tries draws
// all fail.
inline std::optional<Graph> random_class_graph(int n, double p, std::uint64_t seed,
                                               int max_tries = 100,
                                               std::uint64_t budget = default_search_budget) {
    SplitMix64 rng(seed);
    for (int t = 0; t < max_tries; ++t) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_unit() < p) g.add_edge(u, v);
        if (in_class(g, budget).member()) return g;
    }
    return std::nullopt;
}

// Complement of an incrementally sampled triangle-free graph: pairs in
// lexicographic order, each added with probability p unless it would
// close a triangle. The result has no stable triple.
inline Graph random_cotriangle_free_graph(int n, double p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Graph tf(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rng.next_unit() >= p) continue;
            Bitset common = tf.neighbors(u);
            common &= tf.neighbors(v);
            if (!common.any()) tf.add_edge(u, v);
        }
    return complement(tf);
}

// Each edge becomes a three-edge path: edge i of g.edges() turns into
// u -- n+2i -- n+2i+1 -- v. Original labels are preserved.
inline Graph poljak_subdivide(const Graph& g) {
    const int n = g.n();
    Graph out(n + 2 * g.m());
    int i = 0;
    for (auto [u, v] : g.edges()) {
        int x = n + 2 * i, y = n + 2 * i + 1;
        out.add_edge(u, x);
        out.add_edge(x, y);
        out.add_edge(y, v);
        ++i;
    }
    return out;
}

} // namespace dohf
