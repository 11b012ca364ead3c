#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bitset.hpp"

namespace dohf {

// Vertex subsets produced by the library are sorted ascending.
using VertexSet = std::vector<int>;
using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1 with bit-row adjacency.
// Rows stay symmetric and loop-free; operations never mutate their input.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(checked_n(n)), adj_(static_cast<std::size_t>(n), Bitset(n)) {}
    Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int n() const { return n_; }
    int m() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    // idempotent; rejects loops and out-of-range endpoints
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (adj_[u].test(v)) return;
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }

    // edges normalized u < v, lexicographic order
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u + 1); v != -1; v = adj_[u].next(v + 1))
                out.push_back({u, v});
        return out;
    }

    VertexSet vertices() const {
        VertexSet vs(n_);
        for (int v = 0; v < n_; ++v) vs[v] = v;
        return vs;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
    }

    static int checked_n(int n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        return n;
    }

    int n_ = 0;
    std::vector<Bitset> adj_;
    int m_ = 0;
};

inline Graph complement(const Graph& g) {
    const int n = g.n();
    Graph co(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) co.add_edge(u, v);
    return co;
}

// Induced subgraph with the label map back into the parent graph.
// to_parent[i] is the parent vertex behind subgraph vertex i; labels
// follow ascending parent order.
struct InducedGraph {
    Graph graph;
    std::vector<int> to_parent;
};

inline InducedGraph induced(const Graph& g, const VertexSet& s) {
    VertexSet vs(s);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs)
        if (v < 0 || v >= g.n()) throw std::invalid_argument("induced: vertex out of range");
    const int k = static_cast<int>(vs.size());
    Graph h(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(vs[i], vs[j])) h.add_edge(i, j);
    return {std::move(h), std::move(vs)};
}

// Components ordered by smallest member; members sorted ascending.
inline std::vector<VertexSet> connected_components(const Graph& g) {
    const int n = g.n();
    std::vector<VertexSet> comps;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

struct Split {
    VertexSet a, b;
};

// Nontrivial co-join split if g is disconnected: a is the component of
// vertex 0, b the rest.
inline std::optional<Split> cojoin_split(const Graph& g) {
    auto comps = connected_components(g);
    if (comps.size() < 2) return std::nullopt;
    Split s;
    s.a = comps[0];
    for (std::size_t i = 1; i < comps.size(); ++i)
        s.b.insert(s.b.end(), comps[i].begin(), comps[i].end());
    std::sort(s.b.begin(), s.b.end());
    return s;
}

// Nontrivial join split if the complement is disconnected.
inline std::optional<Split> join_split(const Graph& g) { return cojoin_split(complement(g)); }

namespace detail {

inline void check_disjoint_parts(const Graph& g, const VertexSet& a, const VertexSet& b) {
    std::vector<char> mark(g.n(), 0);
    for (int v : a) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("part vertex out of range");
        if (mark[v]) throw std::invalid_argument("duplicate vertex in part");
        mark[v] = 1;
    }
    for (int v : b) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("part vertex out of range");
        if (mark[v]) throw std::invalid_argument("parts overlap");
        mark[v] = 2;
    }
}

} // namespace detail

// True iff no edge runs between a and b. Parts must be disjoint.
inline bool is_cojoin(const Graph& g, const VertexSet& a, const VertexSet& b) {
    detail::check_disjoint_parts(g, a, b);
    for (int u : a)
        for (int v : b)
            if (g.adjacent(u, v)) return false;
    return true;
}

// True iff every a-b pair is an edge. Parts must be disjoint.
inline bool is_join(const Graph& g, const VertexSet& a, const VertexSet& b) {
    detail::check_disjoint_parts(g, a, b);
    for (int u : a)
        for (int v : b)
            if (!g.adjacent(u, v)) return false;
    return true;
}

// Length of a shortest cycle, or nullopt for forests. BFS from every
// vertex; the minimum candidate dist[u] + dist[w] + 1 over non-tree
// edges is exact.
inline std::optional<int> girth(const Graph& g) {
    const int n = g.n();
    int best = -1;
    std::vector<int> dist(n), parent(n), queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        queue.clear();
        dist[s] = 0;
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int u : g.neighbors(v)) {
                if (dist[u] == -1) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if (u != parent[v] && dist[u] >= dist[v]) {
                    int cand = dist[u] + dist[v] + 1;
                    if (best == -1 || cand < best) best = cand;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

} // namespace dohf
