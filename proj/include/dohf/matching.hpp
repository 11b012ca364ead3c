#pragma once

#include <numeric>
#include <queue>
#include <vector>

#include "graph.hpp"

namespace dohf {

struct Matching {
    std::vector<Edge> edges; // normalized u < v, ascending by first endpoint
    int size() const { return static_cast<int>(edges.size()); }
};

namespace detail {

// Edmonds blossom algorithm, O(n^3). Alternating BFS from each exposed
// vertex; blossoms are contracted through the base[] relabeling.
class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g)
        : g_(g), n_(g.n()), match_(n_, -1), p_(n_), base_(n_), used_(n_), blossom_(n_) {}

    std::vector<int> run() {
        // greedy seed keeps the number of augmenting phases small
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1)
                for (int u : g_.neighbors(v))
                    if (match_[u] == -1) {
                        match_[v] = u;
                        match_[u] = v;
                        break;
                    }
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1) {
                int leaf = find_path(v);
                for (int u = leaf; u != -1;) {
                    int pu = p_[u], ppu = match_[pu];
                    match_[u] = pu;
                    match_[pu] = u;
                    u = ppu;
                }
            }
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<char> seen(n_, 0);
        for (int v = a;;) {
            v = base_[v];
            seen[v] = 1;
            if (match_[v] == -1) break;
            v = p_[match_[v]];
        }
        for (int v = b;;) {
            v = base_[v];
            if (seen[v]) return v;
            v = p_[match_[v]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = 1;
            blossom_[base_[match_[v]]] = 1;
            p_[v] = child;
            child = match_[v];
            v = p_[match_[v]];
        }
    }

    // BFS for an augmenting path from root; returns its exposed far end,
    // or -1 when none exists
    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(p_.begin(), p_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
                    // odd cycle: contract the blossom
                    int cur = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i)
                        if (blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (p_[to] == -1) {
                    p_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, p_, base_;
    std::vector<char> used_, blossom_;
};

} // namespace detail

// Maximum matching; deterministic for a fixed graph (vertices and
// neighbors are always scanned in ascending order).
inline Matching maximum_matching(const Graph& g) {
    auto match = detail::BlossomMatcher(g).run();
    Matching m;
    for (int v = 0; v < g.n(); ++v)
        if (match[v] > v) m.edges.push_back({v, match[v]});
    return m;
}

// True iff m.edges are edges of g and pairwise disjoint.
inline bool verify_matching(const Graph& g, const Matching& m) {
    std::vector<char> hit(g.n(), 0);
    for (auto [u, v] : m.edges) {
        if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || !g.adjacent(u, v)) return false;
        if (hit[u] || hit[v]) return false;
        hit[u] = hit[v] = 1;
    }
    return true;
}

} // namespace dohf
