#pragma once

#include <vector>

#include "graph.hpp"
#include "recognition.hpp"

namespace dohf {

inline bool is_stable_set(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.n()) return false;
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
    }
    return true;
}

// all vertices distinct from and non-adjacent to v, ascending
inline VertexSet non_neighborhood(const Graph& g, int v) {
    VertexSet out;
    for (int u = 0; u < g.n(); ++u)
        if (u != v && !g.adjacent(u, v)) out.push_back(u);
    return out;
}

namespace detail {

// branch and bound on a maximum-degree vertex; include branch first, and
// only strict improvements replace the incumbent, so the result is
// deterministic
struct MisSearch {
    const Graph& g;
    Bitset best;
    int best_size = -1;

    explicit MisSearch(const Graph& g_) : g(g_), best(g_.n()) {}

    void rec(Bitset cand, Bitset cur, int cur_size) {
        if (cur_size + cand.count() <= best_size) return;
        int v = -1, vdeg = -1;
        for (int u : cand) {
            Bitset nb = g.neighbors(u);
            nb &= cand;
            int d = nb.count();
            if (d > vdeg) {
                vdeg = d;
                v = u;
            }
        }
        if (v == -1) {
            if (cur_size > best_size) {
                best_size = cur_size;
                best = cur;
            }
            return;
        }
        Bitset with = cand;
        with.subtract(g.neighbors(v));
        with.reset(v);
        cur.set(v);
        rec(with, cur, cur_size + 1);
        cur.reset(v);
        cand.reset(v);
        rec(cand, cur, cur_size);
    }
};

} // namespace detail

// Maximum stable set by exact search; not restricted to class members.
inline VertexSet exact_mis(const Graph& g) {
    detail::MisSearch s(g);
    Bitset all(g.n());
    for (int v = 0; v < g.n(); ++v) all.set(v);
    s.rec(all, Bitset(g.n()), 0);
    VertexSet out;
    for (int v : s.best) out.push_back(v);
    return out;
}

struct StableSetOptions {
    bool check_membership = true;
    std::uint64_t budget = default_search_budget;
};

// anchor is the chosen vertex v; nullopt only for the empty graph
struct StableSetResult {
    VertexSet set;
    std::optional<int> anchor;
    int size = 0;
};

// Maximum stable set of a nearly perfect graph: every maximum stable set
// is {v} plus a maximum stable set of the non-neighborhood of v, so scan
// all anchors and keep the best. Smallest anchor wins ties.
inline StableSetResult max_stable_set(const Graph& g, const StableSetOptions& opt = {}) {
    if (opt.check_membership) ensure_in_class(g, opt.budget);
    if (g.n() == 0) return {{}, std::nullopt, 0};
    StableSetResult best;
    best.size = -1;
    for (int v = 0; v < g.n(); ++v) {
        auto ind = induced(g, non_neighborhood(g, v));
        VertexSet s = exact_mis(ind.graph);
        if (1 + static_cast<int>(s.size()) > best.size) {
            best.size = 1 + static_cast<int>(s.size());
            best.anchor = v;
            best.set.assign(1, v);
            for (int i : s) best.set.push_back(ind.to_parent[i]);
            std::sort(best.set.begin(), best.set.end());
        }
    }
    return best;
}

} // namespace dohf
