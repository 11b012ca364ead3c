#pragma once

#include <vector>

#include "decomposition.hpp"
#include "graph.hpp"
#include "matching.hpp"
#include "oracles.hpp"
#include "recognition.hpp"

namespace dohf {

// assignment[v] in 0..num_colors-1; every color in the range is used
struct Coloring {
    std::vector<int> assignment;
    int num_colors = 0;
};

inline bool verify_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.assignment.size()) != g.n()) return false;
    std::vector<char> used(c.num_colors, 0);
    for (int v = 0; v < g.n(); ++v) {
        int col = c.assignment[v];
        if (col < 0 || col >= c.num_colors) return false;
        used[col] = 1;
    }
    for (auto [u, v] : g.edges())
        if (c.assignment[u] == c.assignment[v]) return false;
    for (char u : used)
        if (!u) return false;
    return true;
}

// Optimal coloring of a graph with no stable triple: color classes have
// at most two vertices, so chi = n - t where t is a maximum matching of
// the complement. Matched complement pairs take colors first (in matching
// order), leftover vertices follow ascending.
inline Coloring color_alpha2(const Graph& g) {
    if (auto ct = find_co_triangle(g))
        throw PreconditionError("color_alpha2: graph has a stable triple", *ct);
    Matching m = maximum_matching(complement(g));
    Coloring c;
    c.assignment.assign(g.n(), -1);
    int next = 0;
    for (auto [u, v] : m.edges) {
        c.assignment[u] = c.assignment[v] = next;
        ++next;
    }
    for (int v = 0; v < g.n(); ++v)
        if (c.assignment[v] == -1) c.assignment[v] = next++;
    c.num_colors = next;
    return c;
}

namespace detail {

// greedy clique: best-degree seed, then best-degree common neighbors;
// lower bound for the exact coloring search
inline int greedy_clique_size(const Graph& g) {
    const int n = g.n();
    if (n == 0) return 0;
    auto pick = [&](const Bitset& cand) {
        int best = -1, best_deg = -1;
        for (int v : cand) {
            int d = g.degree(v);
            if (d > best_deg) {
                best_deg = d;
                best = v;
            }
        }
        return best;
    };
    Bitset cand(n);
    for (int v = 0; v < n; ++v) cand.set(v);
    int size = 0;
    while (cand.any()) {
        int v = pick(cand);
        ++size;
        cand &= g.neighbors(v);
    }
    return size;
}

// Exact chromatic search: DSATUR vertex selection inside a
// branch-and-bound over the number of colors. Selection is by highest
// saturation, then highest degree, then lowest index, which also makes
// the returned assignment deterministic.
struct ExactColorer {
    const Graph& g;
    int n;
    int lower;
    int best_k;
    std::vector<int> assign, best_assign;
    std::vector<Bitset> around; // colors present in the neighborhood
    bool stop = false;

    explicit ExactColorer(const Graph& g_)
        : g(g_), n(g_.n()), lower(greedy_clique_size(g_)), best_k(n + 1), assign(n, -1),
          around(n, Bitset(n + 1)) {}

    int select() const {
        int best = -1, bs = -1, bd = -1;
        for (int v = 0; v < n; ++v) {
            if (assign[v] != -1) continue;
            int s = around[v].count(), d = g.degree(v);
            if (s > bs || (s == bs && d > bd)) {
                best = v;
                bs = s;
                bd = d;
            }
        }
        return best;
    }

    void place(int v, int c, std::vector<int>& touched) {
        assign[v] = c;
        for (int u : g.neighbors(v))
            if (assign[u] == -1 && !around[u].test(c)) {
                around[u].set(c);
                touched.push_back(u);
            }
    }

    void unplace(int v, int c, const std::vector<int>& touched) {
        assign[v] = -1;
        for (int u : touched) around[u].reset(c);
    }

    void rec(int colored, int used) {
        if (stop || used >= best_k) return;
        if (colored == n) {
            best_k = used;
            best_assign = assign;
            if (best_k == lower) stop = true;
            return;
        }
        int v = select();
        int limit = std::min(used + 1, best_k - 1);
        for (int c = 0; c < limit && !stop; ++c) {
            if (c < used && around[v].test(c)) continue;
            std::vector<int> touched;
            place(v, c, touched);
            rec(colored + 1, std::max(used, c + 1));
            unplace(v, c, touched);
        }
    }

    Coloring run() {
        if (n == 0) return {{}, 0};
        rec(0, 0);
        return {best_assign, best_k};
    }
};

} // namespace detail

// Optimal coloring of a Berge graph by exact search. The result is
// cross-checked against brute_omega: for a perfect graph chi = omega, so
// a mismatch means the caller misclassified the graph (or found a bug)
// and raises InternalError.
inline Coloring color_perfect(const Graph& g) {
    Coloring c = detail::ExactColorer(g).run();
    if (g.n() > 0 && c.num_colors != brute_omega(g, 64))
        throw InternalError("color_perfect: chi != omega, graph is not perfect");
    return c;
}

struct ColorOptions {
    bool check_membership = true;
    std::uint64_t budget = default_search_budget;
};

namespace detail {

// colors node vertices starting at color base; returns the colors used
inline int paint(const Graph& g, const DecompositionNode& node, std::vector<int>& assign,
                 int base) {
    switch (node.kind) {
        case DecompCase::perfect: {
            auto ind = induced(g, node.vertices);
            Coloring c = color_perfect(ind.graph);
            for (int i = 0; i < ind.graph.n(); ++i)
                assign[ind.to_parent[i]] = base + c.assignment[i];
            return c.num_colors;
        }
        case DecompCase::alpha_le_2: {
            auto ind = induced(g, node.vertices);
            Coloring c = color_alpha2(ind.graph);
            for (int i = 0; i < ind.graph.n(); ++i)
                assign[ind.to_parent[i]] = base + c.assignment[i];
            return c.num_colors;
        }
        case DecompCase::cojoin: {
            if (node.children.size() != 2) throw InternalError("paint: split without children");
            // sides share the color range
            int ka = paint(g, node.children[0], assign, base);
            int kb = paint(g, node.children[1], assign, base);
            return std::max(ka, kb);
        }
        case DecompCase::join_partition: {
            if (node.children.size() != 2) throw InternalError("paint: split without children");
            // sides need disjoint ranges: chi adds up across a join
            int ka = paint(g, node.children[0], assign, base);
            int kb = paint(g, node.children[1], assign, base + ka);
            return ka + kb;
        }
    }
    throw InternalError("paint: unknown case");
}

} // namespace detail

// Minimum coloring of a (dart, odd hole)-free graph along its
// decomposition tree.
inline Coloring color(const Graph& g, const ColorOptions& opt = {}) {
    if (opt.check_membership) ensure_in_class(g, opt.budget);
    DecompositionNode tree = decompose_tree(g, {false, opt.budget});
    Coloring c;
    c.assignment.assign(g.n(), -1);
    c.num_colors = detail::paint(g, tree, c.assignment, 0);
    if (!verify_coloring(g, c)) throw InternalError("color: produced coloring failed checks");
    return c;
}

} // namespace dohf
