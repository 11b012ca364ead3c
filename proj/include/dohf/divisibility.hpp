#pragma once

#include <cstdint>
#include <unordered_map>

#include "decomposition.hpp"
#include "graph.hpp"
#include "oracles.hpp"
#include "recognition.hpp"

namespace dohf {

// X meets every maximum clique and induces a Berge graph; rest = V \ X.
struct Division {
    VertexSet x;
    VertexSet rest;
};

// Verification route, independent of the construction: Berge check on X
// plus brute-force clique numbers.
inline bool check_division(const Graph& g, const Division& d,
                           std::uint64_t budget = default_search_budget) {
    std::vector<char> mark(g.n(), 0);
    for (int v : d.x) {
        if (v < 0 || v >= g.n() || mark[v]) return false;
        mark[v] = 1;
    }
    for (int v : d.rest) {
        if (v < 0 || v >= g.n() || mark[v]) return false;
        mark[v] = 1;
    }
    for (char c : mark)
        if (!c) return false;
    if (!is_berge(induced(g, d.x).graph, budget)) return false;
    if (d.rest.empty()) return true;
    // every maximum clique meets X iff removing X lowers omega
    return brute_omega(induced(g, d.rest).graph, 64) < brute_omega(g, 64);
}

struct DivideOptions {
    bool check_membership = true;
    std::uint64_t search_budget = default_search_budget;
    // visited-subset budget for the AlphaLe2 leaf search
    std::uint64_t subset_budget = 10'000'000;
};

namespace detail {

// omega for every subset of a small graph: omega(S) either drops the
// lowest vertex or takes it with its neighborhood
struct OmegaTable {
    int n;
    std::vector<std::uint32_t> nbr;
    std::vector<std::uint8_t> omega;

    explicit OmegaTable(const Graph& g) : n(g.n()) {
        if (n > 20) throw BudgetError("subset table: more than 20 vertices");
        nbr.assign(n, 0);
        for (auto [u, v] : g.edges()) {
            nbr[u] |= 1u << v;
            nbr[v] |= 1u << u;
        }
        omega.assign(std::size_t{1} << n, 0);
        for (std::uint32_t mask = 1; mask < omega.size(); ++mask) {
            int v = std::countr_zero(mask);
            std::uint32_t rest = mask & ~(1u << v);
            omega[mask] = std::max<std::uint8_t>(omega[rest], 1 + omega[mask & nbr[v]]);
        }
    }
};

inline VertexSet mask_vertices(std::uint32_t mask) {
    VertexSet out;
    for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
    return out;
}

// Berge status per vertex subset, memoized; one graph per memo.
struct BergeMemo {
    const Graph& g;
    std::uint64_t budget;
    std::unordered_map<std::uint32_t, bool> memo;

    bool operator()(std::uint32_t mask) {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        bool b = is_berge(induced(g, mask_vertices(mask)).graph, budget);
        memo.emplace(mask, b);
        return b;
    }
};

// next mask of equal popcount (Gosper), or 0 past the end
inline std::uint32_t next_same_popcount(std::uint32_t v) {
    std::uint32_t c = v & -v, r = v + c;
    if (r == 0) return 0;
    return (((r ^ v) >> 2) / c) | r;
}

// Largest Berge X meeting every maximum clique of h; candidates by
// decreasing size, numerically ascending inside a size. Counts each
// candidate against the subset budget.
inline std::uint32_t divide_small(const Graph& h, std::uint64_t search_budget,
                                  std::uint64_t subset_budget, std::uint64_t& visited) {
    OmegaTable tab(h);
    BergeMemo berge{h, search_budget, {}};
    const std::uint32_t full =
        h.n() == 32 ? ~0u : (std::uint32_t{1} << h.n()) - 1;
    const int om = tab.omega[full];
    for (int size = h.n(); size >= 1; --size) {
        std::uint32_t first = (std::uint32_t{1} << size) - 1;
        for (std::uint32_t x = first; x && x <= full; x = next_same_popcount(x)) {
            if (++visited > subset_budget)
                throw BudgetError("perfect_division: subset budget exceeded");
            if (tab.omega[full & ~x] >= om) continue;
            if (berge(x)) return x;
        }
    }
    throw InternalError("perfect_division: no division in an AlphaLe2 leaf");
}

inline void divide_rec(const Graph& g, const DecompositionNode& node, const DivideOptions& opt,
                       std::uint64_t& visited, VertexSet& x) {
    switch (node.kind) {
        case DecompCase::perfect:
            x.insert(x.end(), node.vertices.begin(), node.vertices.end());
            return;
        case DecompCase::alpha_le_2: {
            auto ind = induced(g, node.vertices);
            std::uint32_t mask =
                divide_small(ind.graph, opt.search_budget, opt.subset_budget, visited);
            for (int v : mask_vertices(mask)) x.push_back(ind.to_parent[v]);
            return;
        }
        case DecompCase::cojoin:
            // a union of divisions divides a disjoint union
            divide_rec(g, node.children.at(0), opt, visited, x);
            divide_rec(g, node.children.at(1), opt, visited, x);
            return;
        case DecompCase::join_partition:
            // T is Berge and every maximum clique spans the join, so T
            // alone does it
            x.insert(x.end(), node.part_a.begin(), node.part_a.end());
            return;
    }
}

} // namespace detail

// Constructive side of perfect divisibility: a set X that induces a Berge
// graph and meets every maximum clique, found along the decomposition
// tree.
inline Division perfect_division(const Graph& g, const DivideOptions& opt = {}) {
    if (opt.check_membership) ensure_in_class(g, opt.search_budget);
    DecompositionNode tree = decompose_tree(g, {false, opt.search_budget});
    Division d;
    std::uint64_t visited = 0;
    detail::divide_rec(g, tree, opt, visited, d.x);
    std::sort(d.x.begin(), d.x.end());
    std::vector<char> in_x(g.n(), 0);
    for (int v : d.x) in_x[v] = 1;
    for (int v = 0; v < g.n(); ++v)
        if (!in_x[v]) d.rest.push_back(v);
    return d;
}

// ok == false comes with the offending induced subgraph.
struct DivisibilityCheck {
    bool ok = true;
    VertexSet counterexample;
    explicit operator bool() const { return ok; }
};

// Exhaustive perfect divisibility: every nonempty induced subgraph H must
// contain a Berge X(H) meeting all maximum cliques of H. Candidates per H
// run by decreasing size, so a perfect H is accepted at the first
// candidate X = H. Budget counts visited candidate subsets.
inline DivisibilityCheck is_perfectly_divisible(const Graph& g,
                                                std::uint64_t budget = 50'000'000,
                                                std::uint64_t search_budget =
                                                    default_search_budget) {
    if (g.n() > 20) throw BudgetError("is_perfectly_divisible: more than 20 vertices");
    detail::OmegaTable tab(g);
    detail::BergeMemo berge{g, search_budget, {}};
    std::uint64_t visited = 0;
    const std::uint32_t full = (std::uint32_t{1} << g.n()) - 1;
    for (std::uint32_t h = 1; h <= full; ++h) {
        const int om = tab.omega[h];
        const VertexSet hv = detail::mask_vertices(h);
        const int k = static_cast<int>(hv.size());
        bool divided = false;
        // X runs over submasks of h by decreasing popcount; candidates are
        // enumerated in the compact index space of h and scattered back
        for (int size = k; size >= 1 && !divided; --size) {
            const std::uint32_t last = ((std::uint32_t{1} << size) - 1) << (k - size);
            for (std::uint32_t lx = (std::uint32_t{1} << size) - 1;;
                 lx = detail::next_same_popcount(lx)) {
                if (++visited > budget)
                    throw BudgetError("is_perfectly_divisible: subset budget exceeded");
                std::uint32_t x = 0;
                for (std::uint32_t b = lx; b; b &= b - 1)
                    x |= std::uint32_t{1} << hv[std::countr_zero(b)];
                if (tab.omega[h & ~x] < om && berge(x)) {
                    divided = true;
                    break;
                }
                if (lx == last) break;
            }
        }
        if (!divided) return {false, hv};
    }
    return {};
}

// Exhaustive 2-divisibility: every induced H with an edge splits into V1,
// V2 with omega(V1) < omega(H) and omega(V2) < omega(H).
inline DivisibilityCheck is_2_divisible(const Graph& g, std::uint64_t budget = 50'000'000) {
    if (g.n() > 20) throw BudgetError("is_2_divisible: more than 20 vertices");
    detail::OmegaTable tab(g);
    std::uint64_t visited = 0;
    const std::uint32_t full = (std::uint32_t{1} << g.n()) - 1;
    for (std::uint32_t h = 1; h <= full && h != 0; ++h) {
        const int om = tab.omega[h];
        if (om < 2) continue; // stable subsets split trivially
        bool split = false;
        for (std::uint32_t v1 = h;; v1 = (v1 - 1) & h) {
            if (++visited > budget) throw BudgetError("is_2_divisible: subset budget exceeded");
            if (tab.omega[v1] < om && tab.omega[h & ~v1] < om) {
                split = true;
                break;
            }
            if (v1 == 0) break;
        }
        if (!split) return {false, detail::mask_vertices(h)};
    }
    return {};
}

// Smallest homogeneous set, lexicographically least on ties: a proper
// subset of size >= 2 every outside vertex sees completely or not at all.
inline std::optional<VertexSet> find_homogeneous_set(const Graph& g) {
    const int n = g.n();
    for (int k = 2; k < n; ++k) {
        // lexicographic k-combinations
        VertexSet comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        for (;;) {
            bool homogeneous = true;
            for (int v = 0; v < n && homogeneous; ++v) {
                if (std::find(comb.begin(), comb.end(), v) != comb.end()) continue;
                int cnt = 0;
                for (int u : comb)
                    if (g.adjacent(u, v)) ++cnt;
                if (cnt != 0 && cnt != k) homogeneous = false;
            }
            if (homogeneous) return comb;
            int i = k - 1;
            while (i >= 0 && comb[i] == n - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return std::nullopt;
}

} // namespace dohf
