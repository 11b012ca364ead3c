#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "recognition.hpp"

namespace dohf {

// Brute-force reference values. These share no algorithmic ideas with the
// production paths: coloring is plain backtracking, not matching arithmetic
// or DSATUR; alpha is a bounds-free branching recursion, not the
// branch-and-bound of the stable set module. Caps guard against runaway
// inputs and throw BudgetError when exceeded.

namespace detail {

inline void oracle_cap(const Graph& g, int cap, const char* who) {
    if (g.n() > cap) throw BudgetError(std::string(who) + ": vertex count exceeds cap");
}

inline std::vector<std::uint64_t> mask_rows(const Graph& g) {
    std::vector<std::uint64_t> nbr(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        nbr[u] |= std::uint64_t{1} << v;
        nbr[v] |= std::uint64_t{1} << u;
    }
    return nbr;
}

inline std::uint64_t full_mask(int n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// canonical k-colorability: vertex order 0..n-1, at most one fresh color
// per step
inline bool k_colorable(const Graph& g, int k, std::vector<int>& color, int v, int used) {
    if (v == g.n()) return true;
    const int limit = std::min(used + 1, k);
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int u : g.neighbors(v))
            if (u < v && color[u] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (k_colorable(g, k, color, v + 1, std::max(used, c + 1))) return true;
        color[v] = -1;
    }
    return false;
}

inline int omega_rec(const std::vector<std::uint64_t>& nbr, std::uint64_t cand) {
    if (!cand) return 0;
    int v = std::countr_zero(cand);
    std::uint64_t bit = std::uint64_t{1} << v;
    int skip = omega_rec(nbr, cand & ~bit);
    int take = 1 + omega_rec(nbr, cand & nbr[v]);
    return std::max(skip, take);
}

inline int alpha_rec(const std::vector<std::uint64_t>& nbr, std::uint64_t cand) {
    int taken = 0;
    // vertices with at most one candidate neighbor always join some
    // maximum stable set
    for (bool again = true; again;) {
        again = false;
        for (std::uint64_t rest = cand; rest;) {
            int v = std::countr_zero(rest);
            std::uint64_t bit = std::uint64_t{1} << v;
            rest &= ~bit;
            std::uint64_t nb = nbr[v] & cand;
            if (std::popcount(nb) <= 1) {
                cand &= ~(nb | bit);
                ++taken;
                again = true;
                break;
            }
        }
    }
    if (!cand) return taken;
    // branch on a maximum-degree vertex, lowest index on ties
    int best_v = -1, best_deg = -1;
    for (std::uint64_t rest = cand; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        int deg = std::popcount(nbr[v] & cand);
        if (deg > best_deg) {
            best_deg = deg;
            best_v = v;
        }
    }
    std::uint64_t bit = std::uint64_t{1} << best_v;
    int without = alpha_rec(nbr, cand & ~bit);
    int with = 1 + alpha_rec(nbr, cand & ~(nbr[best_v] | bit));
    return taken + std::max(without, with);
}

} // namespace detail

// chi by iterative deepening over k
inline int brute_chi(const Graph& g, int cap = 16) {
    detail::oracle_cap(g, cap, "brute_chi");
    if (g.n() == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> color(g.n(), -1);
        if (detail::k_colorable(g, k, color, 0, 0)) return k;
    }
}

inline int brute_omega(const Graph& g, int cap = 20) {
    detail::oracle_cap(g, std::min(cap, 64), "brute_omega");
    return detail::omega_rec(detail::mask_rows(g), detail::full_mask(g.n()));
}

// Raise the cap explicitly for sparse graphs beyond 20 vertices; the
// degree-one reduction keeps subdivisions tractable.
inline int brute_alpha(const Graph& g, int cap = 20) {
    detail::oracle_cap(g, std::min(cap, 64), "brute_alpha");
    return detail::alpha_rec(detail::mask_rows(g), detail::full_mask(g.n()));
}

// maximum matching size by take/skip subset dynamics, independent of the
// blossom code
inline int brute_matching_size(const Graph& g, int cap = 20) {
    detail::oracle_cap(g, std::min(cap, 25), "brute_matching_size");
    const int n = g.n();
    auto nbr = detail::mask_rows(g);
    std::vector<std::int8_t> dp(std::size_t{1} << n, 0);
    for (std::uint64_t mask = 1; mask < dp.size(); ++mask) {
        int v = std::countr_zero(mask);
        std::uint64_t bit = std::uint64_t{1} << v;
        std::int8_t best = dp[mask & ~bit]; // v unmatched
        for (std::uint64_t cand = nbr[v] & mask & ~bit; cand;) {
            int u = std::countr_zero(cand);
            cand &= cand - 1;
            std::int8_t take =
                static_cast<std::int8_t>(1 + dp[mask & ~bit & ~(std::uint64_t{1} << u)]);
            best = std::max(best, take);
        }
        dp[mask] = best;
    }
    return dp[detail::full_mask(n)];
}

// minimum number of cliques covering all vertices; subset DP over the
// clique indicator table
inline int brute_clique_cover(const Graph& g, int cap = 12) {
    detail::oracle_cap(g, std::min(cap, 20), "brute_clique_cover");
    const int n = g.n();
    if (n == 0) return 0;
    auto nbr = detail::mask_rows(g);
    const std::size_t total = std::size_t{1} << n;
    std::vector<char> clique(total, 0);
    clique[0] = 1;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        int v = std::countr_zero(mask);
        std::uint64_t rest = mask & ~(std::uint64_t{1} << v);
        clique[mask] = clique[rest] && (rest & ~nbr[v]) == 0;
    }
    std::vector<int> cover(total, 0);
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        int v = std::countr_zero(mask);
        std::uint64_t vbit = std::uint64_t{1} << v;
        int best = n + 1;
        // sub runs over submasks of mask containing v
        for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
            if ((sub & vbit) && clique[sub]) best = std::min(best, 1 + cover[mask & ~sub]);
            if (sub == 0) break;
        }
        cover[mask] = best;
    }
    return cover[total - 1];
}

struct OracleReport {
    int chi = 0;
    int omega = 0;
    int alpha = 0;
    std::optional<int> girth;
};

inline OracleReport oracle_report(const Graph& g, int chi_cap = 16, int clique_cap = 20) {
    OracleReport r;
    r.chi = brute_chi(g, chi_cap);
    r.omega = brute_omega(g, clique_cap);
    r.alpha = brute_alpha(g, clique_cap);
    r.girth = girth(g);
    return r;
}

} // namespace dohf
