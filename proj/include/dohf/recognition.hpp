#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "graph.hpp"

namespace dohf {

// Node-expansion budget for the hole searches: number of chordless-path
// extensions before the search reports out_of_budget.
inline constexpr std::uint64_t default_search_budget = 10'000'000;

enum class WitnessKind { dart, odd_hole, odd_antihole, co_triangle, claw, banner };

inline const char* to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::dart: return "dart";
        case WitnessKind::odd_hole: return "odd_hole";
        case WitnessKind::odd_antihole: return "odd_antihole";
        case WitnessKind::co_triangle: return "co_triangle";
        case WitnessKind::claw: return "claw";
        case WitnessKind::banner: return "banner";
    }
    return "?";
}

// Vertices are in the labels of the graph the witness was found in.
// dart:   (a,b,c,d,e) with edges ab,bc,bd,be,cd,de and non-edges ac,ad,ae,ce
// hole:   cyclic order; antihole: cyclic order in the complement
// co_triangle: pairwise non-adjacent triple
// claw:   (a,b,c,d), center a
// banner: (a,b,c,d,e), pendant a at b, four-cycle b,c,e,d
struct Witness {
    WitnessKind kind;
    std::vector<int> vertices;
    bool operator==(const Witness&) const = default;
};

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotInClassError : public std::runtime_error {
public:
    explicit NotInClassError(Witness w)
        : std::runtime_error(std::string("graph is not (dart, odd hole)-free: found ") +
                             to_string(w.kind)),
          witness(std::move(w)) {}
    Witness witness;
};

class PreconditionError : public std::runtime_error {
public:
    PreconditionError(const std::string& msg, Witness w)
        : std::runtime_error(msg), witness(std::move(w)) {}
    Witness witness;
};

// An established invariant failed to hold; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Validates a witness against the graph by definition alone; shares no
// code with the searches.
inline bool witness_ok(const Graph& g, const Witness& w) {
    const auto& vs = w.vertices;
    for (int v : vs)
        if (v < 0 || v >= g.n()) return false;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j]) return false;
    auto adj = [&](int i, int j) { return g.adjacent(vs[i], vs[j]); };
    switch (w.kind) {
        case WitnessKind::dart: {
            if (vs.size() != 5) return false;
            // a=0 b=1 c=2 d=3 e=4
            return adj(0, 1) && adj(1, 2) && adj(1, 3) && adj(1, 4) && adj(2, 3) && adj(3, 4) &&
                   !adj(0, 2) && !adj(0, 3) && !adj(0, 4) && !adj(2, 4);
        }
        case WitnessKind::odd_hole:
        case WitnessKind::odd_antihole: {
            const int k = static_cast<int>(vs.size());
            if (k < 5 || k % 2 == 0) return false;
            const bool hole = w.kind == WitnessKind::odd_hole;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    bool ring = (j == i + 1) || (i == 0 && j == k - 1);
                    if (adj(i, j) != (ring == hole)) return false;
                }
            return true;
        }
        case WitnessKind::co_triangle:
            return vs.size() == 3 && !adj(0, 1) && !adj(0, 2) && !adj(1, 2);
        case WitnessKind::claw:
            return vs.size() == 4 && adj(0, 1) && adj(0, 2) && adj(0, 3) && !adj(1, 2) &&
                   !adj(1, 3) && !adj(2, 3);
        case WitnessKind::banner:
            return vs.size() == 5 && adj(0, 1) && adj(1, 2) && adj(1, 3) && adj(2, 4) &&
                   adj(3, 4) && !adj(0, 2) && !adj(0, 3) && !adj(0, 4) && !adj(2, 3) && !adj(1, 4);
    }
    return false;
}

// Lexicographically least dart by (b,c,d,e,a); nested ascending scans, so
// the first hit is canonical. Degree pruning on the center b.
inline std::optional<Witness> find_dart(const Graph& g) {
    const int n = g.n();
    Bitset tmp(n);
    for (int b = 0; b < n; ++b) {
        if (g.degree(b) < 4) continue;
        for (int c : g.neighbors(b)) {
            Bitset cd = g.neighbors(b);
            cd &= g.neighbors(c);
            for (int d : cd) {
                // e adjacent to b,d and not to c
                Bitset ce = g.neighbors(b);
                ce &= g.neighbors(d);
                ce.subtract(g.neighbors(c));
                for (int e : ce) {
                    if (e == c) continue;
                    // a adjacent to b only
                    Bitset ca = g.neighbors(b);
                    ca.subtract(g.neighbors(c));
                    ca.subtract(g.neighbors(d));
                    ca.subtract(g.neighbors(e));
                    int a = ca.next(0);
                    if (a != -1) return Witness{WitnessKind::dart, {a, b, c, d, e}};
                }
            }
        }
    }
    return std::nullopt;
}

// Lexicographically least stable triple, or nullopt.
inline std::optional<Witness> find_co_triangle(const Graph& g) {
    const int n = g.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (g.adjacent(i, j)) continue;
            for (int k = j + 1; k < n; ++k)
                if (!g.adjacent(i, k) && !g.adjacent(j, k))
                    return Witness{WitnessKind::co_triangle, {i, j, k}};
        }
    return std::nullopt;
}

// All vertices lying on at least one stable triple, sorted ascending.
inline VertexSet co_triangle_vertices(const Graph& g) {
    const int n = g.n();
    std::vector<char> mark(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (g.adjacent(i, j)) continue;
            for (int k = j + 1; k < n; ++k)
                if (!g.adjacent(i, k) && !g.adjacent(j, k)) mark[i] = mark[j] = mark[k] = 1;
        }
    VertexSet out;
    for (int v = 0; v < n; ++v)
        if (mark[v]) out.push_back(v);
    return out;
}

inline bool alpha_at_most_2(const Graph& g) { return !find_co_triangle(g).has_value(); }

enum class SearchStatus { found, absent, out_of_budget };

struct HoleSearch {
    SearchStatus status;
    std::optional<Witness> witness;
};

namespace detail {

// DFS over chordless paths, one target length at a time. Canonical form of
// a hole: v0 is the smallest vertex, traversal direction with v1 < v_last;
// roots and extensions scan ascending, so the first hole of the shortest
// odd length is lexicographically least as a sequence.
struct HoleDfs {
    const Graph& g;
    int len;
    std::uint64_t& work;
    std::uint64_t budget;
    bool over_budget = false;
    std::vector<int> path;
    // acc[j] = N(p_1) | ... | N(p_j), acc[0] empty. N(p_0) is kept out so
    // the closing vertex may be adjacent to p_0.
    std::vector<Bitset> acc;

    HoleDfs(const Graph& g_, int len_, std::uint64_t& work_, std::uint64_t budget_)
        : g(g_), len(len_), work(work_), budget(budget_) {}

    // path holds p_0..p_{k-1}; chooses p_k
    bool extend() {
        const int k = static_cast<int>(path.size());
        if (++work > budget) {
            over_budget = true;
            return false;
        }
        const int last = path.back();
        if (k == len - 1) {
            // close the cycle: adjacent to both ends, no chord to
            // p_1..p_{len-3}, and above p_1 to fix the direction
            Bitset cand = g.neighbors(last);
            cand &= g.neighbors(path[0]);
            cand.subtract(acc[len - 3]);
            int u = cand.next(path[1] + 1);
            if (u == -1) return false;
            path.push_back(u);
            return true;
        }
        // inner vertex: adjacent to the path tip only, above p_0
        Bitset cand = g.neighbors(last);
        if (k >= 2) {
            cand.subtract(acc[k - 2]);
            cand.subtract(g.neighbors(path[0]));
        }
        for (int u = cand.next(path[0] + 1); u != -1; u = cand.next(u + 1)) {
            acc[k] = acc[k - 1];
            acc[k] |= g.neighbors(u);
            path.push_back(u);
            if (extend()) return true;
            path.pop_back();
            if (over_budget) return false;
        }
        return false;
    }

    std::optional<std::vector<int>> run() {
        acc.assign(len, Bitset(g.n()));
        for (int s = 0; s + len <= g.n(); ++s) {
            path.assign(1, s);
            if (extend()) return path;
            if (over_budget) return std::nullopt;
        }
        return std::nullopt;
    }
};

// Shortest odd hole of length >= min_len, lexicographically least in its
// canonical form.
inline HoleSearch find_odd_hole_impl(const Graph& g, int min_len, std::uint64_t budget) {
    std::uint64_t work = 0;
    for (int len = min_len; len <= g.n(); len += 2) {
        HoleDfs dfs(g, len, work, budget);
        auto cycle = dfs.run();
        if (cycle) return {SearchStatus::found, Witness{WitnessKind::odd_hole, *cycle}};
        if (dfs.over_budget) return {SearchStatus::out_of_budget, std::nullopt};
    }
    return {SearchStatus::absent, std::nullopt};
}

} // namespace detail

inline HoleSearch find_odd_hole(const Graph& g, std::uint64_t budget = default_search_budget) {
    return detail::find_odd_hole_impl(g, 5, budget);
}

// Odd antihole of length >= min_len (5 or 7). The pipeline passes 7: a
// 5-antihole is a 5-hole and is caught by the hole search instead.
inline HoleSearch find_odd_antihole(const Graph& g, int min_len = 5,
                                    std::uint64_t budget = default_search_budget) {
    if (min_len != 5 && min_len != 7)
        throw std::invalid_argument("find_odd_antihole: min_len must be 5 or 7");
    HoleSearch res = detail::find_odd_hole_impl(complement(g), min_len, budget);
    if (res.witness) res.witness->kind = WitnessKind::odd_antihole;
    return res;
}

// True iff g has no odd hole and no odd antihole. Throws BudgetError when
// either search runs out of budget.
inline bool is_berge(const Graph& g, std::uint64_t budget = default_search_budget) {
    HoleSearch h = find_odd_hole(g, budget);
    if (h.status == SearchStatus::out_of_budget)
        throw BudgetError("is_berge: odd hole search exceeded budget");
    if (h.status == SearchStatus::found) return false;
    HoleSearch a = find_odd_antihole(g, 5, budget);
    if (a.status == SearchStatus::out_of_budget)
        throw BudgetError("is_berge: odd antihole search exceeded budget");
    return a.status == SearchStatus::absent;
}

struct ClassReport {
    std::optional<Witness> dart;
    std::optional<Witness> odd_hole;
    bool member() const { return !dart && !odd_hole; }
};

// Membership in the class of (dart, odd hole)-free graphs, with forbidden
// induced subgraphs as witnesses.
inline ClassReport in_class(const Graph& g, std::uint64_t budget = default_search_budget) {
    ClassReport r;
    r.dart = find_dart(g);
    HoleSearch h = find_odd_hole(g, budget);
    if (h.status == SearchStatus::out_of_budget)
        throw BudgetError("in_class: odd hole search exceeded budget");
    r.odd_hole = h.witness;
    return r;
}

// Membership or a NotInClassError carrying the first witness found.
inline void ensure_in_class(const Graph& g, std::uint64_t budget = default_search_budget) {
    ClassReport r = in_class(g, budget);
    if (r.dart) throw NotInClassError(*r.dart);
    if (r.odd_hole) throw NotInClassError(*r.odd_hole);
}

// Lexicographically least claw by (a,b,c,d), center a, leaves ascending.
inline std::optional<Witness> find_claw(const Graph& g) {
    const int n = g.n();
    for (int a = 0; a < n; ++a) {
        if (g.degree(a) < 3) continue;
        const Bitset& na = g.neighbors(a);
        for (int b : na)
            for (int c = na.next(b + 1); c != -1; c = na.next(c + 1)) {
                if (g.adjacent(b, c)) continue;
                for (int d = na.next(c + 1); d != -1; d = na.next(d + 1))
                    if (!g.adjacent(b, d) && !g.adjacent(c, d))
                        return Witness{WitnessKind::claw, {a, b, c, d}};
            }
    }
    return std::nullopt;
}

// Lexicographically least banner by (a,b,c,d,e) with c < d; pendant a at
// b, four-cycle b,c,e,d.
inline std::optional<Witness> find_banner(const Graph& g) {
    const int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b : g.neighbors(a)) {
            if (g.degree(b) < 3) continue;
            Bitset bc = g.neighbors(b);
            bc.subtract(g.neighbors(a));
            for (int c : bc) {
                if (c == a) continue;
                for (int d = bc.next(c + 1); d != -1; d = bc.next(d + 1)) {
                    if (d == a || g.adjacent(c, d)) continue;
                    Bitset be = g.neighbors(c);
                    be &= g.neighbors(d);
                    be.subtract(g.neighbors(a));
                    be.subtract(g.neighbors(b));
                    for (int e : be) {
                        if (e == a || e == b) continue;
                        return Witness{WitnessKind::banner, {a, b, c, d, e}};
                    }
                }
            }
        }
    return std::nullopt;
}

} // namespace dohf
