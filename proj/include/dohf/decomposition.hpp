#pragma once

#include <string>

#include "graph.hpp"
#include "oracles.hpp"
#include "recognition.hpp"

namespace dohf {

// Structure cases for a connected (dart, odd hole)-free graph, in
// precedence order: a disconnected graph splits as a CoJoin; a Berge
// graph is a Perfect leaf; without a stable triple the graph is an
// AlphaLe2 leaf; otherwise the co-triangle vertices T join to the rest,
// which holds an odd antihole of length >= 7.
enum class DecompCase { perfect, alpha_le_2, cojoin, join_partition };

inline const char* to_string(DecompCase c) {
    switch (c) {
        case DecompCase::perfect: return "perfect";
        case DecompCase::alpha_le_2: return "alpha_le_2";
        case DecompCase::cojoin: return "cojoin";
        case DecompCase::join_partition: return "join_partition";
    }
    return "?";
}

// All vertex sets are in the labels of the root graph. For cojoin,
// part_a/part_b are the split sides; for join_partition, part_a = T (the
// co-triangle vertices) and part_b = A u R with the antihole witness
// inside part_b.
struct DecompositionNode {
    DecompCase kind = DecompCase::perfect;
    VertexSet vertices;
    VertexSet part_a, part_b;
    std::optional<Witness> antihole;
    std::vector<DecompositionNode> children;
    bool is_leaf() const {
        return kind == DecompCase::perfect || kind == DecompCase::alpha_le_2;
    }
    bool operator==(const DecompositionNode&) const = default;
};

struct DecomposeOptions {
    bool check_membership = true;
    std::uint64_t budget = default_search_budget;
};

namespace detail {

inline VertexSet map_to_parent(const std::vector<int>& to_parent, const VertexSet& local) {
    VertexSet out;
    out.reserve(local.size());
    for (int v : local) out.push_back(to_parent[v]);
    std::sort(out.begin(), out.end());
    return out;
}

// Classifies G[vs]; no recursion into children.
inline DecompositionNode classify(const Graph& root, const VertexSet& vs, std::uint64_t budget) {
    auto ind = induced(root, vs);
    const Graph& h = ind.graph;

    DecompositionNode node;
    node.vertices = ind.to_parent;

    if (auto split = cojoin_split(h)) {
        node.kind = DecompCase::cojoin;
        node.part_a = map_to_parent(ind.to_parent, split->a);
        node.part_b = map_to_parent(ind.to_parent, split->b);
        return node;
    }
    if (is_berge(h, budget)) {
        node.kind = DecompCase::perfect;
        return node;
    }
    VertexSet t = co_triangle_vertices(h);
    if (t.empty()) {
        node.kind = DecompCase::alpha_le_2;
        return node;
    }
    HoleSearch ah = find_odd_antihole(h, 7, budget);
    if (ah.status == SearchStatus::out_of_budget)
        throw BudgetError("decompose: antihole search exceeded budget");
    if (ah.status == SearchStatus::absent) {
        // non-Berge without an antihole of length >= 7 forces an odd hole
        // (a 5-antihole is a 5-hole); only non-members land here
        HoleSearch oh = find_odd_hole(h, budget);
        if (oh.status == SearchStatus::found) {
            Witness w = *oh.witness; // cyclic order: remap labels positionally
            for (int& v : w.vertices) v = ind.to_parent[v];
            throw NotInClassError(w);
        }
        throw BudgetError("decompose: odd hole search exceeded budget");
    }

    node.kind = DecompCase::join_partition;
    node.part_a = map_to_parent(ind.to_parent, t);
    Bitset in_t(h.n());
    for (int v : t) in_t.set(v);
    VertexSet ar;
    for (int v = 0; v < h.n(); ++v)
        if (!in_t.test(v)) ar.push_back(v);
    node.part_b = map_to_parent(ind.to_parent, ar);
    Witness aw = *ah.witness;
    for (int& v : aw.vertices) v = ind.to_parent[v];
    node.antihole = aw;
    return node;
}

inline DecompositionNode decompose_rec(const Graph& root, const VertexSet& vs,
                                       std::uint64_t budget) {
    DecompositionNode node = classify(root, vs, budget);
    if (!node.is_leaf()) {
        node.children.push_back(decompose_rec(root, node.part_a, budget));
        node.children.push_back(decompose_rec(root, node.part_b, budget));
    }
    return node;
}

} // namespace detail

// One level of the decomposition; children stay empty.
inline DecompositionNode decompose_step(const Graph& g, const DecomposeOptions& opt = {}) {
    if (opt.check_membership) ensure_in_class(g, opt.budget);
    return detail::classify(g, g.vertices(), opt.budget);
}

// Full tree. Split cases recurse on (part_a, part_b); both recursions
// terminate in Perfect or AlphaLe2 leaves for class members. With
// check_membership off the tree is built on a best-effort basis and
// verify_tree is the safety net.
inline DecompositionNode decompose_tree(const Graph& g, const DecomposeOptions& opt = {}) {
    if (opt.check_membership) ensure_in_class(g, opt.budget);
    return detail::decompose_rec(g, g.vertices(), opt.budget);
}

// Antihole disjoint from T, and every vertex of T adjacent to every
// antihole vertex.
inline bool lemma_checks(const Graph& g, const Witness& antihole, const VertexSet& t) {
    for (int v : t)
        for (int a : antihole.vertices) {
            if (v == a) return false;
            if (!g.adjacent(v, a)) return false;
        }
    return true;
}

struct NodeCheck {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

namespace detail {

inline NodeCheck fail(const std::string& why) { return {false, why}; }

inline bool is_partition(const VertexSet& whole, const VertexSet& a, const VertexSet& b) {
    VertexSet merged(a);
    merged.insert(merged.end(), b.begin(), b.end());
    std::sort(merged.begin(), merged.end());
    return merged == whole; // whole is sorted and duplicate-free
}

} // namespace detail

// Checks one node against the graph through the oracle routes:
// brute_alpha for the AlphaLe2 side, witness_ok for the antihole, the
// definition checks for the split edges.
inline NodeCheck verify_node(const Graph& g, const DecompositionNode& node,
                             std::uint64_t budget = default_search_budget) {
    for (int v : node.vertices)
        if (v < 0 || v >= g.n()) return detail::fail("vertex out of range");
    if (!std::is_sorted(node.vertices.begin(), node.vertices.end()) ||
        std::adjacent_find(node.vertices.begin(), node.vertices.end()) != node.vertices.end())
        return detail::fail("vertices not sorted unique");

    switch (node.kind) {
        case DecompCase::perfect: {
            if (!is_berge(induced(g, node.vertices).graph, budget))
                return detail::fail("perfect leaf is not Berge");
            return {};
        }
        case DecompCase::alpha_le_2: {
            if (brute_alpha(induced(g, node.vertices).graph) > 2)
                return detail::fail("alpha_le_2 leaf has a stable triple");
            return {};
        }
        case DecompCase::cojoin: {
            if (node.part_a.empty() || node.part_b.empty())
                return detail::fail("cojoin side empty");
            if (!detail::is_partition(node.vertices, node.part_a, node.part_b))
                return detail::fail("cojoin parts do not partition the node");
            if (!is_cojoin(g, node.part_a, node.part_b))
                return detail::fail("edge between cojoin sides");
            return {};
        }
        case DecompCase::join_partition: {
            if (node.part_a.empty() || node.part_b.empty())
                return detail::fail("join side empty");
            if (!detail::is_partition(node.vertices, node.part_a, node.part_b))
                return detail::fail("join parts do not partition the node");
            if (!is_join(g, node.part_a, node.part_b))
                return detail::fail("missing edge between T and the rest");
            if (!node.antihole) return detail::fail("join node without antihole");
            if (node.antihole->kind != WitnessKind::odd_antihole ||
                node.antihole->vertices.size() < 7 || !witness_ok(g, *node.antihole))
                return detail::fail("invalid antihole witness");
            for (int v : node.antihole->vertices)
                if (!std::binary_search(node.part_b.begin(), node.part_b.end(), v))
                    return detail::fail("antihole leaves the A u R side");
            if (brute_alpha(induced(g, node.part_b).graph) != 2)
                return detail::fail("alpha of A u R is not 2");
            if (!is_berge(induced(g, node.part_a).graph, budget))
                return detail::fail("T side is not Berge");
            if (!lemma_checks(g, *node.antihole, node.part_a))
                return detail::fail("T is not complete to the antihole");
            return {};
        }
    }
    return detail::fail("unknown case");
}

namespace detail {

inline NodeCheck verify_rec(const Graph& g, const DecompositionNode& node, std::uint64_t budget) {
    NodeCheck c = verify_node(g, node, budget);
    if (!c) return c;
    if (node.is_leaf()) {
        if (!node.children.empty()) return fail("leaf with children");
        return {};
    }
    if (node.children.size() != 2) return fail("split node without two children");
    if (node.children[0].vertices != node.part_a || node.children[1].vertices != node.part_b)
        return fail("children do not cover the split parts");
    c = verify_rec(g, node.children[0], budget);
    if (!c) return c;
    return verify_rec(g, node.children[1], budget);
}

} // namespace detail

// Recursive verify_node plus structural consistency; the root must cover
// the whole graph.
inline NodeCheck verify_tree(const Graph& g, const DecompositionNode& root,
                             std::uint64_t budget = default_search_budget) {
    if (root.vertices != g.vertices()) return detail::fail("root does not cover the graph");
    return detail::verify_rec(g, root, budget);
}

} // namespace dohf
