#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"

namespace dohf {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

[[noreturn]] inline void parse_fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

} // namespace detail

// DIMACS .col: 'c' comments, one 'p edge <n> <m>' header, 'e <u> <v>'
// lines with 1-based endpoints. Duplicate edges collapse with a warning;
// self-loops, out-of-range endpoints and malformed lines are errors.
inline Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr) {
    Graph g;
    bool has_header = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank
        if (tag == "c") continue;
        if (tag == "p") {
            if (has_header) detail::parse_fail(lineno, "second problem line");
            std::string fmt;
            long long n = -1, m = -1;
            if (!(ls >> fmt >> n >> m) || fmt != "edge")
                detail::parse_fail(lineno, "expected 'p edge <n> <m>'");
            if (n < 0 || m < 0) detail::parse_fail(lineno, "negative size");
            std::string extra;
            if (ls >> extra) detail::parse_fail(lineno, "trailing tokens on problem line");
            g = Graph(static_cast<int>(n));
            has_header = true;
            continue;
        }
        if (tag == "e") {
            if (!has_header) detail::parse_fail(lineno, "edge before problem line");
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) detail::parse_fail(lineno, "expected 'e <u> <v>'");
            std::string extra;
            if (ls >> extra) detail::parse_fail(lineno, "trailing tokens on edge line");
            if (u < 1 || v < 1 || u > g.n() || v > g.n())
                detail::parse_fail(lineno, "endpoint out of range");
            if (u == v) detail::parse_fail(lineno, "self-loop");
            int a = static_cast<int>(u) - 1, b = static_cast<int>(v) - 1;
            if (g.adjacent(a, b)) {
                if (warnings)
                    warnings->push_back("line " + std::to_string(lineno) +
                                        ": duplicate edge collapsed");
                continue;
            }
            g.add_edge(a, b);
            continue;
        }
        detail::parse_fail(lineno, "unknown line type '" + tag + "'");
    }
    if (!has_header) throw ParseError("missing problem line");
    return g;
}

inline Graph parse_dimacs(const std::string& text, std::vector<std::string>* warnings = nullptr) {
    std::istringstream in(text);
    return parse_dimacs(in, warnings);
}

// edges normalized and sorted; output reparses to an equal graph
inline std::string serialize_dimacs(const Graph& g) {
    std::string out = "p edge " + std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
    for (auto [u, v] : g.edges())
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

} // namespace dohf
