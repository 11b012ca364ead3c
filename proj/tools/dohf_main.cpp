// dohf: structural toolkit for (dart, odd hole)-free graphs.
//
// Subcommands cover recognition, the decomposition tree, optimal coloring,
// maximum stable sets, perfect division, 2-divisibility checking,
// brute-force oracles, random generation, and the Poljak subdivision.
// Graphs travel as DIMACS .col (1-based vertices); --json switches the
// report to a single structured document on stdout.
//
// Exit codes: 0 ok, 1 negative answer (not in class, not divisible, no
// graph found), 2 error or inconclusive (bad input, budget exceeded).

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <dohf/dohf.hpp>

namespace {

using nlohmann::ordered_json;
using namespace dohf;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_error = 2;

struct CommonArgs {
    std::string input = "-";
    std::string format = "dimacs";
    bool json = false;
    std::uint64_t budget = default_search_budget;
    bool skip_membership = false;
};

// payload + text rendering + exit code for one command run
struct Outcome {
    ordered_json result;
    std::string human;
    int code = exit_ok;
};

ordered_json vertices_json(const VertexSet& vs) {
    ordered_json arr = ordered_json::array();
    for (int v : vs) arr.push_back(v + 1);
    return arr;
}

ordered_json witness_json(const Witness& w) {
    ordered_json j;
    j["kind"] = to_string(w.kind);
    j["vertices"] = vertices_json(w.vertices);
    return j;
}

std::string vertices_text(const VertexSet& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(vs[i] + 1);
    }
    return out;
}

Graph load_graph(const CommonArgs& args, std::vector<std::string>& warnings) {
    if (args.format != "dimacs") throw ParseError("unsupported format: " + args.format);
    if (args.input == "-") return parse_dimacs(std::cin, &warnings);
    std::ifstream in(args.input);
    if (!in) throw ParseError("cannot open " + args.input);
    return parse_dimacs(in, &warnings);
}

// ---- command handlers ------------------------------------------------

Outcome run_recognize(const Graph& g, std::uint64_t budget, int min_antihole_len) {
    Outcome out;
    ClassReport r = in_class(g, budget);
    for (const auto& w : {r.dart, r.odd_hole})
        if (w && !witness_ok(g, *w)) throw InternalError("recognize: witness failed validation");
    out.result["member"] = r.member();
    out.result["dart"] = r.dart ? witness_json(*r.dart) : ordered_json(nullptr);
    out.result["odd_hole"] = r.odd_hole ? witness_json(*r.odd_hole) : ordered_json(nullptr);
    out.human = std::string("member: ") + (r.member() ? "true" : "false") + "\n";
    if (r.dart) out.human += "dart: " + vertices_text(r.dart->vertices) + "\n";
    if (r.odd_hole) out.human += "odd_hole: " + vertices_text(r.odd_hole->vertices) + "\n";
    if (min_antihole_len > 0) {
        HoleSearch ah = find_odd_antihole(g, min_antihole_len, budget);
        if (ah.status == SearchStatus::out_of_budget)
            throw BudgetError("recognize: antihole search exceeded budget");
        if (ah.witness && !witness_ok(g, *ah.witness))
            throw InternalError("recognize: witness failed validation");
        out.result["odd_antihole"] =
            ah.witness ? witness_json(*ah.witness) : ordered_json(nullptr);
        if (ah.witness) out.human += "odd_antihole: " + vertices_text(ah.witness->vertices) + "\n";
    }
    out.code = r.member() ? exit_ok : exit_negative;
    return out;
}

ordered_json tree_json(const DecompositionNode& node) {
    ordered_json j;
    j["case"] = to_string(node.kind);
    j["vertices"] = vertices_json(node.vertices);
    if (!node.is_leaf()) {
        j["part_a"] = vertices_json(node.part_a);
        j["part_b"] = vertices_json(node.part_b);
    }
    if (node.antihole) j["antihole"] = witness_json(*node.antihole);
    if (!node.children.empty()) {
        j["children"] = ordered_json::array();
        for (const auto& c : node.children) j["children"].push_back(tree_json(c));
    }
    return j;
}

void tree_text(const DecompositionNode& node, int depth, std::string& out) {
    out += std::string(2 * depth, ' ') + to_string(node.kind) + ": " +
           vertices_text(node.vertices) + "\n";
    if (node.antihole)
        out += std::string(2 * depth, ' ') + "antihole: " +
               vertices_text(node.antihole->vertices) + "\n";
    for (const auto& c : node.children) tree_text(c, depth + 1, out);
}

Outcome run_decompose(const Graph& g, const CommonArgs& args) {
    Outcome out;
    DecomposeOptions opt{!args.skip_membership, args.budget};
    DecompositionNode tree = decompose_tree(g, opt);
    if (NodeCheck c = verify_tree(g, tree, args.budget); !c)
        throw InternalError("decompose: tree failed verification: " + c.reason);
    out.result["tree"] = tree_json(tree);
    tree_text(tree, 0, out.human);
    return out;
}

Outcome run_color(const Graph& g, const CommonArgs& args) {
    Outcome out;
    Coloring c = color(g, {!args.skip_membership, args.budget});
    if (!verify_coloring(g, c)) throw InternalError("color: coloring failed verification");
    out.result["num_colors"] = c.num_colors;
    out.result["colors"] = c.assignment; // position i = vertex i+1
    out.human = "num_colors: " + std::to_string(c.num_colors) + "\n";
    for (int v = 0; v < g.n(); ++v)
        out.human += std::to_string(v + 1) + " " + std::to_string(c.assignment[v]) + "\n";
    return out;
}

Outcome run_mis(const Graph& g, const CommonArgs& args) {
    Outcome out;
    StableSetResult r = max_stable_set(g, {!args.skip_membership, args.budget});
    if (!is_stable_set(g, r.set) || static_cast<int>(r.set.size()) != r.size)
        throw InternalError("mis: stable set failed verification");
    out.result["size"] = r.size;
    out.result["anchor"] = r.anchor ? ordered_json(*r.anchor + 1) : ordered_json(nullptr);
    out.result["vertices"] = vertices_json(r.set);
    out.human = "size: " + std::to_string(r.size) + "\n" +
                "vertices: " + vertices_text(r.set) + "\n";
    return out;
}

Outcome run_divide(const Graph& g, const CommonArgs& args) {
    Outcome out;
    DivideOptions opt;
    opt.check_membership = !args.skip_membership;
    opt.search_budget = args.budget;
    opt.subset_budget = args.budget;
    Division d = perfect_division(g, opt);
    if (!check_division(g, d, args.budget))
        throw InternalError("divide: division failed verification");
    out.result["x"] = vertices_json(d.x);
    out.result["rest"] = vertices_json(d.rest);
    out.human = "x: " + vertices_text(d.x) + "\nrest: " + vertices_text(d.rest) + "\n";
    return out;
}

Outcome run_check2div(const Graph& g, const CommonArgs& args) {
    Outcome out;
    DivisibilityCheck c = is_2_divisible(g, args.budget);
    out.result["two_divisible"] = c.ok;
    out.human = std::string("two_divisible: ") + (c.ok ? "true" : "false") + "\n";
    if (!c.ok) {
        out.result["counterexample"] = vertices_json(c.counterexample);
        out.human += "counterexample: " + vertices_text(c.counterexample) + "\n";
        out.code = exit_negative;
    }
    return out;
}

Outcome run_oracle(const Graph& g, int cap) {
    Outcome out;
    int chi_cap = cap > 0 ? cap : 16;
    int clique_cap = cap > 0 ? cap : 20;
    OracleReport r = oracle_report(g, chi_cap, clique_cap);
    out.result["chi"] = r.chi;
    out.result["omega"] = r.omega;
    out.result["alpha"] = r.alpha;
    out.result["girth"] = r.girth ? ordered_json(*r.girth) : ordered_json(nullptr);
    out.human = "chi: " + std::to_string(r.chi) + "\nomega: " + std::to_string(r.omega) +
                "\nalpha: " + std::to_string(r.alpha) + "\ngirth: " +
                (r.girth ? std::to_string(*r.girth) : "none") + "\n";
    return out;
}

ordered_json graph_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.n();
    j["m"] = g.m();
    j["edges"] = ordered_json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u + 1, v + 1});
    return j;
}

Outcome run_poljak(const Graph& g) {
    Outcome out;
    Graph f = poljak_subdivide(g);
    if (f.n() != g.n() + 2 * g.m() || f.m() != 3 * g.m() ||
        (f.m() > 0 && girth(f).value_or(4) < 4))
        throw InternalError("poljak: output failed verification");
    out.result = graph_json(f);
    out.human = serialize_dimacs(f);
    return out;
}

Outcome run_gen(int n, double p, std::uint64_t seed, bool in_class_only, int max_tries,
                std::uint64_t budget) {
    Outcome out;
    if (in_class_only) {
        auto g = random_class_graph(n, p, seed, max_tries, budget);
        if (!g) {
            out.code = exit_negative;
            out.result["found"] = false;
            out.human = "no (dart, odd hole)-free graph within " + std::to_string(max_tries) +
                        " tries\n";
            return out;
        }
        out.result["found"] = true;
        out.result.update(graph_json(*g));
        out.human = serialize_dimacs(*g);
        return out;
    }
    Graph g = random_graph(n, p, seed);
    out.result["found"] = true;
    out.result.update(graph_json(g));
    out.human = serialize_dimacs(g);
    return out;
}

// ---- envelope --------------------------------------------------------

int emit(const std::string& command, const Graph* g, const Outcome& out, bool json,
         const std::string& status, const ordered_json& error, double ms) {
    if (json) {
        ordered_json doc;
        doc["schema_version"] = 1;
        doc["command"] = command;
        if (g) {
            doc["input"]["n"] = g->n();
            doc["input"]["m"] = g->m();
        }
        doc["status"] = status;
        if (!out.result.is_null() && status == "ok") doc["result"] = out.result;
        if (!error.is_null()) doc["error"] = error;
        doc["timing_ms"] = ms;
        std::cout << doc.dump(2) << "\n";
    } else {
        if (!error.is_null()) {
            std::cerr << "error: " << error["reason"].get<std::string>() << "\n";
            if (error.contains("witness"))
                std::cerr << "witness: " << error["witness"]["kind"].get<std::string>() << " "
                          << error["witness"]["vertices"].dump() << "\n";
        }
        std::cout << out.human;
    }
    return out.code;
}

int run_command(const std::string& command, const Graph* g, bool json,
                const std::function<Outcome()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    std::string status = "ok";
    ordered_json error;
    try {
        out = fn();
    } catch (const NotInClassError& e) {
        status = "error";
        error["reason"] = e.what();
        error["witness"] = witness_json(e.witness);
        out.code = exit_negative;
    } catch (const PreconditionError& e) {
        status = "error";
        error["reason"] = e.what();
        error["witness"] = witness_json(e.witness);
        out.code = exit_error;
    } catch (const BudgetError& e) {
        status = "inconclusive";
        error["reason"] = e.what();
        out.code = exit_error;
    } catch (const ParseError& e) {
        status = "error";
        error["reason"] = e.what();
        out.code = exit_error;
    } catch (const std::exception& e) {
        status = "error";
        error["reason"] = e.what();
        out.code = exit_error;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    return emit(command, g, out, json, status, error, ms);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"structural toolkit for (dart, odd hole)-free graphs"};
    app.require_subcommand(1);

    auto add_common = [](CLI::App* cmd, CommonArgs& args, bool membership_flag) {
        cmd->add_option("input", args.input, "DIMACS file, or - for stdin")->capture_default_str();
        cmd->add_option("--format", args.format, "input format")
            ->check(CLI::IsMember({"dimacs"}))
            ->capture_default_str();
        cmd->add_flag("--json", args.json, "emit a JSON report");
        cmd->add_option("--budget", args.budget, "search budget (path extensions / subsets)")
            ->capture_default_str();
        if (membership_flag)
            cmd->add_flag("--skip-membership", args.skip_membership,
                          "skip the class membership check");
    };

    CommonArgs rec_args, dec_args, col_args, mis_args, div_args, two_args, ora_args, pol_args;
    int min_antihole_len = 0;
    int oracle_cap = 0;

    auto* rec = app.add_subcommand("recognize", "class membership with witnesses");
    add_common(rec, rec_args, false);
    rec->add_option("--min-antihole-len", min_antihole_len,
                    "also search for an odd antihole of at least this length (5 or 7)")
        ->check(CLI::IsMember({5, 7}));

    auto* dec = app.add_subcommand("decompose", "decomposition tree");
    add_common(dec, dec_args, true);

    auto* col = app.add_subcommand("color", "minimum coloring");
    add_common(col, col_args, true);

    auto* mis = app.add_subcommand("mis", "maximum stable set");
    add_common(mis, mis_args, true);

    auto* div = app.add_subcommand("divide", "perfect division");
    add_common(div, div_args, true);

    auto* two = app.add_subcommand("check2div", "2-divisibility check");
    add_common(two, two_args, false);

    auto* ora = app.add_subcommand("oracle", "brute-force chi, omega, alpha, girth");
    add_common(ora, ora_args, false);
    ora->add_option("--cap", oracle_cap, "raise the oracle vertex caps");

    auto* pol = app.add_subcommand("poljak", "subdivide every edge twice");
    add_common(pol, pol_args, false);

    auto* gen = app.add_subcommand("gen", "random graph generator");
    int gen_n = 0;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 1;
    bool gen_in_class = false;
    int gen_max_tries = 100;
    bool gen_json = false;
    std::uint64_t gen_budget = default_search_budget;
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--p", gen_p, "edge probability")->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    gen->add_option("--seed", gen_seed, "PRNG seed")->capture_default_str();
    gen->add_flag("--in-class", gen_in_class, "rejection-sample a class member");
    gen->add_option("--max-tries", gen_max_tries, "rejection sampling attempts")
        ->capture_default_str();
    gen->add_flag("--json", gen_json, "emit a JSON report");
    gen->add_option("--budget", gen_budget, "membership search budget")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_error;
    }

    if (*gen)
        return run_command("gen", nullptr, gen_json, [&] {
            return run_gen(gen_n, gen_p, gen_seed, gen_in_class, gen_max_tries, gen_budget);
        });

    struct Cmd {
        CLI::App* sub;
        const char* name;
        CommonArgs* args;
    };
    const Cmd cmds[] = {{rec, "recognize", &rec_args}, {dec, "decompose", &dec_args},
                        {col, "color", &col_args},     {mis, "mis", &mis_args},
                        {div, "divide", &div_args},    {two, "check2div", &two_args},
                        {ora, "oracle", &ora_args},    {pol, "poljak", &pol_args}};
    for (const Cmd& c : cmds) {
        if (!*c.sub) continue;
        Graph g;
        std::vector<std::string> warnings;
        try {
            g = load_graph(*c.args, warnings);
        } catch (const ParseError& e) {
            ordered_json error;
            error["reason"] = e.what();
            Outcome out;
            out.code = exit_error;
            return emit(c.name, nullptr, out, c.args->json, "error", error, 0.0);
        }
        for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
        const std::string name = c.name;
        return run_command(name, &g, c.args->json, [&]() -> Outcome {
            if (name == "recognize") return run_recognize(g, c.args->budget, min_antihole_len);
            if (name == "decompose") return run_decompose(g, *c.args);
            if (name == "color") return run_color(g, *c.args);
            if (name == "mis") return run_mis(g, *c.args);
            if (name == "divide") return run_divide(g, *c.args);
            if (name == "check2div") return run_check2div(g, *c.args);
            if (name == "oracle") return run_oracle(g, oracle_cap);
            return run_poljak(g);
        });
    }
    return exit_error;
}
