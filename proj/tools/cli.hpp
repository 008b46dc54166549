#pragma once

// Command-line front end. Exit codes:
//   detect    0 witness found for every graph, 1 some graph exhausted, 2 bad input
//   check     0 witness valid, 1 witness invalid, 2 bad input
//   construct 0 ok, 2 unknown construction or bad parameters
//   verify    0 complete with no counterexamples, 1 otherwise, 3 ceiling exceeded
//   analyze   0 ok, 2 bad input
// Usage errors exit 2 for every subcommand.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclemod/bounds.hpp"
#include "cyclemod/connectivity.hpp"
#include "cyclemod/constructions.hpp"
#include "cyclemod/cycles.hpp"
#include "cyclemod/io.hpp"
#include "cyclemod/lab.hpp"

namespace cyclemod::cli {

enum Exit { ok = 0, negative = 1, bad_input = 2, over_ceiling = 3 };

struct Input {
    std::string path;
    std::string g6;

    void add_to(CLI::App* cmd) {
        cmd->add_option("input", path, "graph file (edge list or graph6), or - for standard input");
        cmd->add_option("--g6", g6, "inline graph6 string");
    }

    void validate() const {
        if (path.empty() == g6.empty())
            throw CLI::ValidationError("input", "give exactly one of a file path, '-', or --g6");
    }

    bool from_stdin() const { return path == "-"; }

    /// The whole input as text.
    std::string text(std::istream& in) const {
        if (!g6.empty())
            return g6;
        if (from_stdin())
            return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
        std::ifstream f(path, std::ios::binary);
        if (!f)
            throw format_error("cannot open " + path, 0);
        return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
    }

    Graph graph(std::istream& in) const {
        if (!g6.empty())
            return parse_graph6(g6);
        return parse_graph_auto(text(in));
    }
};

inline int detect(const Input& input, unsigned ell, unsigned k, std::istream& in, std::ostream& out) {
    const ResidueClass rc(ell, k);
    std::vector<Graph> graphs;
    if (input.from_stdin()) {
        std::istringstream lines(input.text(in));
        std::string line;
        while (std::getline(lines, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            graphs.push_back(parse_graph6(line));
        }
    } else {
        graphs.push_back(input.graph(in));
    }
    int code = ok;
    for (const Graph& g : graphs) {
        if (auto w = find_cycle_mod(g, rc)) {
            out << format_witness(*w) << '\n';
        } else {
            out << "exhausted\n";
            code = negative;
        }
    }
    return code;
}

inline int check(const Input& input, const std::string& witness, std::istream& in, std::ostream& out) {
    const Graph g = input.graph(in);
    const CycleWitness w = parse_witness(witness);
    if (check_witness(g, w)) {
        out << "valid\n";
        return ok;
    }
    out << "invalid\n";
    return negative;
}

struct ConstructParams {
    std::string name;
    std::size_t n = 0, a = 0, b = 0, k = 0;
    int which = 0;
    std::string format = "g6";
};

inline std::optional<Graph> construct_graph(const ConstructParams& p) {
    const std::string& s = p.name;
    if (s == "petersen")
        return petersen();
    if (s == "complete")
        return complete(p.n);
    if (s == "bipartite")
        return complete_bipartite(p.a, p.b);
    if (s == "cycle")
        return cycle_graph(p.n);
    if (s == "path")
        return path_graph(p.n);
    if (s == "prism")
        return prism(p.n);
    if (s == "kneser")
        return kneser(p.n, p.k);
    if (s == "l")
        return l_graph(p.which);
    if (s == "gn")
        return extremal_family(p.n).first;
    return std::nullopt;
}

inline int construct(const ConstructParams& p, std::ostream& out, std::ostream& err) {
    const auto g = construct_graph(p);
    if (!g) {
        err << "unknown construction '" << p.name << "'\n";
        return bad_input;
    }
    if (p.format == "edges")
        out << emit_edge_list(*g);
    else
        out << emit_graph6(*g) << '\n';
    return ok;
}

inline int verify(const std::string& theorem, std::size_t n, std::size_t max_n, unsigned jobs, bool records,
                  std::ostream& out, std::ostream& err) {
    SearchReport r;
    if (theorem == "main")
        r = verify_main_theorem(n, jobs);
    else if (theorem == "tightness")
        r = verify_tightness(n, jobs);
    else if (theorem == "uniqueness10")
        r = verify_extremal_uniqueness_n10(jobs);
    else if (theorem == "dean")
        r = verify_dean_corpus(max_n, jobs);
    else if (theorem == "lemma6")
        r = lemma6_scan(max_n, jobs);
    else if (theorem == "table1")
        r = verify_table(jobs);
    else {
        err << "unknown verification '" << theorem << "'\n";
        return bad_input;
    }
    if (records)
        out << to_record(r).dump() << '\n';
    else
        out << to_text(r);
    return r.passed() ? ok : negative;
}

inline int analyze(const Input& input, bool records, std::istream& in, std::ostream& out) {
    const Graph g = input.graph(in);
    const auto stats = degree_stats(g);
    const auto gi = girth(g);
    const auto blocks = block_decomposition(g);
    nlohmann::json j;
    j["n"] = g.order();
    j["edges"] = g.edge_count();
    j["graph6"] = emit_graph6(g);
    j["degree_sequence"] = stats.sequence;
    j["min_degree"] = stats.min_defined ? nlohmann::json(stats.min_degree) : nlohmann::json(nullptr);
    j["max_degree"] = stats.max_degree;
    j["girth"] = gi ? nlohmann::json(*gi) : nlohmann::json(nullptr);
    j["connected"] = is_connected(g);
    j["two_connected"] = is_2_connected(g);
    j["blocks"] = blocks.blocks.size();
    j["cut_vertices"] = blocks.cut_vertices.ids();
    if (g.order() > 0)
        j["edge_bound"] = edge_bound(g.order()).bound;
    for (unsigned k = 2; k <= 4; ++k)
        j["residues_mod_" + std::to_string(k)] = residue_spectrum(g, k);
    if (records) {
        out << j.dump() << '\n';
        return ok;
    }
    for (const auto& [key, value] : j.items())
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    return ok;
}

/// Runs one command line (without the program name).
inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cycles of prescribed length modulo k: detection, certificates, constructions, verification"};
    app.require_subcommand(1);

    Input input;
    unsigned ell = 1, k = 3;
    auto* detect_cmd = app.add_subcommand("detect", "find a cycle of length ell mod k, or prove there is none");
    input.add_to(detect_cmd);
    detect_cmd->add_option("--ell", ell, "residue")->capture_default_str();
    detect_cmd->add_option("--k", k, "modulus")->capture_default_str();

    std::string witness;
    auto* check_cmd = app.add_subcommand("check", "validate a witness line against a graph");
    input.add_to(check_cmd);
    check_cmd->add_option("--witness", witness, "witness line 'cycle k=.. ell=.. v=..'")->required();

    ConstructParams cp;
    auto* construct_cmd = app.add_subcommand("construct", "emit a named graph");
    construct_cmd->add_option("name", cp.name,
                              "petersen | complete | bipartite | cycle | path | prism | kneser | l | gn")
        ->required();
    construct_cmd->add_option("--n", cp.n, "order (complete, cycle, path, gn), prism length, kneser ground set");
    construct_cmd->add_option("--a", cp.a, "first side of a complete bipartite graph");
    construct_cmd->add_option("--b", cp.b, "second side of a complete bipartite graph");
    construct_cmd->add_option("--k", cp.k, "kneser subset size");
    construct_cmd->add_option("--which", cp.which, "L-graph index 1, 2 or 3");
    construct_cmd->add_option("--format", cp.format, "g6 or edges")
        ->check(CLI::IsMember({"g6", "edges"}))
        ->capture_default_str();

    std::string theorem;
    std::size_t n = 0, max_n = 7;
    unsigned jobs = 1;
    bool records = false;
    auto* verify_cmd = app.add_subcommand("verify", "run an exhaustive verification and print a report");
    verify_cmd->add_option("theorem", theorem, "main | tightness | uniqueness10 | dean | lemma6 | table1")
        ->required();
    verify_cmd->add_option("--n", n, "order for main and tightness");
    verify_cmd->add_option("--max-n", max_n, "largest order for dean and lemma6")->capture_default_str();
    verify_cmd->add_option("--jobs", jobs, "worker threads, 0 for all cores")->capture_default_str();
    verify_cmd->add_flag("--records", records, "one JSON record instead of text");

    auto* analyze_cmd = app.add_subcommand("analyze", "print structural statistics of a graph");
    input.add_to(analyze_cmd);
    analyze_cmd->add_flag("--records", records, "one JSON record instead of text");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (*detect_cmd || *check_cmd || *analyze_cmd)
            input.validate();
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::Error& e) {
        app.exit(e, out, err);
        return bad_input;
    }

    try {
        if (*detect_cmd)
            return detect(input, ell, k, in, out);
        if (*check_cmd)
            return check(input, witness, in, out);
        if (*construct_cmd)
            return construct(cp, out, err);
        if (*verify_cmd) {
            if ((theorem == "main" || theorem == "tightness") && n == 0) {
                err << "verify " << theorem << " needs --n\n";
                return bad_input;
            }
            return verify(theorem, n, max_n, jobs, records, out, err);
        }
        if (*analyze_cmd)
            return analyze(input, records, in, out);
    } catch (const ceiling_exceeded& e) {
        err << "ceiling exceeded: " << e.what() << '\n';
        return over_ceiling;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    }
    return bad_input;
}

} // namespace cyclemod::cli
