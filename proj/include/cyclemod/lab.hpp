#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cyclemod/bounds.hpp"
#include "cyclemod/canonical.hpp"
#include "cyclemod/classify.hpp"
#include "cyclemod/constructions.hpp"
#include "cyclemod/cycles.hpp"
#include "cyclemod/enumerate.hpp"
#include "cyclemod/io.hpp"
#include "cyclemod/lemmas.hpp"
#include "cyclemod/parallel.hpp"

namespace cyclemod {

struct SearchReport {
    std::string name;
    std::optional<std::size_t> n;
    std::optional<std::size_t> e;
    std::string residue = "1 mod 3";
    /// Reductions and search mode, stated so the verified claim is exact.
    std::vector<std::string> reductions;
    std::uint64_t examined = 0;
    /// Sorted graph6 strings.
    std::vector<std::string> counterexamples;
    bool complete = false;
    std::int64_t elapsed_ms = 0;
    std::vector<std::pair<std::string, std::string>> extras;

    bool passed() const { return complete && counterexamples.empty(); }
};

inline nlohmann::json to_record(const SearchReport& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["n"] = r.n ? nlohmann::json(*r.n) : nlohmann::json(nullptr);
    j["e"] = r.e ? nlohmann::json(*r.e) : nlohmann::json(nullptr);
    j["residue"] = r.residue;
    j["reductions"] = r.reductions;
    j["examined"] = r.examined;
    j["counterexamples"] = r.counterexamples;
    j["complete"] = r.complete;
    j["elapsed_ms"] = r.elapsed_ms;
    nlohmann::json extras = nlohmann::json::object();
    for (const auto& [k, v] : r.extras)
        extras[k] = v;
    j["extras"] = extras;
    return j;
}

inline std::string to_text(const SearchReport& r) {
    std::ostringstream os;
    auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
    os << "verify " << r.name << '\n';
    os << "  n: " << opt(r.n) << '\n';
    os << "  e: " << opt(r.e) << '\n';
    os << "  residue: " << r.residue << '\n';
    os << "  reductions:";
    if (r.reductions.empty())
        os << " none";
    for (std::size_t i = 0; i < r.reductions.size(); ++i)
        os << (i ? ", " : " ") << r.reductions[i];
    os << '\n';
    os << "  examined: " << r.examined << '\n';
    os << "  counterexamples: " << r.counterexamples.size() << '\n';
    for (const auto& c : r.counterexamples)
        os << "    " << c << '\n';
    os << "  complete: " << (r.complete ? "yes" : "no") << '\n';
    os << "  elapsed_ms: " << r.elapsed_ms << '\n';
    for (const auto& [k, v] : r.extras)
        os << "  " << k << ": " << v << '\n';
    os << "  result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
    return os.str();
}

namespace detail {

class Stopwatch {
public:
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline bool has_one_mod_three(const Graph& g) { return find_cycle_mod(g, ResidueClass(1, 3)).has_value(); }

inline bool free_through(const Graph& g, Vertex v) {
    return !find_cycle_mod_through(g, ResidueClass(1, 3), v).has_value();
}

/// One class per (1 mod 3)-cycle-free graph on n vertices, any edge count.
inline std::vector<Graph> one_mod_three_free_classes(std::size_t n, unsigned jobs) {
    GraphFilter f;
    f.hereditary = free_through;
    EnumerationOptions o;
    o.jobs = jobs;
    return iso_classes(n, std::nullopt, f, o);
}

inline std::string join(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

struct ScanAcc {
    std::uint64_t examined = 0;
    std::uint64_t found = 0;
    std::vector<std::string> bad;
    std::set<std::size_t> witness_lengths;
};

inline void merge_into(SearchReport& r, std::vector<ScanAcc>& parts, std::set<std::size_t>* lengths = nullptr) {
    for (auto& p : parts) {
        r.examined += p.examined;
        r.counterexamples.insert(r.counterexamples.end(), p.bad.begin(), p.bad.end());
        if (lengths)
            lengths->insert(p.witness_lengths.begin(), p.witness_lengths.end());
    }
}

inline void finish(SearchReport& r, const Stopwatch& sw) {
    std::sort(r.counterexamples.begin(), r.counterexamples.end());
    r.counterexamples.erase(std::unique(r.counterexamples.begin(), r.counterexamples.end()),
                            r.counterexamples.end());
    r.elapsed_ms = sw.ms();
}

/// Checks a list of graphs in parallel chunks.
template <class Check>
std::vector<ScanAcc> check_all(const std::vector<Graph>& gs, unsigned jobs, Check&& check) {
    constexpr std::size_t chunk = 64;
    return run_chunks<ScanAcc>((gs.size() + chunk - 1) / chunk, jobs, [&](std::size_t ci) {
        ScanAcc acc;
        for (std::size_t i = ci * chunk; i < std::min(gs.size(), (ci + 1) * chunk); ++i)
            check(acc, gs[i]);
        return acc;
    });
}

} // namespace detail

/// Every graph on n vertices with edge_bound(n) + 1 edges has a (1 mod 3)-
/// cycle. Scans connected graphs of minimum degree >= 2: labeled edge sets
/// for n <= 7, isomorphism classes for n = 8.
///
/// The reductions are sound given the result for all smaller orders: the
/// bound grows by at least 1 per vertex, so deleting a vertex of degree <= 1
/// leaves a graph still above the bound, and the bound is superadditive, so
/// some component of a disconnected graph is above its own bound.
inline SearchReport verify_main_theorem(std::size_t n, unsigned jobs = 1) {
    detail::Stopwatch sw;
    if (n == 0)
        throw precondition_failed("n must be at least 1");
    if (n > 8)
        throw ceiling_exceeded("exhaustive main-theorem check is limited to n <= 8");
    SearchReport r;
    r.name = "main";
    r.n = n;
    const std::size_t e = edge_bound(n).bound + 1;
    r.e = e;
    r.reductions = {"connected", "minimum degree >= 2", n <= 7 ? "labeled" : "isomorph-reject"};

    GraphFilter f;
    f.connected = true;
    f.min_degree = 2;
    EnumerationOptions o;
    o.jobs = jobs;
    std::set<std::size_t> lengths;
    auto check = [](detail::ScanAcc& acc, const Graph& g) {
        ++acc.examined;
        if (auto w = find_cycle_mod(g, ResidueClass(1, 3)))
            acc.witness_lengths.insert(w->length());
        else
            acc.bad.push_back(emit_graph6(g));
    };
    if (e <= n * (n - 1) / 2) {
        if (n <= 7) {
            auto parts = labeled_scan<detail::ScanAcc>(n, e, f, o, check);
            detail::merge_into(r, parts, &lengths);
        } else {
            f.isomorph_reject = true;
            const auto gs = iso_classes(n, e, f, o);
            auto parts = detail::check_all(gs, jobs, check);
            detail::merge_into(r, parts, &lengths);
        }
    }
    r.complete = true;
    r.extras.emplace_back("witness_lengths", detail::join({lengths.begin(), lengths.end()}));
    detail::finish(r, sw);
    return r;
}

/// ex(n) = edge_bound(n): the extremal family meets the bound with no
/// (1 mod 3)-cycle; for n <= 7 every labeled graph with bound and bound + 1
/// edges is scanned, and for 8 <= n <= 10 (within the ceiling) every
/// (1 mod 3)-cycle-free class is generated and its largest edge count taken.
/// Graphs with more than bound + 1 edges contain one with exactly bound + 1.
inline SearchReport verify_tightness(std::size_t n, unsigned jobs = 1) {
    detail::Stopwatch sw;
    SearchReport r;
    r.name = "tightness";
    r.n = n;
    const std::size_t bound = edge_bound(n).bound;
    r.e = bound;

    const auto [family, decomposition] = extremal_family(n);
    ++r.examined;
    const bool witness_ok = family.edge_count() == bound && !detail::has_one_mod_three(family);
    if (!witness_ok)
        r.counterexamples.push_back(emit_graph6(family));
    r.extras.emplace_back("witness", emit_graph6(family));
    r.extras.emplace_back("witness_blocks", "petersen=" + std::to_string(decomposition.q) +
                                                " triangle=" + std::to_string(decomposition.q_prime) +
                                                " k2=" + std::to_string(decomposition.r_prime));

    EnumerationOptions o;
    o.jobs = jobs;
    if (n <= 7) {
        r.reductions = {"labeled"};
        std::uint64_t free_at_bound = 0;
        auto count_free = [](detail::ScanAcc& acc, const Graph& g) {
            ++acc.examined;
            if (!detail::has_one_mod_three(g))
                ++acc.found;
        };
        auto at_bound = labeled_scan<detail::ScanAcc>(n, bound, GraphFilter{}, o, count_free);
        for (const auto& p : at_bound) {
            r.examined += p.examined;
            free_at_bound += p.found;
        }
        if (bound + 1 <= n * (n - 1) / 2) {
            auto above = labeled_scan<detail::ScanAcc>(n, bound + 1, GraphFilter{}, o,
                                                       [](detail::ScanAcc& acc, const Graph& g) {
                                                           ++acc.examined;
                                                           if (!detail::has_one_mod_three(g))
                                                               acc.bad.push_back(emit_graph6(g));
                                                       });
            detail::merge_into(r, above);
        }
        const bool ex_ok = free_at_bound > 0 && r.counterexamples.empty() && witness_ok;
        r.extras.emplace_back("free_at_bound_labeled", std::to_string(free_at_bound));
        r.extras.emplace_back("ex_bruteforce", ex_ok ? std::to_string(bound) : "mismatch");
        r.complete = true;
    } else if (n <= std::min<std::size_t>(10, default_ceiling())) {
        r.reductions = {"isomorph-reject", "hereditary (1 mod 3)-free generation"};
        const auto free = detail::one_mod_three_free_classes(n, jobs);
        std::size_t best = 0;
        for (const Graph& g : free) {
            ++r.examined;
            best = std::max(best, g.edge_count());
            if (g.edge_count() > bound)
                r.counterexamples.push_back(emit_graph6(g));
        }
        r.extras.emplace_back("ex_bruteforce", std::to_string(best));
        r.complete = true;
    } else {
        r.reductions = {"witness only"};
        r.extras.emplace_back("ex_bruteforce", "skipped");
        r.complete = true;
    }
    detail::finish(r, sw);
    return r;
}

/// Among 2-connected graphs on 10 vertices with 15 edges and minimum degree
/// >= 3 (the 2-connected cubic graphs), exactly one class has no
/// (1 mod 3)-cycle and it is the Petersen graph. Also checks that no
/// (1 mod 3)-cycle-free graph with 10 vertices and 15 edges has a vertex of
/// degree <= 2.
inline SearchReport verify_extremal_uniqueness_n10(unsigned jobs = 1) {
    detail::Stopwatch sw;
    SearchReport r;
    r.name = "uniqueness10";
    r.n = 10;
    r.e = 15;
    r.reductions = {"2-connected", "minimum degree >= 3", "isomorph-reject"};
    EnumerationOptions o;
    o.jobs = jobs;
    o.ceiling = std::max<std::size_t>(o.ceiling, 10);

    GraphFilter f;
    f.two_connected = true;
    f.min_degree = 3;
    f.isomorph_reject = true;
    const auto cubic = iso_classes(10, 15, f, o);
    const std::string target = canonical_form(petersen());
    std::vector<std::string> survivors;
    for (const Graph& g : cubic) {
        ++r.examined;
        if (!detail::has_one_mod_three(g))
            survivors.push_back(emit_graph6(g));
    }
    for (const auto& s : survivors)
        if (s != target)
            r.counterexamples.push_back(s);
    if (survivors.empty())
        r.counterexamples.push_back(target);

    GraphFilter free;
    free.hereditary = detail::free_through;
    const auto free_e15 = iso_classes(10, 15, free, o);
    std::size_t low_degree = 0;
    for (const Graph& g : free_e15) {
        if (min_degree(g) <= 2) {
            ++low_degree;
            r.counterexamples.push_back(emit_graph6(g));
        }
    }
    r.extras.emplace_back("cubic_classes", std::to_string(cubic.size()));
    r.extras.emplace_back("survivors", std::to_string(survivors.size()));
    r.extras.emplace_back("survivor_is_petersen", survivors.size() == 1 && survivors[0] == target ? "yes" : "no");
    r.extras.emplace_back("free_classes_e15", std::to_string(free_e15.size()));
    r.extras.emplace_back("free_low_degree", std::to_string(low_degree));
    r.complete = true;
    detail::finish(r, sw);
    return r;
}

/// Every 2-connected graph with minimum degree >= 3 on at most max_n vertices
/// has a (1 mod 3)-cycle or is the Petersen graph. Generates every
/// (1 mod 3)-cycle-free class per order; graphs outside that family have a
/// (1 mod 3)-cycle by construction.
inline SearchReport verify_dean_corpus(std::size_t max_n, unsigned jobs = 1) {
    detail::Stopwatch sw;
    if (max_n > 10)
        throw ceiling_exceeded("corpus check is limited to max_n <= 10");
    SearchReport r;
    r.name = "dean";
    r.n = max_n;
    r.reductions = {"isomorph-reject", "hereditary (1 mod 3)-free generation"};
    const std::string target = canonical_form(petersen());
    std::size_t qualifying = 0, petersen_hits = 0;
    for (std::size_t n = 1; n <= max_n; ++n) {
        if (n > default_ceiling())
            throw ceiling_exceeded("order " + std::to_string(n) + " exceeds the enumeration ceiling");
        for (const Graph& g : detail::one_mod_three_free_classes(n, jobs)) {
            ++r.examined;
            if (min_degree(g) < 3 || !is_2_connected(g))
                continue;
            ++qualifying;
            if (emit_graph6(g) == target)
                ++petersen_hits;
            else
                r.counterexamples.push_back(emit_graph6(g));
        }
    }
    r.extras.emplace_back("qualifying_free_graphs", std::to_string(qualifying));
    r.extras.emplace_back("petersen_found", petersen_hits ? "yes" : "no");
    r.complete = true;
    detail::finish(r, sw);
    return r;
}

/// Classifies every 2-connected graph on at most max_n vertices with no
/// (1 mod 3)-cycle and no two disjoint cycles; counterexamples are graphs
/// where the classifier reports a failed conclusion.
inline SearchReport lemma6_scan(std::size_t max_n, unsigned jobs = 1) {
    detail::Stopwatch sw;
    if (max_n > 10)
        throw ceiling_exceeded("classifier scan is limited to max_n <= 10");
    SearchReport r;
    r.name = "lemma6";
    r.n = max_n;
    r.reductions = {"2-connected", "no two disjoint cycles", "isomorph-reject",
                    "hereditary (1 mod 3)-free generation"};
    GraphFilter f;
    f.two_connected = true;
    f.hereditary = [](const Graph& g, Vertex v) {
        return detail::free_through(g, v) && !two_disjoint_cycles(g).has_value();
    };
    EnumerationOptions o;
    o.jobs = jobs;
    std::array<std::size_t, 5> by_kind{};
    for (std::size_t n = 3; n <= max_n; ++n) {
        const auto gs = iso_classes(n, std::nullopt, f, o);
        for (const Graph& g : gs) {
            ++r.examined;
            const auto c = classify_L123_instance(g);
            ++by_kind[static_cast<std::size_t>(c.kind)];
            if (c.kind == L123Classification::Kind::counterexample)
                r.counterexamples.push_back(emit_graph6(g));
        }
    }
    for (std::size_t k = 0; k < by_kind.size(); ++k)
        r.extras.emplace_back(to_string(static_cast<L123Classification::Kind>(k)), std::to_string(by_kind[k]));
    r.complete = true;
    detail::finish(r, sw);
    return r;
}

// ---------------------------------------------------------------------------

struct FamilyCheck {
    std::string name;
    Graph graph;
    bool avoids = false;
};

struct TableRow {
    unsigned ell = 0;
    unsigned k = 0;
    Rational c;
    /// Named families checked to avoid the residue class; empty when the row
    /// is value-only.
    std::vector<FamilyCheck> families;
    enum class Status { passed, failed, value_only } status = Status::value_only;
    std::string detail;
};

inline const char* to_string(TableRow::Status s) {
    switch (s) {
    case TableRow::Status::passed:
        return "passed";
    case TableRow::Status::failed:
        return "failed";
    case TableRow::Status::value_only:
        return "value-only";
    }
    return "?";
}

/// The six known constants with their extremal families, each family
/// checked by full cycle enumeration and by the residue search.
inline std::vector<TableRow> c_constant_table() {
    auto chain = [](const Graph& b, std::size_t copies) { return block_chain(std::vector<Graph>(copies, b)); };
    auto fam = [](std::string name, Graph g) { return FamilyCheck{std::move(name), std::move(g), false}; };
    std::vector<TableRow> rows;
    rows.push_back({0, 2, Rational(3, 2), {fam("triangle chain x4", chain(complete(3), 4))}, {}, {}});
    rows.push_back({0, 3, Rational(2), {fam("K_{2,8}", complete_bipartite(2, 8))}, {}, {}});
    rows.push_back({1, 3, Rational(5, 3), {fam("G_28", extremal_family(28).first)}, {}, {}});
    rows.push_back({2, 3, Rational(3), {fam("K_{3,7}", complete_bipartite(3, 7)), fam("K_4", complete(4))}, {}, {}});
    rows.push_back({0, 4, Rational(19, 12), {}, {}, {}});
    rows.push_back(
        {2, 4, Rational(5, 2), {fam("K_5", complete(5)), fam("K_5 chain x3", chain(complete(5), 3))}, {}, {}});

    for (TableRow& row : rows) {
        if (row.families.empty()) {
            row.status = TableRow::Status::value_only;
            row.detail = "extremal construction not specified";
            continue;
        }
        const ResidueClass rc(row.ell, row.k);
        row.status = TableRow::Status::passed;
        for (FamilyCheck& f : row.families) {
            const auto spectrum = residue_spectrum_by_enumeration(f.graph, row.k);
            const bool by_enum = std::find(spectrum.begin(), spectrum.end(), row.ell) == spectrum.end();
            const bool by_search = !find_cycle_mod(f.graph, rc).has_value();
            f.avoids = by_enum && by_search;
            if (!f.avoids)
                row.status = TableRow::Status::failed;
            if (!row.detail.empty())
                row.detail += "; ";
            row.detail += f.name + (f.avoids ? " avoids" : " has") + " a (" + std::to_string(row.ell) + " mod " +
                          std::to_string(row.k) + ")-cycle";
        }
    }
    return rows;
}

inline std::string format_rational(const Rational& q) {
    return q.denominator() == 1 ? std::to_string(q.numerator())
                                : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

/// The constant table as a report: counterexamples are families that fail
/// their residue check.
inline SearchReport verify_table(unsigned /*jobs*/ = 1) {
    detail::Stopwatch sw;
    SearchReport r;
    r.name = "table1";
    r.residue = "per row";
    for (const TableRow& row : c_constant_table()) {
        for (const FamilyCheck& f : row.families) {
            ++r.examined;
            if (!f.avoids)
                r.counterexamples.push_back(emit_graph6(f.graph));
        }
        r.extras.emplace_back("c_" + std::to_string(row.ell) + "_" + std::to_string(row.k),
                              format_rational(row.c) + " " + to_string(row.status) + " (" + row.detail + ")");
    }
    r.complete = true;
    detail::finish(r, sw);
    return r;
}

} // namespace cyclemod
