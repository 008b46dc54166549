// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit when
// any criterion fails. Runtime limits are part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "cyclemod/bounds.hpp"
#include "cyclemod/classify.hpp"
#include "cyclemod/constructions.hpp"
#include "cyclemod/cycles.hpp"
#include "cyclemod/enumerate.hpp"
#include "cyclemod/lab.hpp"
#include "harness.hpp"
#include "support.hpp"

using namespace cyclemod;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok)
            detail = why;
        ok = false;
    }
};

std::string extra(const SearchReport& r, const std::string& key) {
    for (const auto& [k, v] : r.extras)
        if (k == key)
            return v;
    return "missing";
}

std::set<std::size_t> length_set(const Graph& g) {
    const auto m = support::cycle_length_multiset(g);
    return {m.begin(), m.end()};
}

// 1. Petersen has no (1 mod 3)-cycle; its cycle lengths are 5, 6, 8, 9.
Outcome petersen_exception() {
    Outcome o;
    const Graph p = petersen();
    if (find_cycle_mod(p, ResidueClass(1, 3)))
        o.fail("find_cycle_mod found a (1 mod 3)-cycle");
    if (residue_spectrum(p, 3) != std::vector<unsigned>{0, 2})
        o.fail("residue spectrum mod 3 is not {0,2}");
    const auto lengths = cycle_lengths(p);
    if (std::set<std::size_t>(lengths.begin(), lengths.end()) != std::set<std::size_t>{5, 6, 8, 9})
        o.fail("enumerated lengths are not {5,6,8,9}");
    if (length_set(p) != std::set<std::size_t>{5, 6, 8, 9})
        o.fail("oracle lengths are not {5,6,8,9}");
    o.detail = o.ok ? "exhausted; spectrum {0,2}; lengths {5,6,8,9}" : o.detail;
    return o;
}

// 2. 3 * bound == 5(n-1) when 9 | n-1, and 3 * bound <= 5(n-1) up to 10^6.
Outcome bound_formula() {
    Outcome o;
    std::size_t exact = 0;
    for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
        const auto b = edge_bound(n);
        if (3 * b.bound > 5 * (n - 1))
            o.fail("bound above 5/3 (n-1) at n=" + std::to_string(n));
        if ((n - 1) % 9 == 0) {
            ++exact;
            if (3 * b.bound != 5 * (n - 1))
                o.fail("bound differs from 5/3 (n-1) at n=" + std::to_string(n));
        }
    }
    if (o.ok)
        o.detail = "n <= 10^6; " + std::to_string(exact) + " exact orders";
    return o;
}

// 3. Exhaustive main theorem for n <= 7, single-threaded; the parallel run
// must give the same records.
Outcome main_theorem() {
    Outcome o;
    std::size_t examined = 0;
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto r = verify_main_theorem(n, 1);
        examined += r.examined;
        if (!r.complete || !r.counterexamples.empty())
            o.fail("n=" + std::to_string(n) + " has counterexamples or is incomplete");
        if (n == 7 && r.examined > 352716)
            o.fail("n=7 examined more than C(21,10) graphs");
    }
    auto a = to_record(verify_main_theorem(7, 1));
    auto b = to_record(verify_main_theorem(7, 4));
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    if (a != b)
        o.fail("jobs=4 report differs from jobs=1");
    if (o.ok)
        o.detail = std::to_string(examined) + " graphs, 0 counterexamples, jobs-independent";
    return o;
}

// 4. ex(n) == edge_bound(n) by brute force for n <= 7; the extremal family
// meets the bound without a (1 mod 3)-cycle for n in {10, 19, 28}.
Outcome tightness() {
    Outcome o;
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto r = verify_tightness(n);
        if (!r.passed() || extra(r, "ex_bruteforce") != std::to_string(edge_bound(n).bound))
            o.fail("ex(" + std::to_string(n) + ") = " + extra(r, "ex_bruteforce") + ", bound " +
                   std::to_string(edge_bound(n).bound));
    }
    for (std::size_t n : {10u, 19u, 28u}) {
        const Graph g = extremal_family(n).first;
        if (g.edge_count() != edge_bound(n).bound)
            o.fail("G_" + std::to_string(n) + " has " + std::to_string(g.edge_count()) + " edges");
        if (find_cycle_mod(g, ResidueClass(1, 3)))
            o.fail("G_" + std::to_string(n) + " has a (1 mod 3)-cycle");
        for (std::size_t len : length_set(g))
            if (len % 3 == 1)
                o.fail("oracle finds a (1 mod 3)-cycle in G_" + std::to_string(n));
    }
    if (o.ok)
        o.detail = "ex(n) = bound for n <= 7; G_10, G_19, G_28 at the bound and free";
    return o;
}

// 5. Among all cubic graphs on 10 vertices exactly one class is free, the
// Petersen graph; residue spectra of block chains are unions of the blocks'.
Outcome uniqueness() {
    Outcome o;
    GraphFilter cubic;
    cubic.min_degree = 3;
    cubic.isomorph_reject = true;
    EnumerationOptions opt;
    opt.ceiling = std::max<std::size_t>(opt.ceiling, 10);
    const auto classes = iso_classes(10, 15, cubic, opt);
    std::vector<Graph> free;
    for (const Graph& g : classes)
        if (!find_cycle_mod(g, ResidueClass(1, 3)))
            free.push_back(g);
    if (free.size() != 1 || !is_isomorphic(free[0], petersen()))
        o.fail(std::to_string(free.size()) + " free cubic classes");

    const std::vector<Graph> pool{complete(2), complete(3), complete(4), cycle_graph(5), cycle_graph(7), petersen(),
                                  complete_bipartite(2, 3), prism(3), l_graph(1)};
    std::vector<std::vector<std::vector<unsigned>>> block_spec(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (unsigned k = 2; k <= 4; ++k)
            block_spec[i].push_back(residue_spectrum(pool[i], k));
    std::mt19937_64 rng(5);
    std::size_t chains = 0, largest = 0;
    auto check_chain = [&](const std::vector<std::size_t>& picks) {
        std::vector<Graph> parts;
        for (std::size_t i : picks)
            parts.push_back(pool[i]);
        const Graph g = block_chain(parts);
        largest = std::max(largest, g.order());
        ++chains;
        for (unsigned k = 2; k <= 4; ++k) {
            std::set<unsigned> want;
            for (std::size_t i : picks)
                want.insert(block_spec[i][k - 2].begin(), block_spec[i][k - 2].end());
            const auto got = residue_spectrum(g, k);
            if (std::vector<unsigned>(want.begin(), want.end()) != got)
                o.fail("spectrum mod " + std::to_string(k) + " of a " + std::to_string(g.order()) +
                       "-vertex chain is not the union");
        }
    };
    for (int t = 0; t < 40; ++t) {
        std::vector<std::size_t> picks;
        std::size_t n = 1;
        const std::size_t target = 20 + static_cast<std::size_t>(t) * 180 / 39;
        while (true) {
            const std::size_t i = rng() % pool.size();
            if (n + pool[i].order() - 1 > 200)
                break;
            picks.push_back(i);
            n += pool[i].order() - 1;
            if (n >= target)
                break;
        }
        check_chain(picks);
    }
    // The extremal family itself: Petersen, triangle and K2 blocks.
    for (std::size_t n = 2; n <= 200; n += 9) {
        const auto d = extremal_family(n).second;
        std::vector<std::size_t> picks;
        picks.insert(picks.end(), d.q, 5);
        picks.insert(picks.end(), d.q_prime, 1);
        picks.insert(picks.end(), d.r_prime, 0);
        check_chain(picks);
    }
    if (o.ok)
        o.detail = std::to_string(classes.size()) + " cubic classes, 1 free (Petersen); " + std::to_string(chains) +
                   " chains up to n=" + std::to_string(largest);
    return o;
}

// 6. Witness families of the constant table, by complete enumeration.
Outcome table_witnesses() {
    Outcome o;
    struct Case {
        std::string name;
        Graph g;
        unsigned ell, k;
    };
    const std::vector<Case> cases{
        {"K_{2,8}", complete_bipartite(2, 8), 0, 3},
        {"K_{3,7}", complete_bipartite(3, 7), 2, 3},
        {"K_4", complete(4), 2, 3},
        {"K_5", complete(5), 2, 4},
        {"triangle chain x4", block_chain(std::vector<Graph>(4, complete(3))), 0, 2},
        {"triangle chain x9", block_chain(std::vector<Graph>(9, complete(3))), 0, 2},
    };
    for (const Case& c : cases) {
        const auto spec = residue_spectrum_by_enumeration(c.g, c.k);
        if (std::find(spec.begin(), spec.end(), c.ell) != spec.end())
            o.fail(c.name + " has a cycle of the class");
        for (std::size_t len : length_set(c.g))
            if (len % c.k == c.ell)
                o.fail("oracle: " + c.name + " has a cycle of the class");
    }
    for (const TableRow& row : c_constant_table())
        if (row.status == TableRow::Status::failed)
            o.fail("table row " + std::to_string(row.ell) + " mod " + std::to_string(row.k) + " failed");
    if (o.ok)
        o.detail = std::to_string(cases.size()) + " families avoid their residue class";
    return o;
}

// 7. Structural property suites (10^4 instances each) and the classifier scan.
Outcome lemma_suites() {
    Outcome o;
    constexpr int instances = 10000;
    const std::vector<std::pair<std::string, std::function<std::string(std::mt19937_64&)>>> suites{
        {"arc arithmetic", harness::arc_instance},
        {"three-path fan", harness::fan_instance},
        {"clashing configuration", harness::clashing_instance},
    };
    std::uint64_t seed = 1;
    for (const auto& [name, fn] : suites) {
        std::mt19937_64 rng(seed++);
        for (int i = 0; i < instances; ++i)
            if (auto why = fn(rng); !why.empty()) {
                o.fail(name + ": " + why);
                break;
            }
    }
    std::mt19937_64 rng(seed);
    for (int accepted = 0; accepted < instances;) {
        Graph g;
        Vertex x = 0, y = 0;
        if (!harness::two_paths_draw(rng, g, x, y))
            continue;
        ++accepted;
        if (auto why = harness::two_paths_check(g, x, y); !why.empty()) {
            o.fail("two paths: " + why);
            break;
        }
    }
    const auto scan = lemma6_scan(10);
    if (!scan.passed())
        o.fail("classifier reported " + std::to_string(scan.counterexamples.size()) + " counterexamples");
    if (o.ok)
        o.detail = "4 x 10^4 instances; classifier scan of " + std::to_string(scan.examined) +
                   " graphs (n <= 10), 0 counterexamples";
    return o;
}

// 8. For every labeled graph with n <= 6: (1 mod 3)-cycle iff 4-cycle.
Outcome small_equivalence() {
    Outcome o;
    std::uint64_t graphs = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto pairs = detail::all_pairs(n);
        for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
            support::Pairs e;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1)
                    e.push_back(pairs[i]);
            const Graph g = make_graph(n, e);
            ++graphs;
            if (find_cycle_mod(g, ResidueClass(1, 3)).has_value() != harness::has_c4_fast(g)) {
                o.fail("mismatch on " + emit_graph6(g));
                return o;
            }
        }
    }
    o.detail = std::to_string(graphs) + " labeled graphs";
    return o;
}

// 9. find_cycle_mod against cycle enumeration on 10^4 random graphs.
Outcome oracle_agreement() {
    Outcome o;
    std::mt19937_64 rng(9);
    std::size_t queries = 0;
    for (int t = 0; t < 10000 && o.ok; ++t) {
        const std::size_t n = 1 + rng() % 9;
        const Graph g = support::random_graph(rng, n, static_cast<double>(rng() % 1000) / 1000.0);
        const auto lengths = support::cycle_length_multiset(g);
        for (unsigned k = 1; k <= 4; ++k)
            for (unsigned ell = 0; ell < k; ++ell) {
                ++queries;
                bool expected = false;
                for (std::size_t len : lengths)
                    expected = expected || len % k == ell;
                const auto w = find_cycle_mod(g, ResidueClass(ell, k));
                if (w.has_value() != expected || (w && !harness::is_cycle_in_class(g, w->vertices, ell, k)))
                    o.fail("disagreement on " + emit_graph6(g) + " for " + std::to_string(ell) + " mod " +
                           std::to_string(k));
            }
    }
    if (o.ok)
        o.detail = "10^4 graphs, " + std::to_string(queries) + " queries";
    return o;
}

struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
    double limit_s; // 0: no runtime limit
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Petersen exception", petersen_exception, 1.0},
        {2, "bound formula", bound_formula, 1.0},
        {3, "exhaustive main theorem n <= 7", main_theorem, 300.0},
        {4, "tightness", tightness, 0},
        {5, "uniqueness at n = 10 and block-spectrum union", uniqueness, 0},
        {6, "table witness families", table_witnesses, 10.0},
        {7, "structural property suites", lemma_suites, 0},
        {8, "n <= 6 equivalence with 4-cycles", small_equivalence, 60.0},
        {9, "oracle agreement", oracle_agreement, 0},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_s > 0 && secs >= c.limit_s)
            o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s", secs);
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " (" << timing << "): " << o.detail
                  << std::endl;
        failures += o.ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
