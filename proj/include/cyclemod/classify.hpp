#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "cyclemod/canonical.hpp"
#include "cyclemod/connectivity.hpp"
#include "cyclemod/constructions.hpp"
#include "cyclemod/cycles.hpp"
#include "cyclemod/lemmas.hpp"

namespace cyclemod {

struct L123Match {
    std::vector<Vertex> cycle;
    VertexSet component;
    /// 1, 2 or 3; 0 when the pair failed the conclusion.
    int which = 0;
};

struct L123Classification {
    enum class Kind { l1, l2, l3, not_applicable, counterexample };
    Kind kind = Kind::not_applicable;
    /// Failed hypothesis (not_applicable) or failed conclusion (counterexample).
    std::string clause;
    /// Every (shortest cycle, component) pair meeting the rho hypothesis.
    std::vector<L123Match> matches;
};

inline const char* to_string(L123Classification::Kind k) {
    switch (k) {
    case L123Classification::Kind::l1:
        return "L1";
    case L123Classification::Kind::l2:
        return "L2";
    case L123Classification::Kind::l3:
        return "L3";
    case L123Classification::Kind::not_applicable:
        return "NotApplicable";
    case L123Classification::Kind::counterexample:
        return "CounterexampleReport";
    }
    return "?";
}

/// rho(U) > floor(3|U|/2) for every nonempty U within `t`.
inline bool rho_condition(const Graph& g, const VertexSet& t) {
    if (t.size() > 24)
        throw precondition_failed("rho condition is checked exhaustively; component too large");
    for (std::size_t mask = 1; mask < (std::size_t{1} << t.size()); ++mask) {
        std::vector<Vertex> u;
        for (std::size_t i = 0; i < t.size(); ++i)
            if (mask >> i & 1)
                u.push_back(t[i]);
        if (rho(g, VertexSet(u)) <= 3 * u.size() / 2)
            return false;
    }
    return true;
}

/// Checks the hypotheses on every shortest cycle C and every component T of
/// G - C; for each pair meeting them, checks that |C| = 5 and that
/// G[V(C) u V(T)] is isomorphic to L1, L2 or L3. The reported kind is that of
/// the first matching pair in cycle-enumeration order.
inline L123Classification classify_L123_instance(const Graph& g) {
    using Kind = L123Classification::Kind;
    L123Classification out;
    auto not_applicable = [&](std::string clause) {
        out.kind = Kind::not_applicable;
        out.clause = std::move(clause);
        return out;
    };
    if (!is_2_connected(g))
        return not_applicable("not 2-connected");
    if (find_cycle_mod(g, ResidueClass(1, 3)))
        return not_applicable("contains a (1 mod 3)-cycle");
    if (two_disjoint_cycles(g))
        return not_applicable("contains two disjoint cycles");

    const std::size_t gi = *girth(g);
    if (gi == g.order())
        return not_applicable("G - C is empty");
    const std::array<std::string, 3> l_forms{canonical_form(l_graph(1)), canonical_form(l_graph(2)),
                                             canonical_form(l_graph(3))};
    for (const OrientedCycle& c : enumerate_cycles(g)) {
        if (c.length() != gi)
            continue;
        const VertexSet on_c(c.vertices());
        for (const VertexSet& t : components(g, on_c)) {
            if (!rho_condition(g, t))
                continue;
            L123Match m{c.vertices(), t, 0};
            if (gi == 5) {
                std::vector<Vertex> keep(c.vertices());
                keep.insert(keep.end(), t.begin(), t.end());
                const std::string form = canonical_form(induced_subgraph(g, VertexSet(keep)));
                for (int i = 0; i < 3; ++i)
                    if (form == l_forms[static_cast<std::size_t>(i)])
                        m.which = i + 1;
            }
            if (m.which == 0 && out.kind != Kind::counterexample) {
                out.kind = Kind::counterexample;
                out.clause = gi != 5 ? "shortest cycle is not a 5-cycle" : "G[V(C) u V(T)] is not an L-graph";
            }
            out.matches.push_back(std::move(m));
        }
    }
    if (out.matches.empty())
        return not_applicable("rho condition fails for every component");
    if (out.kind != Kind::counterexample)
        out.kind = static_cast<Kind>(out.matches.front().which - 1);
    return out;
}

} // namespace cyclemod
