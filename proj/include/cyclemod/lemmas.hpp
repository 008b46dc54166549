#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclemod/cycles.hpp"
#include "cyclemod/graph.hpp"
#include "cyclemod/witness.hpp"

namespace cyclemod {

/// {x, y} is a diagonal pair modulo 3 on c: both arcs between them have the
/// same length mod 3.
inline bool is_mod_diagonal(const OrientedCycle& c, Vertex x, Vertex y) {
    if (x == y)
        throw precondition_failed("mod-diagonal pairs need two distinct vertices");
    return c.forward_length(x, y) % 3 == c.forward_length(y, x) % 3;
}

struct Lemma1Report {
    std::size_t arc_xy = 0;
    bool xy_diagonal = false;
    /// xy_diagonal agrees with |C[x,y]| == -|C| (mod 3).
    bool part1_holds = false;
    /// nullopt when x is not diagonal with both y and z; otherwise whether
    /// |C[y,z]| == 0 (mod 3).
    std::optional<bool> part2;
};

/// Evaluates both arc-arithmetic facts for x, y, z in orientation order.
inline Lemma1Report lemma1_checks(const OrientedCycle& c, Vertex x, Vertex y, Vertex z) {
    if (x == y || y == z || x == z)
        throw order_violation("x, y, z must be distinct");
    const std::size_t xy = c.forward_length(x, y);
    const std::size_t xz = c.forward_length(x, z);
    if (xy >= xz)
        throw order_violation("x, y, z do not appear in this order along the cycle");

    Lemma1Report r;
    r.arc_xy = xy;
    r.xy_diagonal = is_mod_diagonal(c, x, y);
    const std::size_t minus_len = (3 - c.length() % 3) % 3;
    r.part1_holds = r.xy_diagonal == (xy % 3 == minus_len);
    if (r.xy_diagonal && is_mod_diagonal(c, x, z))
        r.part2 = c.forward_length(y, z) % 3 == 0;
    return r;
}

// ---------------------------------------------------------------------------

struct Bridge {
    enum class Kind { chord, component };
    Kind kind = Kind::chord;
    /// Vertices off the cycle (empty for a chord).
    VertexSet interior;
    /// Vertices of the cycle the bridge touches.
    VertexSet attachments;
    std::vector<Edge> edges;
};

/// Chords of c first (in edge order), then one bridge per component of
/// g - V(c), ordered by smallest vertex.
inline std::vector<Bridge> bridges_of_cycle(const Graph& g, const OrientedCycle& c) {
    std::vector<Bridge> out;
    auto on_cycle_edge = [&](Vertex a, Vertex b) {
        return c.contains(a) && c.contains(b) && (c.successor(a) == b || c.successor(b) == a);
    };
    for (const Edge& e : g.edges())
        if (c.contains(e.u) && c.contains(e.v) && !on_cycle_edge(e.u, e.v))
            out.push_back(Bridge{Bridge::Kind::chord, {}, VertexSet{e.u, e.v}, {e}});

    const VertexSet cycle_set(c.vertices());
    for (const VertexSet& comp : components(g, cycle_set)) {
        Bridge b;
        b.kind = Bridge::Kind::component;
        b.interior = comp;
        std::vector<Vertex> att;
        for (const Edge& e : g.edges()) {
            const bool in_u = comp.contains(e.u), in_v = comp.contains(e.v);
            if (!in_u && !in_v)
                continue;
            b.edges.push_back(e);
            if (!in_u)
                att.push_back(e.u);
            if (!in_v)
                att.push_back(e.v);
        }
        b.attachments = VertexSet(std::move(att));
        out.push_back(std::move(b));
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Vertex> sorted_copy(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
}

inline bool share_vertex(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    const auto sa = sorted_copy(a), sb = sorted_copy(b);
    std::vector<Vertex> both;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(both));
    return !both.empty();
}

inline bool is_cycle_of(const Graph& g, const OrientedCycle& c) {
    const auto& vs = c.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (!g.has_edge(vs[i], vs[(i + 1) % vs.size()]))
            return false;
    return true;
}

} // namespace detail

/// Given four x-y paths where P is internally disjoint from each Q_i and the
/// |Q_i| are pairwise distinct mod 3, returns the cycle P + Q_i of length
/// 1 mod 3. Throws precondition_failed naming the first violated clause.
inline CycleWitness verify_three_path_fan(const Graph& g, const PathWitness& p, const PathWitness& q1,
                                          const PathWitness& q2, const PathWitness& q3) {
    const std::array<const PathWitness*, 3> qs{&q1, &q2, &q3};
    if (!p.valid_in(g))
        throw precondition_failed("P is not a path of G");
    const Vertex x = p.origin(), y = p.terminus();
    if (x == y)
        throw precondition_failed("P has equal endpoints");
    std::array<PathWitness, 3> q;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::string name = "Q" + std::to_string(i + 1);
        if (!qs[i]->valid_in(g))
            throw precondition_failed(name + " is not a path of G");
        if (qs[i]->origin() == x && qs[i]->terminus() == y)
            q[i] = *qs[i];
        else if (qs[i]->origin() == y && qs[i]->terminus() == x)
            q[i] = qs[i]->reversed();
        else
            throw precondition_failed(name + " does not share the endpoints of P");
        if (detail::share_vertex(p.interior(), q[i].vertices()) || detail::share_vertex(q[i].interior(), p.vertices()))
            throw precondition_failed("P is not internally disjoint from " + name);
    }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (q[i].length() % 3 == q[j].length() % 3)
                throw precondition_failed("Q" + std::to_string(i + 1) + " and Q" + std::to_string(j + 1) +
                                          " have equal lengths mod 3");

    for (const PathWitness& qi : q) {
        if ((p.length() + qi.length()) % 3 != 1)
            continue;
        std::vector<Vertex> cyc = p.vertices();
        const auto& back = qi.vertices();
        for (std::size_t i = back.size() - 2; i >= 1; --i)
            cyc.push_back(back[i]);
        CycleWitness w{std::move(cyc), ResidueClass(1, 3)};
        if (!check_witness(g, w))
            throw error("three-path fan produced an invalid cycle");
        return w;
    }
    throw error("three-path fan: no combination has length 1 mod 3");
}

/// Two disjoint cycles joined by two disjoint paths whose ends are
/// mod-non-diagonal on both cycles contain a cycle of length 1 mod 3; this
/// returns the first of the four arc combinations that has one.
inline CycleWitness verify_clashing_configuration(const Graph& g, const OrientedCycle& c1, const OrientedCycle& c2,
                                                  const PathWitness& p1_in, const PathWitness& p2_in) {
    if (!detail::is_cycle_of(g, c1))
        throw precondition_failed("C1 is not a cycle of G");
    if (!detail::is_cycle_of(g, c2))
        throw precondition_failed("C2 is not a cycle of G");
    if (detail::share_vertex(c1.vertices(), c2.vertices()))
        throw precondition_failed("C1 and C2 are not disjoint");

    auto orient = [&](const PathWitness& p, const char* name) {
        if (!p.valid_in(g) || p.length() == 0)
            throw precondition_failed(std::string(name) + " is not a path of G");
        if (c1.contains(p.origin()) && c2.contains(p.terminus()))
            return p;
        if (c2.contains(p.origin()) && c1.contains(p.terminus()))
            return p.reversed();
        throw precondition_failed(std::string(name) + " does not run from C1 to C2");
    };
    const PathWitness p1 = orient(p1_in, "P1"), p2 = orient(p2_in, "P2");
    for (const auto* p : {&p1, &p2})
        for (Vertex v : p->interior())
            if (c1.contains(v) || c2.contains(v))
                throw precondition_failed("path has an internal vertex on C1 or C2");
    if (detail::share_vertex(p1.vertices(), p2.vertices()))
        throw precondition_failed("P1 and P2 are not disjoint");

    const Vertex x1 = p1.origin(), x2 = p2.origin(), y1 = p1.terminus(), y2 = p2.terminus();
    if (is_mod_diagonal(c1, x1, x2))
        throw precondition_failed("C1 pair mod-diagonal");
    if (is_mod_diagonal(c2, y1, y2))
        throw precondition_failed("C2 pair mod-diagonal");

    // x1 -P1-> y1 -C2 arc-> y2 -P2 reversed-> x2 -C1 arc-> (x1)
    const std::array<PathWitness, 2> c2_arcs{c2.arc(y1, y2), c2.arc(y2, y1).reversed()};
    const std::array<PathWitness, 2> c1_arcs{c1.arc(x2, x1), c1.arc(x1, x2).reversed()};
    for (const auto& a2 : c2_arcs) {
        for (const auto& a1 : c1_arcs) {
            std::vector<Vertex> cyc = p1.vertices();
            cyc.insert(cyc.end(), a2.vertices().begin() + 1, a2.vertices().end());
            const auto back = p2.reversed().vertices();
            cyc.insert(cyc.end(), back.begin() + 1, back.end());
            cyc.insert(cyc.end(), a1.vertices().begin() + 1, a1.vertices().end() - 1);
            if (cyc.size() % 3 != 1)
                continue;
            CycleWitness w{std::move(cyc), ResidueClass(1, 3)};
            if (!check_witness(g, w))
                throw error("clashing configuration produced an invalid cycle");
            return w;
        }
    }
    throw error("clashing configuration: no combination has length 1 mod 3");
}

// ---------------------------------------------------------------------------

/// Two x-y paths whose lengths differ mod 3, or nullopt after every simple
/// x-y path has been examined. The first path is the first one found in
/// ascending-neighbour DFS order; the second is the first one found with a
/// different residue.
inline std::optional<std::pair<PathWitness, PathWitness>> two_paths_distinct_mod3(const Graph& g, Vertex x, Vertex y) {
    if (x >= g.order() || y >= g.order())
        throw invalid_vertex("endpoint out of range");
    if (x == y)
        throw precondition_failed("x and y must be distinct");

    std::vector<char> visited(g.order(), 0);
    std::vector<Vertex> path{x};
    visited[x] = 1;
    std::optional<PathWitness> first;
    std::optional<PathWitness> second;

    auto can_reach_y = [&](Vertex from) {
        std::vector<char> seen(visited);
        std::vector<Vertex> stack{from};
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (w == y)
                    return true;
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return false;
    };

    std::function<bool(Vertex)> dfs = [&](Vertex u) -> bool {
        if (u == y) {
            PathWitness p(path);
            if (!first)
                first = std::move(p);
            else if (p.length() % 3 != first->length() % 3) {
                second = std::move(p);
                return true;
            }
            return false;
        }
        if (!can_reach_y(u))
            return false;
        for (Vertex w : g.neighbors(u)) {
            if (visited[w])
                continue;
            visited[w] = 1;
            path.push_back(w);
            const bool done = dfs(w);
            path.pop_back();
            visited[w] = 0;
            if (done)
                return true;
        }
        return false;
    };
    if (dfs(x))
        return std::pair{std::move(*first), std::move(*second)};
    return std::nullopt;
}

/// A pair of vertex-disjoint cycles, or nullopt when none exists. Scans
/// cycles in enumeration order and looks for a cycle in the rest.
inline std::optional<std::pair<OrientedCycle, OrientedCycle>> two_disjoint_cycles(const Graph& g) {
    std::optional<std::pair<OrientedCycle, OrientedCycle>> out;
    if (g.order() < 6)
        return out;
    for_each_cycle(g, [&](const std::vector<Vertex>& c) {
        if (g.order() - c.size() < 3)
            return true;
        const VertexSet used(c);
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < g.order(); ++v)
            if (!used.contains(v))
                rest.push_back(v);
        const VertexSet rest_set(rest);
        const Graph h = induced_subgraph(g, rest_set);
        if (is_forest(h))
            return true;
        const auto other = shortest_cycle(h);
        std::vector<Vertex> mapped;
        for (Vertex v : other->vertices())
            mapped.push_back(rest_set[v]);
        out.emplace(OrientedCycle(g, c), OrientedCycle(g, std::move(mapped)));
        return false;
    });
    return out;
}

} // namespace cyclemod
