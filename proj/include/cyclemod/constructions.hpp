#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cyclemod/connectivity.hpp"
#include "cyclemod/cycles.hpp"
#include "cyclemod/graph.hpp"
#include "cyclemod/lemmas.hpp"

namespace cyclemod {

using EdgePairs = std::vector<std::pair<Vertex, Vertex>>;

/// Outer 5-cycle 0..4, inner pentagram 5..9 (5+i ~ 5+(i+2)%5), spokes i ~ i+5.
inline Graph petersen() {
    EdgePairs e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
        e.emplace_back(i, i + 5);
    }
    return make_graph(10, e);
}

inline Graph complete(std::size_t n) {
    if (n == 0)
        throw precondition_failed("complete graph needs n >= 1");
    EdgePairs e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return make_graph(n, e);
}

/// Sides {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
    EdgePairs e;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v)
            e.emplace_back(u, static_cast<Vertex>(a + v));
    return make_graph(a + b, e);
}

/// 0-1-...-(n-1)-0.
inline Graph cycle_graph(std::size_t n) {
    if (n < 3)
        throw precondition_failed("cycle needs n >= 3");
    EdgePairs e;
    for (Vertex i = 0; i < n; ++i)
        e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return make_graph(n, e);
}

inline Graph path_graph(std::size_t n) {
    if (n == 0)
        throw precondition_failed("path needs n >= 1");
    EdgePairs e;
    for (Vertex i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return make_graph(n, e);
}

/// C_m x K_2: cycles 0..m-1 and m..2m-1, rungs i ~ i+m.
inline Graph prism(std::size_t m) {
    if (m < 3)
        throw precondition_failed("prism needs m >= 3");
    EdgePairs e;
    for (Vertex i = 0; i < m; ++i) {
        const Vertex j = static_cast<Vertex>((i + 1) % m);
        e.emplace_back(i, j);
        e.emplace_back(static_cast<Vertex>(i + m), static_cast<Vertex>(j + m));
        e.emplace_back(i, static_cast<Vertex>(i + m));
    }
    return make_graph(2 * m, e);
}

/// Kneser graph K(n, k): k-subsets of {0..n-1} in lexicographic order,
/// adjacent when disjoint.
inline Graph kneser(std::size_t n, std::size_t k) {
    if (k == 0 || k > n || n > 20)
        throw precondition_failed("kneser needs 1 <= k <= n <= 20");
    std::vector<unsigned> sets;
    std::vector<unsigned> pick(k);
    for (std::size_t i = 0; i < k; ++i)
        pick[i] = static_cast<unsigned>(i);
    while (true) {
        unsigned mask = 0;
        for (unsigned p : pick)
            mask |= 1u << p;
        sets.push_back(mask);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    EdgePairs e;
    for (Vertex a = 0; a < sets.size(); ++a)
        for (Vertex b = a + 1; b < sets.size(); ++b)
            if ((sets[a] & sets[b]) == 0)
                e.emplace_back(a, b);
    return make_graph(sets.size(), e);
}

// ---------------------------------------------------------------------------

/// Failure message of the L-graph checks, or an empty string when `g` is
/// 2-connected, has girth 5, no (1 mod 3)-cycle, no two disjoint cycles, and
/// rho(U) > floor(3|U|/2) for every nonempty U within `tree`.
inline std::string l_graph_violation(const Graph& g, const VertexSet& tree) {
    if (!is_2_connected(g))
        return "not 2-connected";
    if (girth(g) != std::optional<std::size_t>{5})
        return "girth is not 5";
    if (find_cycle_mod(g, ResidueClass(1, 3)))
        return "contains a (1 mod 3)-cycle";
    if (two_disjoint_cycles(g))
        return "contains two disjoint cycles";
    const std::size_t t = tree.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << t); ++mask) {
        std::vector<Vertex> u;
        for (std::size_t i = 0; i < t; ++i)
            if (mask >> i & 1)
                u.push_back(tree[i]);
        if (rho(g, VertexSet(u)) <= 3 * u.size() / 2)
            return "rho condition fails";
    }
    return {};
}

/// L1, L2, L3: the 5-cycle x1..x5 is 0..4 in order, the path y1, y2, ...
/// is 5, 6, ... in order, plus the anchor edges
///   L1: y1x4 y2x1 y3x3
///   L2: y1x4 y2x2 y3x5 y4x3
///   L3: y1x2 y2x4 y4x3 y5x5
inline Graph l_graph(int which) {
    struct Anchor {
        int y, x;
    };
    std::size_t path_len = 0;
    std::vector<Anchor> anchors;
    switch (which) {
    case 1:
        path_len = 3;
        anchors = {{1, 4}, {2, 1}, {3, 3}};
        break;
    case 2:
        path_len = 4;
        anchors = {{1, 4}, {2, 2}, {3, 5}, {4, 3}};
        break;
    case 3:
        path_len = 5;
        anchors = {{1, 2}, {2, 4}, {4, 3}, {5, 5}};
        break;
    default:
        throw precondition_failed("l_graph takes 1, 2 or 3");
    }
    auto x = [](int i) { return static_cast<Vertex>(i - 1); };
    auto y = [](int j) { return static_cast<Vertex>(4 + j); };
    EdgePairs e;
    for (int i = 1; i <= 5; ++i)
        e.emplace_back(x(i), x(i % 5 + 1));
    for (int j = 1; j < static_cast<int>(path_len); ++j)
        e.emplace_back(y(j), y(j + 1));
    for (const Anchor& a : anchors)
        e.emplace_back(y(a.y), x(a.x));
    const Graph g = make_graph(5 + path_len, e);

    std::vector<Vertex> tree;
    for (int j = 1; j <= static_cast<int>(path_len); ++j)
        tree.push_back(y(j));
    if (auto why = l_graph_violation(g, VertexSet(tree)); !why.empty())
        throw construction_invalid("L" + std::to_string(which) + ": " + why);
    return g;
}

// ---------------------------------------------------------------------------

/// Glues blocks in sequence: vertex 0 of each block is identified with the
/// highest-numbered vertex placed so far. Block i's other vertices keep their
/// relative order.
inline Graph block_chain(const std::vector<Graph>& blocks) {
    if (blocks.empty())
        throw empty_list("block_chain needs at least one block");
    EdgePairs e;
    std::size_t placed = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const Graph& b = blocks[i];
        if (b.order() == 0)
            throw precondition_failed("blocks must have at least one vertex");
        if (!is_connected(b))
            throw precondition_failed("blocks must be connected");
        const std::size_t base = i == 0 ? 0 : placed - 1;
        for (const Edge& edge : b.edges())
            e.emplace_back(static_cast<Vertex>(base + edge.u), static_cast<Vertex>(base + edge.v));
        placed = base + b.order();
    }
    return make_graph(placed, e);
}

struct ExtremalDecomposition {
    std::size_t q = 0;       // Petersen blocks
    std::size_t q_prime = 0; // triangle blocks
    std::size_t r_prime = 0; // K2 blocks, 0 or 1
    std::size_t n = 0;
    std::size_t edges = 0;
};

/// Chain of q Petersen blocks, then q' triangles, then r' copies of K2, where
/// n - 1 = 9q + r and r = 2q' + r'. n = 1 gives K1.
inline std::pair<Graph, ExtremalDecomposition> extremal_family(std::size_t n) {
    if (n == 0)
        throw precondition_failed("extremal family needs n >= 1");
    ExtremalDecomposition d;
    d.n = n;
    d.q = (n - 1) / 9;
    const std::size_t r = (n - 1) % 9;
    d.q_prime = r / 2;
    d.r_prime = r % 2;
    d.edges = 15 * d.q + 3 * d.q_prime + d.r_prime;

    std::vector<Graph> blocks;
    const Graph p = petersen(), k3 = complete(3), k2 = complete(2);
    blocks.insert(blocks.end(), d.q, p);
    blocks.insert(blocks.end(), d.q_prime, k3);
    blocks.insert(blocks.end(), d.r_prime, k2);
    if (blocks.empty())
        return {make_graph(1, EdgePairs{}), d};
    return {block_chain(blocks), d};
}

} // namespace cyclemod
