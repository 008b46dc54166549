#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "cyclemod/graph.hpp"
#include "cyclemod/witness.hpp"

namespace cyclemod {

struct Block {
    VertexSet vertices;
    std::vector<Edge> edges;
};

struct BlockDecomposition {
    /// Ordered by smallest vertex, ties broken by the full vertex list.
    std::vector<Block> blocks;
    VertexSet cut_vertices;
    /// Block-cut tree incidences: (block index, cut vertex in that block).
    std::vector<std::pair<std::size_t, Vertex>> tree_edges;
};

/// Blocks (isolated vertices, cut edges, maximal 2-connected subgraphs) via
/// the Hopcroft-Tarjan edge-stack DFS.
inline BlockDecomposition block_decomposition(const Graph& g) {
    const std::size_t n = g.order();
    constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> disc(n, unseen), low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<Block> blocks;
    std::size_t time = 0;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };

    auto emit_block = [&](Vertex a, Vertex b) {
        const Edge stop{std::min(a, b), std::max(a, b)};
        Block block;
        std::vector<Vertex> vs;
        while (true) {
            const Edge e = edge_stack.back();
            edge_stack.pop_back();
            block.edges.push_back(e);
            vs.push_back(e.u);
            vs.push_back(e.v);
            if (e == stop)
                break;
        }
        std::sort(block.edges.begin(), block.edges.end());
        block.vertices = VertexSet(std::move(vs));
        blocks.push_back(std::move(block));
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != unseen)
            continue;
        disc[root] = low[root] = time++;
        if (g.degree(root) == 0) {
            blocks.push_back(Block{VertexSet{root}, {}});
            continue;
        }
        std::size_t root_children = 0;
        std::vector<Frame> stack{{root, root, 0}};
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                const Vertex w = nbrs[f.next++];
                if (disc[w] == unseen) {
                    edge_stack.push_back(Edge{std::min(f.v, w), std::max(f.v, w)});
                    disc[w] = low[w] = time++;
                    if (f.v == root)
                        ++root_children;
                    stack.push_back(Frame{w, f.v, 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    edge_stack.push_back(Edge{std::min(f.v, w), std::max(f.v, w)});
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            const Vertex child = f.v;
            stack.pop_back();
            if (stack.empty())
                break;
            const Vertex v = stack.back().v;
            low[v] = std::min(low[v], low[child]);
            if (low[child] >= disc[v]) {
                if (v != root)
                    is_cut[v] = 1;
                emit_block(v, child);
            }
        }
        if (root_children > 1)
            is_cut[root] = 1;
    }

    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        return a.vertices.ids() < b.vertices.ids();
    });

    BlockDecomposition out;
    std::vector<Vertex> cuts;
    for (Vertex v = 0; v < n; ++v)
        if (is_cut[v])
            cuts.push_back(v);
    out.cut_vertices = VertexSet(std::move(cuts));
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (Vertex v : blocks[b].vertices)
            if (out.cut_vertices.contains(v))
                out.tree_edges.emplace_back(b, v);
    out.blocks = std::move(blocks);
    return out;
}

inline bool is_2_connected(const Graph& g) {
    if (g.order() < 3 || !is_connected(g))
        return false;
    return block_decomposition(g).cut_vertices.empty();
}

/// A vertex set of size <= max_size whose removal leaves at least two
/// components with two or more vertices, if one exists. Candidates are tried
/// by increasing size, then lexicographically.
inline std::optional<VertexSet> find_essential_cut(const Graph& g, std::size_t max_size) {
    const std::size_t n = g.order();
    auto essential = [&](const VertexSet& s) {
        std::size_t nontrivial = 0;
        for (const auto& c : components(g, s))
            if (c.size() >= 2)
                ++nontrivial;
        return nontrivial >= 2;
    };
    if (essential(VertexSet{}))
        return VertexSet{};
    if (max_size >= 1)
        for (Vertex a = 0; a < n; ++a)
            if (essential(VertexSet{a}))
                return VertexSet{a};
    if (max_size >= 2)
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                if (essential(VertexSet{a, b}))
                    return VertexSet{a, b};
    if (max_size > 2)
        throw precondition_failed("essential cuts are only searched up to size 2");
    return std::nullopt;
}

/// No essential vertex cut of size at most 2. Requires a connected graph.
inline bool is_essentially_3_connected(const Graph& g) {
    if (!is_connected(g))
        throw disconnected_input("essential connectivity is defined for connected graphs");
    return !find_essential_cut(g, 2).has_value();
}

/// Either k disjoint S-T paths or a separator certifying there are fewer.
struct DisjointPaths {
    bool found = false;
    std::vector<PathWitness> paths;
    /// Meets every S-T path (except a direct edge between shared terminals,
    /// see direct_edge); size < k. Set only when !found.
    VertexSet separator;
    /// Set when !found and S = {s}, T = {t} with s ~ t: that edge is a path no
    /// vertex separator can meet, so the bound is |separator| + 1 < k.
    bool direct_edge = false;
};

/// Vertex-disjoint paths from S to T whose internal vertices avoid S and T,
/// by augmenting paths on the vertex-split network. A singleton S or T is a
/// shared terminal that every path may use (the fan and two-vertex forms of
/// Menger's theorem); any other vertex lies on at most one path. A vertex in
/// both S and T is a path of length zero.
inline DisjointPaths disjoint_paths(const Graph& g, const VertexSet& s, const VertexSet& t, std::size_t k) {
    s.check_within(g.order());
    t.check_within(g.order());
    const std::size_t n = g.order();
    // Node 2v is v_in, 2v+1 is v_out; 2n is the source, 2n+1 the sink.
    const std::size_t source = 2 * n, sink = 2 * n + 1;
    constexpr int inf = std::numeric_limits<int>::max() / 4;
    auto shared = [&](Vertex v) {
        const bool in_s = s.contains(v), in_t = t.contains(v);
        return in_s != in_t && ((in_s && s.size() == 1) || (in_t && t.size() == 1));
    };
    struct Arc {
        std::size_t to;
        int cap;
        std::size_t rev;
        int original;
    };
    std::vector<std::vector<Arc>> net(2 * n + 2);
    auto add_arc = [&](std::size_t a, std::size_t b, int cap) {
        net[a].push_back(Arc{b, cap, net[b].size(), cap});
        net[b].push_back(Arc{a, 0, net[a].size() - 1, 0});
    };
    for (Vertex v = 0; v < n; ++v)
        add_arc(2 * v, 2 * v + 1, shared(v) ? inf : 1);
    for (Vertex v : s)
        add_arc(source, 2 * v, inf);
    for (Vertex v : t)
        add_arc(2 * v + 1, sink, inf);
    bool terminals_adjacent = false;
    for (const Edge& e : g.edges()) {
        for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            // Paths stop at their first T vertex and never re-enter S.
            if (t.contains(a) || s.contains(b))
                continue;
            const bool both_shared = shared(a) && shared(b);
            terminals_adjacent = terminals_adjacent || both_shared;
            add_arc(2 * a + 1, 2 * b, both_shared ? 1 : inf);
        }
    }

    std::size_t flow = 0;
    std::vector<std::pair<std::size_t, std::size_t>> via(net.size());
    std::vector<char> reached(net.size());
    auto bfs = [&]() {
        std::fill(reached.begin(), reached.end(), 0);
        std::queue<std::size_t> q;
        q.push(source);
        reached[source] = 1;
        while (!q.empty()) {
            const std::size_t x = q.front();
            q.pop();
            for (std::size_t i = 0; i < net[x].size(); ++i) {
                const Arc& a = net[x][i];
                if (a.cap > 0 && !reached[a.to]) {
                    reached[a.to] = 1;
                    via[a.to] = {x, i};
                    q.push(a.to);
                }
            }
        }
        return reached[sink] != 0;
    };
    while (flow < k && bfs()) {
        for (std::size_t x = sink; x != source;) {
            auto [p, i] = via[x];
            Arc& a = net[p][i];
            a.cap -= 1;
            net[x][a.rev].cap += 1;
            x = p;
        }
        ++flow;
    }

    DisjointPaths out;
    if (flow < k) {
        bfs();
        std::vector<Vertex> cut;
        for (Vertex v = 0; v < n; ++v)
            if (reached[2 * v] && !reached[2 * v + 1])
                cut.push_back(v);
        out.separator = VertexSet(std::move(cut));
        out.direct_edge = terminals_adjacent;
        return out;
    }

    // Peel off one unit at a time along arcs that still carry flow.
    std::vector<std::vector<int>> left(net.size());
    for (std::size_t x = 0; x < net.size(); ++x)
        for (const Arc& a : net[x])
            left[x].push_back(a.original > 0 ? a.original - a.cap : 0);
    auto take = [&](std::size_t x) -> std::size_t {
        for (std::size_t i = 0; i < net[x].size(); ++i)
            if (left[x][i] > 0) {
                --left[x][i];
                return net[x][i].to;
            }
        return sink;
    };
    out.found = true;
    for (std::size_t unit = 0; unit < flow; ++unit) {
        std::vector<Vertex> path;
        std::size_t x = take(source);
        while (x != sink) {
            const Vertex v = static_cast<Vertex>(x / 2);
            path.push_back(v);
            x = take(take(2 * v));
        }
        out.paths.emplace_back(std::move(path));
    }
    std::sort(out.paths.begin(), out.paths.end(),
              [](const PathWitness& a, const PathWitness& b) { return a.vertices() < b.vertices(); });
    return out;
}

} // namespace cyclemod
