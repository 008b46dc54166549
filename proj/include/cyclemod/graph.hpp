#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclemod/errors.hpp"

namespace cyclemod {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with `u < v`.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> ids) : ids_(ids) { normalize(); }
    explicit VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) { normalize(); }

    bool contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }
    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }
    Vertex operator[](std::size_t i) const { return ids_[i]; }
    const std::vector<Vertex>& ids() const noexcept { return ids_; }

    /// Throws invalid_vertex unless every id is below `order`.
    void check_within(std::size_t order) const {
        if (!ids_.empty() && ids_.back() >= order)
            throw invalid_vertex("vertex " + std::to_string(ids_.back()) + " out of range for order " +
                                 std::to_string(order));
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void normalize() {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }

    std::vector<Vertex> ids_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted with `u < v`; neighbor lists are sorted ascending,
/// which every search in the library relies on for deterministic witnesses.
class Graph {
public:
    Graph() = default;

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    bool has_edge(Vertex a, Vertex b) const {
        if (a >= order() || b >= order() || a == b)
            return false;
        const auto& row = adjacency_[a];
        return std::binary_search(row.begin(), row.end(), b);
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.order() == b.order() && a.edges_ == b.edges_;
    }

    friend Graph make_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// Builds a graph on `n` vertices. Duplicate and reversed pairs collapse.
inline Graph make_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
    Graph g;
    g.adjacency_.resize(n);
    g.edges_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        if (a >= n || b >= n)
            throw invalid_vertex("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                 ") has an endpoint outside 0.." +
                                 (n == 0 ? std::string("(empty)") : std::to_string(n - 1)));
        if (a == b)
            throw loop_rejected("loop at vertex " + std::to_string(a));
        g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    for (const Edge& e : g.edges_) {
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    for (auto& row : g.adjacency_)
        std::sort(row.begin(), row.end());
    return g;
}

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    return make_graph(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
}

inline Graph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    return make_graph(n, std::span<const std::pair<Vertex, Vertex>>(pairs));
}

inline std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        out.emplace_back(e.u, e.v);
    return out;
}

struct DegreeStats {
    std::size_t min_degree = 0;
    /// False only for the empty graph, where min_degree is reported as 0.
    bool min_defined = false;
    std::size_t max_degree = 0;
    /// Non-increasing.
    std::vector<std::size_t> sequence;
    /// Vertices of degree exactly 2.
    VertexSet degree_two;
};

inline DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    std::vector<Vertex> two;
    for (Vertex v = 0; v < g.order(); ++v) {
        const std::size_t d = g.degree(v);
        s.sequence.push_back(d);
        if (d == 2)
            two.push_back(v);
    }
    std::sort(s.sequence.begin(), s.sequence.end(), std::greater<>());
    if (!s.sequence.empty()) {
        s.min_defined = true;
        s.max_degree = s.sequence.front();
        s.min_degree = s.sequence.back();
    }
    s.degree_two = VertexSet(std::move(two));
    return s;
}

inline std::size_t min_degree(const Graph& g) { return degree_stats(g).min_degree; }

/// Number of edges with at least one endpoint in `u`.
inline std::size_t rho(const Graph& g, const VertexSet& u) {
    u.check_within(g.order());
    std::size_t count = 0;
    for (const Edge& e : g.edges())
        if (u.contains(e.u) || u.contains(e.v))
            ++count;
    return count;
}

/// Subgraph induced by `keep`; vertex keep[i] becomes vertex i.
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    keep.check_within(g.order());
    std::vector<Vertex> index(g.order(), static_cast<Vertex>(-1));
    for (std::size_t i = 0; i < keep.size(); ++i)
        index[keep[i]] = static_cast<Vertex>(i);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const Edge& e : g.edges())
        if (keep.contains(e.u) && keep.contains(e.v))
            pairs.emplace_back(index[e.u], index[e.v]);
    return make_graph(keep.size(), pairs);
}

/// Graph with vertex v renamed to perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.order())
        throw precondition_failed("permutation size does not match graph order");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        pairs.emplace_back(perm[e.u], perm[e.v]);
    return make_graph(g.order(), pairs);
}

/// Same vertex set with the listed edges removed.
inline Graph remove_edges(const Graph& g, std::span<const Edge> drop) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const Edge& e : g.edges()) {
        const bool dropped = std::any_of(drop.begin(), drop.end(), [&](const Edge& d) {
            return std::min(d.u, d.v) == e.u && std::max(d.u, d.v) == e.v;
        });
        if (!dropped)
            pairs.emplace_back(e.u, e.v);
    }
    return make_graph(g.order(), pairs);
}

inline Graph add_edge(const Graph& g, Vertex a, Vertex b) {
    auto pairs = edge_pairs(g);
    pairs.emplace_back(a, b);
    return make_graph(g.order(), pairs);
}

/// Component index per vertex, numbered in order of smallest member.
/// Vertices in `removed` get -1 and are skipped.
inline std::vector<int> component_labels(const Graph& g, const VertexSet& removed = {}) {
    std::vector<int> label(g.order(), -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (label[s] != -1 || removed.contains(s))
            continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (label[w] == -1 && !removed.contains(w)) {
                    label[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return label;
}

/// Vertex sets of the components of g - removed, ordered by smallest vertex.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& removed = {}) {
    const auto label = component_labels(g, removed);
    int count = 0;
    for (int l : label)
        count = std::max(count, l + 1);
    std::vector<std::vector<Vertex>> parts(static_cast<std::size_t>(count));
    for (Vertex v = 0; v < g.order(); ++v)
        if (label[v] >= 0)
            parts[static_cast<std::size_t>(label[v])].push_back(v);
    std::vector<VertexSet> out;
    out.reserve(parts.size());
    for (auto& p : parts)
        out.emplace_back(std::move(p));
    return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

/// True when g has no cycle.
inline bool is_forest(const Graph& g) { return g.edge_count() + components(g).size() == g.order(); }

inline bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.order(), -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace cyclemod
