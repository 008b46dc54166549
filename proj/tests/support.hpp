#pragma once

// Independent oracles for the tests. Each one is written without reusing the
// library's algorithm for the same question.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cyclemod/canonical.hpp"
#include "cyclemod/graph.hpp"

namespace support {

using cyclemod::Graph;
using cyclemod::Vertex;
using Pairs = std::vector<std::pair<Vertex, Vertex>>;

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    Pairs e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                e.emplace_back(u, v);
    return cyclemod::make_graph(n, e);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
    std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
    for (const auto& e : g.edges())
        m[e.u][e.v] = m[e.v][e.u] = true;
    return m;
}

/// Every simple cycle as a normalized vertex sequence (rotated to start at its
/// minimum, direction chosen so the second vertex is smaller than the last).
/// Extends simple paths from each start s through vertices above s only.
inline std::set<std::vector<Vertex>> all_cycles(const Graph& g) {
    const auto adj = matrix(g);
    const std::size_t n = g.order();
    std::set<std::vector<Vertex>> out;
    std::vector<Vertex> path;
    std::vector<bool> used(n, false);
    auto extend = [&](auto&& self, Vertex s) -> void {
        const Vertex u = path.back();
        for (Vertex w = 0; w < n; ++w) {
            if (!adj[u][w])
                continue;
            if (w == s && path.size() >= 3) {
                std::vector<Vertex> c(path);
                if (c[1] > c.back())
                    std::reverse(c.begin() + 1, c.end());
                out.insert(c);
            } else if (w > s && !used[w]) {
                used[w] = true;
                path.push_back(w);
                self(self, s);
                path.pop_back();
                used[w] = false;
            }
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        path = {s};
        used.assign(n, false);
        used[s] = true;
        extend(extend, s);
    }
    return out;
}

inline std::multiset<std::size_t> cycle_length_multiset(const Graph& g) {
    std::multiset<std::size_t> out;
    for (const auto& c : all_cycles(g))
        out.insert(c.size());
    return out;
}

inline bool has_cycle_mod(const Graph& g, unsigned ell, unsigned k) {
    for (std::size_t len : cycle_length_multiset(g))
        if (len % k == ell)
            return true;
    return false;
}

inline bool has_c4(const Graph& g) {
    for (std::size_t len : cycle_length_multiset(g))
        if (len == 4)
            return true;
    return false;
}

/// Isomorphism by trying every bijection; n <= 8.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    const auto mb = matrix(b);
    std::vector<Vertex> p(a.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (const auto& e : a.edges())
            if (!mb[p[e.u]][p[e.v]]) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// graph6 written directly from the format definition (n < 258048).
inline std::string graph6(const Graph& g) {
    std::string s;
    const std::size_t n = g.order();
    if (n <= 62) {
        s += static_cast<char>(63 + n);
    } else {
        s += '~';
        for (int shift = 12; shift >= 0; shift -= 6)
            s += static_cast<char>(63 + ((n >> shift) & 63));
    }
    const auto m = matrix(g);
    std::vector<int> bits;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            bits.push_back(m[i][j] ? 1 : 0);
    while (bits.size() % 6)
        bits.push_back(0);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b)
            v = v * 2 + bits[i + b];
        s += static_cast<char>(63 + v);
    }
    return s;
}

/// Graphs on n vertices with e edges, one per isomorphism class, grown one
/// edge at a time from the empty graph with deduplication at every size.
/// Optional cap on the maximum degree.
inline std::vector<std::string> classes_by_edge_addition(std::size_t n, std::size_t e, std::size_t max_degree) {
    std::map<std::string, Graph> level;
    const Graph empty = cyclemod::make_graph(n, Pairs{});
    level.emplace(cyclemod::canonical_form(empty), empty);
    for (std::size_t step = 0; step < e; ++step) {
        std::map<std::string, Graph> next;
        for (const auto& [key, g] : level) {
            for (Vertex u = 0; u < n; ++u) {
                for (Vertex v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v) || g.degree(u) >= max_degree || g.degree(v) >= max_degree)
                        continue;
                    Graph h = cyclemod::add_edge(g, u, v);
                    next.emplace(cyclemod::canonical_form(h), std::move(h));
                }
            }
        }
        level = std::move(next);
    }
    std::vector<std::string> out;
    for (const auto& [key, g] : level)
        out.push_back(key);
    return out;
}

/// Components after removing `removed`, by repeated flood fill on the matrix.
inline std::size_t component_count(const Graph& g, const std::vector<bool>& removed) {
    const auto adj = matrix(g);
    std::vector<bool> seen(removed);
    std::size_t count = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s])
            continue;
        ++count;
        std::vector<Vertex> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w = 0; w < g.order(); ++w)
                if (adj[u][w] && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
    }
    return count;
}

inline bool brute_cut_vertex(const Graph& g, Vertex v) {
    if (g.degree(v) == 0)
        return false;
    std::vector<bool> none(g.order(), false), without(g.order(), false);
    without[v] = true;
    return component_count(g, without) > component_count(g, none);
}

} // namespace support
