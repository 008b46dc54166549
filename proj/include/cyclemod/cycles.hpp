#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "cyclemod/graph.hpp"
#include "cyclemod/witness.hpp"

namespace cyclemod {

/// True iff w.vertices is a cycle of g (distinct, consecutive adjacent,
/// length >= 3) whose length lies in w.residue.
inline bool check_witness(const Graph& g, const CycleWitness& w) {
    if (w.vertices.size() < 3 || !w.residue.matches(w.length()))
        return false;
    for (Vertex v : w.vertices)
        if (v >= g.order())
            return false;
    try {
        OrientedCycle c(g, w.vertices);
    } catch (const precondition_failed&) {
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Simple cycle enumeration (Johnson's circuit algorithm on the symmetric
// digraph). Each undirected cycle is reported once, rooted at its smallest
// vertex and oriented so that the second vertex is smaller than the last.

/// Calls `visit(cycle_vertices)` for every simple cycle; stops early when
/// visit returns false. Returns false iff stopped early.
inline bool for_each_cycle(const Graph& g, const std::function<bool(const std::vector<Vertex>&)>& visit) {
    const std::size_t n = g.order();
    std::vector<char> blocked(n, 0);
    std::vector<std::vector<Vertex>> b_lists(n);
    std::vector<Vertex> stack;
    bool stopped = false;

    std::function<void(Vertex)> unblock = [&](Vertex u) {
        blocked[u] = 0;
        while (!b_lists[u].empty()) {
            const Vertex w = b_lists[u].back();
            b_lists[u].pop_back();
            if (blocked[w])
                unblock(w);
        }
    };

    std::function<bool(Vertex, Vertex)> circuit = [&](Vertex v, Vertex s) -> bool {
        bool found = false;
        stack.push_back(v);
        blocked[v] = 1;
        for (Vertex w : g.neighbors(v)) {
            if (stopped)
                break;
            if (w < s)
                continue;
            if (w == s) {
                // Two-vertex circuits close the blocking logic but are not cycles.
                found = true;
                if (stack.size() >= 3 && stack[1] < stack.back() && !visit(stack))
                    stopped = true;
            } else if (!blocked[w] && circuit(w, s)) {
                found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (Vertex w : g.neighbors(v))
                if (w >= s && std::find(b_lists[w].begin(), b_lists[w].end(), v) == b_lists[w].end())
                    b_lists[w].push_back(v);
        }
        stack.pop_back();
        return found;
    };

    for (Vertex s = 0; s < n && !stopped; ++s) {
        for (Vertex v = s; v < n; ++v) {
            blocked[v] = 0;
            b_lists[v].clear();
        }
        circuit(s, s);
    }
    return !stopped;
}

/// Every simple cycle, in enumeration order. Throws budget_exceeded when the
/// graph has more than `max_count` cycles.
inline std::vector<OrientedCycle> enumerate_cycles(const Graph& g, std::optional<std::size_t> max_count = {}) {
    std::vector<OrientedCycle> out;
    bool truncated = false;
    for_each_cycle(g, [&](const std::vector<Vertex>& c) {
        if (max_count && out.size() == *max_count) {
            truncated = true;
            return false;
        }
        out.emplace_back(c);
        return true;
    });
    if (truncated)
        throw budget_exceeded("cycle enumeration stopped after " + std::to_string(out.size()) + " cycles",
                              out.size());
    return out;
}

// ---------------------------------------------------------------------------

/// A shortest cycle, or nullopt for a forest. BFS from every root; the
/// witness closes at the lowest common ancestor of the two tree paths.
inline std::optional<OrientedCycle> shortest_cycle(const Graph& g) {
    const std::size_t n = g.order();
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::size_t best = none;
    std::vector<Vertex> best_cycle;
    std::vector<std::size_t> dist(n);
    std::vector<Vertex> parent(n);
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), none);
        dist[root] = 0;
        parent[root] = root;
        std::queue<Vertex> q;
        q.push(root);
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            if (best != none && 2 * dist[v] + 1 >= best)
                break;
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] == none) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (w != parent[v] && dist[w] >= dist[v]) {
                    const std::size_t len = dist[v] + dist[w] + 1;
                    if (best == none || len < best) {
                        // Climb to the common ancestor.
                        std::vector<Vertex> left{v}, right{w};
                        Vertex a = v, b = w;
                        while (dist[b] > dist[a]) {
                            b = parent[b];
                            right.push_back(b);
                        }
                        while (a != b) {
                            a = parent[a];
                            b = parent[b];
                            left.push_back(a);
                            right.push_back(b);
                        }
                        right.pop_back();
                        std::vector<Vertex> cyc(left.rbegin(), left.rend());
                        cyc.insert(cyc.end(), right.begin(), right.end());
                        best = cyc.size();
                        best_cycle = std::move(cyc);
                    }
                }
            }
        }
    }
    if (best == none)
        return std::nullopt;
    return OrientedCycle(g, best_cycle);
}

inline std::optional<std::size_t> girth(const Graph& g) {
    if (auto c = shortest_cycle(g))
        return c->length();
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Residue-class cycle search.

/// Whether some vertex has a closed walk of positive length congruent to
/// ell mod k (BFS on the product of g with Z_k). No such walk means no such
/// cycle; a walk does not certify a cycle.
inline bool has_closed_walk_mod(const Graph& g, ResidueClass rc) {
    const std::size_t n = g.order(), k = rc.k();
    std::vector<char> seen(n * k);
    std::vector<std::size_t> queue;
    for (Vertex v = 0; v < n; ++v) {
        std::fill(seen.begin(), seen.end(), 0);
        queue.clear();
        for (Vertex w : g.neighbors(v)) {
            const std::size_t state = w * k + (1 % k);
            if (!seen[state]) {
                seen[state] = 1;
                queue.push_back(state);
            }
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t state = queue[head];
            const Vertex u = static_cast<Vertex>(state / k);
            const std::size_t r = state % k;
            if (u == v && r == rc.ell())
                return true;
            for (Vertex w : g.neighbors(u)) {
                const std::size_t next = w * k + (r + 1) % k;
                if (!seen[next]) {
                    seen[next] = 1;
                    queue.push_back(next);
                }
            }
        }
    }
    return false;
}

namespace detail {

template <std::size_t W>
using Bits = std::array<std::uint64_t, W>;

template <std::size_t W>
inline void set_bit(Bits<W>& b, Vertex v) {
    b[v >> 6] |= std::uint64_t{1} << (v & 63);
}

template <std::size_t W>
inline bool test_bit(const Bits<W>& b, Vertex v) {
    return (b[v >> 6] >> (v & 63)) & 1u;
}

template <std::size_t W>
inline bool any(const Bits<W>& b) {
    for (auto w : b)
        if (w)
            return true;
    return false;
}

template <std::size_t W>
inline std::size_t popcount(const Bits<W>& b) {
    std::size_t c = 0;
    for (auto w : b)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

/// Depth-first search over simple paths from a fixed root, closing back to
/// the root. Prunes a branch when the root is unreachable through unvisited
/// allowed vertices, or when no reachable cycle length lies in the class.
template <std::size_t W>
class ResidueSearch {
public:
    ResidueSearch(const Graph& g, ResidueClass rc) : g_(g), rc_(rc), rows_(g.order()) {
        for (const Edge& e : g.edges()) {
            set_bit<W>(rows_[e.u], e.v);
            set_bit<W>(rows_[e.v], e.u);
        }
    }

    /// Cycle through `root` using only `allowed` vertices besides the root.
    std::optional<std::vector<Vertex>> from(Vertex root, const Bits<W>& allowed) {
        root_ = root;
        allowed_ = allowed;
        visited_ = Bits<W>{};
        set_bit<W>(visited_, root);
        path_.assign(1, root);
        if (dfs(root))
            return path_;
        return std::nullopt;
    }

private:
    bool dfs(Vertex u) {
        const std::size_t len = path_.size();
        if (len >= 3 && test_bit<W>(rows_[u], root_) && rc_.matches(len))
            return true;

        Bits<W> free{};
        for (std::size_t i = 0; i < W; ++i)
            free[i] = allowed_[i] & ~visited_[i];
        // Vertices reachable from u through free vertices.
        Bits<W> reach{}, frontier{};
        for (std::size_t i = 0; i < W; ++i)
            frontier[i] = rows_[u][i] & free[i];
        while (any<W>(frontier)) {
            Bits<W> next{};
            for (std::size_t i = 0; i < W; ++i)
                reach[i] |= frontier[i];
            for (std::size_t i = 0; i < W; ++i) {
                std::uint64_t word = frontier[i];
                while (word) {
                    const Vertex x = static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                    word &= word - 1;
                    for (std::size_t j = 0; j < W; ++j)
                        next[j] |= rows_[x][j];
                }
            }
            for (std::size_t i = 0; i < W; ++i)
                frontier[i] = next[i] & free[i] & ~reach[i];
        }
        bool can_close = test_bit<W>(rows_[u], root_);
        for (std::size_t i = 0; i < W && !can_close; ++i)
            can_close = (reach[i] & rows_[root_][i]) != 0;
        if (!can_close)
            return false;
        const std::size_t longest = len + popcount<W>(reach);
        std::size_t target = std::max<std::size_t>(len, 3);
        const std::size_t k = rc_.k();
        target += (rc_.ell() + k - target % k) % k;
        if (target > longest)
            return false;

        for (Vertex w : g_.neighbors(u)) {
            if (!test_bit<W>(free, w))
                continue;
            set_bit<W>(visited_, w);
            path_.push_back(w);
            if (dfs(w))
                return true;
            path_.pop_back();
            visited_[w >> 6] &= ~(std::uint64_t{1} << (w & 63));
        }
        return false;
    }

    const Graph& g_;
    ResidueClass rc_;
    std::vector<Bits<W>> rows_;
    Vertex root_ = 0;
    Bits<W> allowed_{};
    Bits<W> visited_{};
    std::vector<Vertex> path_;
};

template <std::size_t W>
std::optional<std::vector<Vertex>> find_cycle_mod_words(const Graph& g, ResidueClass rc,
                                                        std::optional<Vertex> through) {
    ResidueSearch<W> search(g, rc);
    const std::size_t n = g.order();
    if (through) {
        Bits<W> allowed{};
        for (Vertex v = 0; v < n; ++v)
            if (v != *through)
                set_bit<W>(allowed, v);
        return search.from(*through, allowed);
    }
    // Root each cycle at its smallest vertex.
    for (Vertex s = 0; s + 2 < n; ++s) {
        Bits<W> allowed{};
        for (Vertex v = s + 1; v < n; ++v)
            set_bit<W>(allowed, v);
        if (auto c = search.from(s, allowed))
            return c;
    }
    return std::nullopt;
}

inline std::optional<std::vector<Vertex>> find_cycle_mod_dispatch(const Graph& g, ResidueClass rc,
                                                                  std::optional<Vertex> through) {
    const std::size_t n = g.order();
    if (n <= 64)
        return find_cycle_mod_words<1>(g, rc, through);
    if (n <= 256)
        return find_cycle_mod_words<4>(g, rc, through);
    if (n <= 1024)
        return find_cycle_mod_words<16>(g, rc, through);
    throw precondition_failed("residue cycle search supports graphs of order at most 1024");
}

} // namespace detail

/// A cycle whose length is congruent to rc.ell() mod rc.k(), or nullopt once
/// the complete search proves none exists. Deterministic for a fixed
/// labeling: roots ascend and neighbours are tried in ascending order.
inline std::optional<CycleWitness> find_cycle_mod(const Graph& g, ResidueClass rc) {
    if (is_forest(g))
        return std::nullopt;
    if (rc.k() == 1) {
        auto c = shortest_cycle(g);
        return CycleWitness{c->vertices(), rc};
    }
    if (!has_closed_walk_mod(g, rc))
        return std::nullopt;
    if (auto c = detail::find_cycle_mod_dispatch(g, rc, std::nullopt))
        return CycleWitness{std::move(*c), rc};
    return std::nullopt;
}

/// Same as find_cycle_mod, restricted to cycles through v.
inline std::optional<CycleWitness> find_cycle_mod_through(const Graph& g, ResidueClass rc, Vertex v) {
    if (v >= g.order())
        throw invalid_vertex("vertex " + std::to_string(v) + " out of range");
    if (auto c = detail::find_cycle_mod_dispatch(g, rc, v))
        return CycleWitness{std::move(*c), rc};
    return std::nullopt;
}

/// Residues mod k realised by cycle lengths, one find_cycle_mod per residue.
inline std::vector<unsigned> residue_spectrum(const Graph& g, unsigned k) {
    std::vector<unsigned> out;
    for (unsigned ell = 0; ell < k; ++ell)
        if (find_cycle_mod(g, ResidueClass(ell, k)))
            out.push_back(ell);
    return out;
}

/// Same set, by complete cycle enumeration.
inline std::vector<unsigned> residue_spectrum_by_enumeration(const Graph& g, unsigned k) {
    if (k == 0)
        throw precondition_failed("modulus k must be at least 1");
    std::vector<char> hit(k, 0);
    std::size_t remaining = k;
    for_each_cycle(g, [&](const std::vector<Vertex>& c) {
        if (!hit[c.size() % k]) {
            hit[c.size() % k] = 1;
            --remaining;
        }
        return remaining > 0;
    });
    std::vector<unsigned> out;
    for (unsigned r = 0; r < k; ++r)
        if (hit[r])
            out.push_back(r);
    return out;
}

/// Sorted multiset of cycle lengths.
inline std::vector<std::size_t> cycle_lengths(const Graph& g) {
    std::vector<std::size_t> out;
    for_each_cycle(g, [&](const std::vector<Vertex>& c) {
        out.push_back(c.size());
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cyclemod
