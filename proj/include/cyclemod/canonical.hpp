#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cyclemod/graph.hpp"
#include "cyclemod/io.hpp"

namespace cyclemod {

// Canonical labeling by colour refinement plus individualization, exploring
// the search tree below the coarsest equitable partition and keeping the
// lexicographically largest relabeled adjacency matrix. Subtrees are pruned
// with automorphisms discovered at equal leaves and with twin transpositions.
// Fast for the n <= 16 graphs this library handles; highly symmetric larger
// graphs are correct but may be slow.

namespace detail {

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g), n_(g.order()), matrix_(n_ * n_, 0) {
        for (const Edge& e : g.edges()) {
            matrix_[e.u * n_ + e.v] = 1;
            matrix_[e.v * n_ + e.u] = 1;
        }
    }

    /// labels[v] is the canonical position of vertex v.
    std::vector<Vertex> run() {
        if (n_ == 0)
            return {};
        std::vector<int> colors(n_, 0);
        refine(colors);
        std::vector<Vertex> prefix;
        search(colors, prefix);
        return best_labels_;
    }

private:
    bool adjacent(Vertex a, Vertex b) const { return matrix_[a * n_ + b] != 0; }

    // Re-ranks colours by (colour, sorted neighbour colours) until stable.
    // Ranking by sorted signatures keeps the result labeling-invariant.
    void refine(std::vector<int>& colors) const {
        std::size_t cells = count_cells(colors);
        while (true) {
            std::vector<std::pair<std::vector<int>, Vertex>> sig(n_);
            for (Vertex v = 0; v < n_; ++v) {
                auto& s = sig[v].first;
                s.push_back(colors[v]);
                std::vector<int> nb;
                for (Vertex w : g_.neighbors(v))
                    nb.push_back(colors[w]);
                std::sort(nb.begin(), nb.end());
                s.insert(s.end(), nb.begin(), nb.end());
                sig[v].second = v;
            }
            std::vector<std::size_t> order(n_);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) { return sig[a].first < sig[b].first; });
            int rank = -1;
            for (std::size_t i = 0; i < n_; ++i) {
                if (i == 0 || sig[order[i]].first != sig[order[i - 1]].first)
                    ++rank;
                colors[order[i]] = rank;
            }
            const std::size_t now = static_cast<std::size_t>(rank + 1);
            if (now == cells)
                return;
            cells = now;
        }
    }

    static std::size_t count_cells(const std::vector<int>& colors) {
        std::vector<int> c(colors);
        std::sort(c.begin(), c.end());
        return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
    }

    std::vector<int> individualize(const std::vector<int>& colors, Vertex v) const {
        // Colours are 0..m-1; splitting v to the front of its cell shifts
        // every other vertex at or above its colour by one.
        std::vector<int> out(colors);
        const int c = colors[v];
        for (Vertex w = 0; w < n_; ++w)
            if (colors[w] > c || (colors[w] == c && w != v))
                out[w] += 1;
        refine(out);
        return out;
    }

    std::vector<std::uint8_t> certificate(const std::vector<Vertex>& labels) const {
        std::vector<Vertex> at(n_);
        for (Vertex v = 0; v < n_; ++v)
            at[labels[v]] = v;
        std::vector<std::uint8_t> bits;
        bits.reserve(n_ * (n_ - 1) / 2);
        for (Vertex j = 1; j < n_; ++j)
            for (Vertex i = 0; i < j; ++i)
                bits.push_back(adjacent(at[i], at[j]) ? 1 : 0);
        return bits;
    }

    bool twins(Vertex a, Vertex b) const {
        for (Vertex w = 0; w < n_; ++w)
            if (w != a && w != b && adjacent(a, w) != adjacent(b, w))
                return false;
        return true;
    }

    // Orbit representative of v under the automorphisms found so far that
    // fix every vertex of `prefix`.
    std::vector<Vertex> orbits_fixing(const std::vector<Vertex>& prefix) const {
        std::vector<Vertex> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](Vertex x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : automorphisms_) {
            const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                           [&](Vertex p) { return gamma[p] == p; });
            if (!fixes)
                continue;
            for (Vertex v = 0; v < n_; ++v) {
                const Vertex a = find(v), b = find(gamma[v]);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (Vertex v = 0; v < n_; ++v)
            parent[v] = find(v);
        return parent;
    }

    void search(const std::vector<int>& colors, std::vector<Vertex>& prefix) {
        if (count_cells(colors) == n_) {
            std::vector<Vertex> labels(n_);
            for (Vertex v = 0; v < n_; ++v)
                labels[v] = static_cast<Vertex>(colors[v]);
            auto cert = certificate(labels);
            if (!best_labels_.empty() && cert == best_cert_) {
                // gamma maps v to the vertex holding the same label in the best leaf.
                std::vector<Vertex> at(n_);
                for (Vertex v = 0; v < n_; ++v)
                    at[best_labels_[v]] = v;
                std::vector<Vertex> gamma(n_);
                for (Vertex v = 0; v < n_; ++v)
                    gamma[v] = at[labels[v]];
                automorphisms_.push_back(std::move(gamma));
            } else if (best_labels_.empty() || cert > best_cert_) {
                best_cert_ = std::move(cert);
                best_labels_ = std::move(labels);
            }
            return;
        }

        // Target: the first smallest non-singleton cell.
        std::vector<std::size_t> size(n_, 0);
        for (int c : colors)
            ++size[static_cast<std::size_t>(c)];
        int target = -1;
        for (std::size_t c = 0; c < n_; ++c)
            if (size[c] > 1 && (target < 0 || size[c] < size[static_cast<std::size_t>(target)]))
                target = static_cast<int>(c);

        std::vector<Vertex> tried;
        for (Vertex v = 0; v < n_; ++v) {
            if (colors[v] != target)
                continue;
            const bool twin_of_tried =
                std::any_of(tried.begin(), tried.end(), [&](Vertex w) { return twins(v, w); });
            if (twin_of_tried)
                continue;
            const auto orbit = orbits_fixing(prefix);
            const bool seen = std::any_of(tried.begin(), tried.end(),
                                          [&](Vertex w) { return orbit[w] == orbit[v]; });
            if (seen)
                continue;
            tried.push_back(v);
            prefix.push_back(v);
            search(individualize(colors, v), prefix);
            prefix.pop_back();
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<std::uint8_t> matrix_;
    std::vector<std::uint8_t> best_cert_;
    std::vector<Vertex> best_labels_;
    std::vector<std::vector<Vertex>> automorphisms_;
};

} // namespace detail

/// labels[v] = canonical position of v. Isomorphic graphs relabeled by their
/// canonical labelings are identical.
inline std::vector<Vertex> canonical_labeling(const Graph& g) {
    return detail::Canonizer(g).run();
}

inline Graph canonical_graph(const Graph& g) {
    const auto labels = canonical_labeling(g);
    return relabel(g, labels);
}

/// Canonical label string (graph6 of the canonically relabeled graph).
inline std::string canonical_form(const Graph& g) { return emit_graph6(canonical_graph(g)); }

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    if (degree_stats(a).sequence != degree_stats(b).sequence)
        return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace cyclemod
