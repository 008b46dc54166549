#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclemod/graph.hpp"

namespace cyclemod {

/// Cycle lengths congruent to `ell` modulo `k`.
class ResidueClass {
public:
    ResidueClass(unsigned ell, unsigned k) : ell_(ell), k_(k) {
        if (k == 0)
            throw precondition_failed("modulus k must be at least 1");
        if (ell >= k)
            throw precondition_failed("residue ell must satisfy 0 <= ell < k");
    }

    unsigned ell() const noexcept { return ell_; }
    unsigned k() const noexcept { return k_; }
    bool matches(std::size_t length) const noexcept { return length % k_ == ell_; }

    /// Whether k*Z + ell contains an even integer, the side condition under
    /// which avoiding the class forces only linearly many edges.
    bool admits_even() const noexcept { return k_ % 2 == 1 || ell_ % 2 == 0; }

    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;

private:
    unsigned ell_;
    unsigned k_;
};

/// A path given by its vertex sequence; length is the number of edges.
class PathWitness {
public:
    PathWitness() = default;
    explicit PathWitness(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    std::size_t length() const noexcept { return vertices_.empty() ? 0 : vertices_.size() - 1; }
    Vertex origin() const { return vertices_.front(); }
    Vertex terminus() const { return vertices_.back(); }
    bool empty() const noexcept { return vertices_.empty(); }

    PathWitness reversed() const { return PathWitness(std::vector<Vertex>(vertices_.rbegin(), vertices_.rend())); }

    /// Internal vertices (everything but the two ends).
    std::vector<Vertex> interior() const {
        if (vertices_.size() <= 2)
            return {};
        return {vertices_.begin() + 1, vertices_.end() - 1};
    }

    /// Non-empty, consecutive vertices adjacent in g, all distinct.
    bool valid_in(const Graph& g) const {
        if (vertices_.empty())
            return false;
        for (Vertex v : vertices_)
            if (v >= g.order())
                return false;
        for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
            if (!g.has_edge(vertices_[i], vertices_[i + 1]))
                return false;
        std::vector<Vertex> sorted(vertices_);
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }

    friend bool operator==(const PathWitness&, const PathWitness&) = default;

private:
    std::vector<Vertex> vertices_;
};

/// A cycle with a fixed orientation: vertices()[i+1] follows vertices()[i],
/// and the first vertex follows the last.
class OrientedCycle {
public:
    /// Cycle without a host graph; only distinctness and length >= 3 checked.
    explicit OrientedCycle(std::vector<Vertex> sequence) : sequence_(std::move(sequence)) {
        if (sequence_.size() < 3)
            throw precondition_failed("a cycle needs at least 3 vertices");
        index_.reserve(sequence_.size());
        for (std::size_t i = 0; i < sequence_.size(); ++i)
            index_.emplace_back(sequence_[i], i);
        std::sort(index_.begin(), index_.end());
        for (std::size_t i = 0; i + 1 < index_.size(); ++i)
            if (index_[i].first == index_[i + 1].first)
                throw precondition_failed("cycle repeats vertex " + std::to_string(index_[i].first));
    }

    /// Cycle checked against `host`: consecutive vertices must be adjacent.
    OrientedCycle(const Graph& host, std::vector<Vertex> sequence) : OrientedCycle(std::move(sequence)) {
        for (std::size_t i = 0; i < sequence_.size(); ++i) {
            const Vertex a = sequence_[i], b = sequence_[(i + 1) % sequence_.size()];
            if (!host.has_edge(a, b))
                throw precondition_failed("cycle uses non-edge (" + std::to_string(a) + "," +
                                          std::to_string(b) + ")");
        }
    }

    const std::vector<Vertex>& vertices() const noexcept { return sequence_; }
    std::size_t length() const noexcept { return sequence_.size(); }

    bool contains(Vertex v) const {
        auto it = std::lower_bound(index_.begin(), index_.end(), std::pair<Vertex, std::size_t>{v, 0});
        return it != index_.end() && it->first == v;
    }

    std::size_t position(Vertex v) const {
        auto it = std::lower_bound(index_.begin(), index_.end(), std::pair<Vertex, std::size_t>{v, 0});
        if (it == index_.end() || it->first != v)
            throw vertex_not_on_cycle("vertex " + std::to_string(v) + " is not on the cycle");
        return it->second;
    }

    /// Length of the path from x to y following the orientation.
    std::size_t forward_length(Vertex x, Vertex y) const {
        const std::size_t px = position(x), py = position(y);
        return (py + length() - px) % length();
    }

    Vertex successor(Vertex x) const { return sequence_[(position(x) + 1) % length()]; }
    Vertex predecessor(Vertex x) const { return sequence_[(position(x) + length() - 1) % length()]; }

    /// Vertices of the forward path from x to y, both ends included.
    PathWitness arc(Vertex x, Vertex y) const {
        std::vector<Vertex> out;
        std::size_t i = position(x);
        const std::size_t stop = position(y);
        out.push_back(sequence_[i]);
        while (i != stop) {
            i = (i + 1) % length();
            out.push_back(sequence_[i]);
        }
        return PathWitness(std::move(out));
    }

    OrientedCycle reversed() const {
        return OrientedCycle(std::vector<Vertex>(sequence_.rbegin(), sequence_.rend()));
    }

private:
    std::vector<Vertex> sequence_;
    std::vector<std::pair<Vertex, std::size_t>> index_;
};

/// Claim that `vertices` (cyclically) forms a cycle whose length is in `residue`.
struct CycleWitness {
    std::vector<Vertex> vertices;
    ResidueClass residue{0, 1};

    std::size_t length() const noexcept { return vertices.size(); }
};

/// "cycle k=<k> ell=<ell> v=<v0,v1,...>"
inline std::string format_witness(const CycleWitness& w) {
    std::string out = "cycle k=" + std::to_string(w.residue.k()) + " ell=" + std::to_string(w.residue.ell()) + " v=";
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(w.vertices[i]);
    }
    return out;
}

inline CycleWitness parse_witness(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);
    std::size_t pos = 0;
    auto expect = [&](std::string_view lit) {
        if (line.substr(pos, lit.size()) != lit)
            throw format_error("expected '" + std::string(lit) + "'", pos);
        pos += lit.size();
    };
    auto number = [&]() -> unsigned long {
        unsigned long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
        if (ec != std::errc())
            throw format_error("expected a number", pos);
        pos = static_cast<std::size_t>(ptr - line.data());
        return value;
    };
    expect("cycle k=");
    const auto k = number();
    expect(" ell=");
    const auto ell = number();
    expect(" v=");
    std::vector<Vertex> vs;
    while (true) {
        vs.push_back(static_cast<Vertex>(number()));
        if (pos == line.size())
            break;
        expect(",");
    }
    try {
        return CycleWitness{std::move(vs), ResidueClass(static_cast<unsigned>(ell), static_cast<unsigned>(k))};
    } catch (const precondition_failed& e) {
        throw format_error(e.what(), 0);
    }
}

} // namespace cyclemod
