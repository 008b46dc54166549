#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclemod/canonical.hpp"
#include "cyclemod/connectivity.hpp"
#include "cyclemod/graph.hpp"
#include "cyclemod/io.hpp"
#include "cyclemod/parallel.hpp"

namespace cyclemod {

struct GraphFilter {
    bool connected = false;
    bool two_connected = false;
    std::size_t min_degree = 0;
    bool isomorph_reject = false;
    /// A property closed under vertex deletion, asked of each graph together
    /// with its highest vertex; G - v is known to have the property already.
    std::function<bool(const Graph&, Vertex)> hereditary;
};

/// Largest order accepted by the enumerators: CYCLEMOD_CEILING if set to a
/// positive integer, else 10.
inline std::size_t default_ceiling() {
    if (const char* env = std::getenv("CYCLEMOD_CEILING")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return 10;
}

struct EnumerationOptions {
    std::size_t ceiling = default_ceiling();
    /// Largest number of labeled edge sets a labeled scan may visit.
    std::uint64_t labeled_limit = 50'000'000;
    unsigned jobs = 1;
};

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

namespace detail {

inline std::size_t effective_min_degree(std::size_t n, const GraphFilter& f) {
    std::size_t d = f.min_degree;
    if (f.two_connected)
        d = std::max<std::size_t>(d, 2);
    if (f.connected && n > 1)
        d = std::max<std::size_t>(d, 1);
    return d;
}

inline bool passes_final(const Graph& g, const GraphFilter& f) {
    if (g.order() > 0 && min_degree(g) < f.min_degree)
        return false;
    if (f.connected && !is_connected(g))
        return false;
    if (f.two_connected && !is_2_connected(g))
        return false;
    return true;
}

inline std::vector<std::pair<Vertex, Vertex>> all_pairs(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            out.emplace_back(u, v);
    return out;
}

/// The rank-th e-subset of {0..m-1} in lexicographic order.
inline std::vector<std::size_t> unrank_combination(std::size_t m, std::size_t e, std::uint64_t rank) {
    std::vector<std::size_t> out;
    std::size_t x = 0;
    for (std::size_t i = 0; i < e; ++i) {
        while (true) {
            const std::uint64_t below = binomial(m - x - 1, e - i - 1);
            if (rank < below)
                break;
            rank -= below;
            ++x;
        }
        out.push_back(x++);
    }
    return out;
}

inline bool next_combination(std::vector<std::size_t>& c, std::size_t m) {
    const std::size_t e = c.size();
    std::size_t i = e;
    while (i > 0 && c[i - 1] == m - e + i - 1)
        --i;
    if (i == 0)
        return false;
    ++c[i - 1];
    for (std::size_t j = i; j < e; ++j)
        c[j] = c[j - 1] + 1;
    return true;
}

inline bool hereditary_prefixes(const Graph& g, const GraphFilter& f) {
    if (!f.hereditary)
        return true;
    for (std::size_t k = 1; k <= g.order(); ++k) {
        std::vector<Vertex> keep(k);
        for (Vertex v = 0; v < k; ++v)
            keep[v] = v;
        if (!f.hereditary(k == g.order() ? g : induced_subgraph(g, VertexSet(keep)), static_cast<Vertex>(k - 1)))
            return false;
    }
    return true;
}

inline void check_ceiling(std::size_t n, const EnumerationOptions& o) {
    if (n > o.ceiling)
        throw ceiling_exceeded("order " + std::to_string(n) + " exceeds the enumeration ceiling " +
                               std::to_string(o.ceiling));
}

} // namespace detail

/// Edge-set chunks of the labeled scan over graphs on n vertices with e
/// edges. fn(acc, g) is called for each graph passing `f`, in lexicographic
/// edge-set order within each chunk; the per-chunk accumulators come back in
/// chunk order.
template <class Acc, class Fn>
std::vector<Acc> labeled_scan(std::size_t n, std::size_t e, const GraphFilter& f, const EnumerationOptions& o,
                              Fn&& fn) {
    detail::check_ceiling(n, o);
    const auto pairs = detail::all_pairs(n);
    const std::size_t m = pairs.size();
    const std::uint64_t total = binomial(m, e);
    if (total > o.labeled_limit)
        throw ceiling_exceeded(std::to_string(total) + " labeled graphs exceed the labeled scan limit " +
                               std::to_string(o.labeled_limit));
    if (total == 0)
        return {};
    constexpr std::uint64_t chunk = 1 << 13;
    const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
    const std::size_t d = detail::effective_min_degree(n, f);

    return run_chunks<Acc>(chunks, o.jobs, [&](std::size_t ci) {
        Acc acc{};
        const std::uint64_t begin = ci * chunk;
        const std::uint64_t end = std::min(total, begin + chunk);
        auto comb = detail::unrank_combination(m, e, begin);
        std::vector<std::size_t> deg(n);
        std::vector<std::pair<Vertex, Vertex>> chosen(e);
        for (std::uint64_t r = begin; r < end; ++r) {
            if (r != begin)
                detail::next_combination(comb, m);
            std::fill(deg.begin(), deg.end(), 0);
            for (std::size_t i = 0; i < e; ++i) {
                chosen[i] = pairs[comb[i]];
                ++deg[chosen[i].first];
                ++deg[chosen[i].second];
            }
            if (d > 0 && *std::min_element(deg.begin(), deg.end()) < d)
                continue;
            const Graph g = make_graph(n, chosen);
            if (!detail::passes_final(g, f) || !detail::hereditary_prefixes(g, f))
                continue;
            fn(acc, g);
        }
        return acc;
    });
}

/// One canonical representative per isomorphism class of graphs on n
/// vertices (with exactly *e edges when given) passing `f`, sorted by graph6.
///
/// Built level by level: every graph on k+1 vertices is a graph on k vertices
/// plus a vertex joined to a subset, so extending each class representative
/// in every way and deduplicating by canonical form reaches every class.
/// Partial graphs are pruned when no completion can meet the edge count or
/// the minimum degree.
inline std::vector<Graph> iso_classes(std::size_t n, std::optional<std::size_t> e, const GraphFilter& f,
                                      const EnumerationOptions& o) {
    detail::check_ceiling(n, o);
    if (n == 0) {
        const Graph empty = make_graph(0, std::vector<std::pair<Vertex, Vertex>>{});
        if (e.value_or(0) == 0 && detail::passes_final(empty, f))
            return {empty};
        return {};
    }
    const std::size_t d = detail::effective_min_degree(n, f);
    std::size_t max_deg = n - 1;
    if (e) {
        const std::size_t twice = 2 * *e;
        max_deg = twice >= d * (n - 1) ? std::min(max_deg, twice - d * (n - 1)) : 0;
        if (*e > n * (n - 1) / 2)
            return {};
    }

    using Level = std::vector<std::pair<std::string, Graph>>;
    const Graph k1 = make_graph(1, std::vector<std::pair<Vertex, Vertex>>{});
    Level level;
    if (!f.hereditary || f.hereditary(k1, 0))
        level.emplace_back(emit_graph6(k1), k1);

    for (std::size_t k = 1; k < n; ++k) {
        const std::size_t remaining = n - k - 1;
        auto parts = run_chunks<Level>(level.size(), o.jobs, [&](std::size_t pi) {
            Level out;
            const Graph& parent = level[pi].second;
            const auto base = edge_pairs(parent);
            std::vector<std::size_t> deg(k + 1);
            std::vector<std::pair<Vertex, Vertex>> pairs;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
                const std::size_t added = static_cast<std::size_t>(__builtin_popcountll(mask));
                const std::size_t edges = parent.edge_count() + added;
                if (e && (edges > *e || edges + remaining * max_deg < *e))
                    continue;
                if (added > max_deg)
                    continue;
                bool ok = true;
                std::size_t deficit_sum = 0;
                for (Vertex v = 0; v <= k && ok; ++v) {
                    deg[v] = v == k ? added : parent.degree(v) + (mask >> v & 1);
                    if (deg[v] > max_deg)
                        ok = false;
                    const std::size_t deficit = deg[v] < d ? d - deg[v] : 0;
                    if (deficit > remaining)
                        ok = false;
                    deficit_sum += deficit;
                }
                if (!ok || deficit_sum > remaining * max_deg)
                    continue;
                pairs = base;
                for (Vertex v = 0; v < k; ++v)
                    if (mask >> v & 1)
                        pairs.emplace_back(v, static_cast<Vertex>(k));
                Graph child = make_graph(k + 1, pairs);
                if (f.hereditary && !f.hereditary(child, static_cast<Vertex>(k)))
                    continue;
                Graph canon = canonical_graph(child);
                std::string key = emit_graph6(canon);
                out.emplace_back(std::move(key), std::move(canon));
            }
            std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            out.erase(std::unique(out.begin(), out.end(),
                                  [](const auto& a, const auto& b) { return a.first == b.first; }),
                      out.end());
            return out;
        });
        Level next;
        for (auto& p : parts)
            std::move(p.begin(), p.end(), std::back_inserter(next));
        std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const auto& a, const auto& b) { return a.first == b.first; }),
                   next.end());
        level = std::move(next);
    }

    std::vector<Graph> out;
    for (auto& [key, g] : level)
        if ((!e || g.edge_count() == *e) && detail::passes_final(g, f))
            out.push_back(std::move(g));
    return out;
}

/// All graphs on n vertices with e edges passing `f`: one per isomorphism
/// class when f.isomorph_reject, else every labeled graph in lexicographic
/// edge-set order.
inline std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t e, const GraphFilter& f,
                                           const EnumerationOptions& o = {}) {
    if (f.isomorph_reject)
        return iso_classes(n, e, f, o);
    auto parts = labeled_scan<std::vector<Graph>>(n, e, f, o, [](std::vector<Graph>& acc, const Graph& g) {
        acc.push_back(g);
    });
    std::vector<Graph> out;
    for (auto& p : parts)
        std::move(p.begin(), p.end(), std::back_inserter(out));
    return out;
}

} // namespace cyclemod
