#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cyclemod/graph.hpp"

namespace cyclemod {

// graph6: every byte is 63 + a 6-bit value. The order is one byte when
// n < 63, '~' plus three bytes when n < 2^18, and '~~' plus six bytes
// otherwise. The body lists x(i,j) for j = 1..n-1, i = 0..j-1, six bits per
// byte, most significant first, zero padded.

inline std::string emit_graph6(const Graph& g) {
    const std::uint64_t n = g.order();
    std::string out;
    auto put_bits = [&out](std::uint64_t value, int groups) {
        for (int i = groups - 1; i >= 0; --i)
            out.push_back(static_cast<char>(63 + ((value >> (6 * i)) & 0x3f)));
    };
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n < (1u << 18)) {
        out.push_back('~');
        put_bits(n, 3);
    } else {
        out.append("~~");
        put_bits(n, 6);
    }

    int filled = 0;
    unsigned chunk = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + chunk));
                filled = 0;
                chunk = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
    return out;
}

/// Parses one graph6 line. A leading ">>graph6<<" header and a trailing
/// newline are accepted.
inline Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header)
        pos = header.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);

    auto sextet = [&](std::size_t at) -> unsigned {
        if (at >= text.size())
            throw format_error("graph6 input truncated", at);
        const auto c = static_cast<unsigned char>(text[at]);
        if (c < 63 || c > 126)
            throw format_error("byte outside the graph6 range 63..126", at);
        return c - 63u;
    };
    auto read_bits = [&](std::size_t at, int groups) {
        std::uint64_t value = 0;
        for (int i = 0; i < groups; ++i)
            value = (value << 6) | sextet(at + static_cast<std::size_t>(i));
        return value;
    };

    if (pos >= text.size())
        throw format_error("empty graph6 string", pos);
    std::uint64_t n = 0;
    if (text[pos] != '~') {
        n = sextet(pos);
        pos += 1;
    } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
        n = read_bits(pos + 2, 6);
        pos += 8;
    } else {
        n = read_bits(pos + 1, 3);
        if (n < 63)
            throw format_error("non-canonical graph6 order encoding", pos);
        pos += 4;
    }
    if (n > (std::uint64_t{1} << 20))
        throw format_error("graph6 order too large", 0);

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t body = (bits + 5) / 6;
    if (text.size() - pos < body)
        throw format_error("graph6 body truncated", text.size());
    if (text.size() - pos > body)
        throw format_error("trailing bytes after graph6 body", pos + body);

    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::uint64_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const unsigned byte = sextet(pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1u)
                pairs.emplace_back(i, j);
        }
    }
    if (k % 6 != 0) {
        const unsigned last = sextet(pos + k / 6);
        if ((last & ((1u << (6 - k % 6)) - 1)) != 0)
            throw format_error("nonzero graph6 padding bits", pos + k / 6);
    }
    return make_graph(static_cast<std::size_t>(n), pairs);
}

/// Plain edge list: the order, then whitespace separated "u v" pairs.
/// '#' starts a comment running to the end of the line.
inline Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<std::uint64_t, std::size_t>> tokens; // value, offset
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#')
            ++i;
        std::uint64_t value = 0;
        const char* first = text.data() + start;
        const char* last = text.data() + i;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last)
            throw format_error("expected a non-negative integer, got '" +
                                   std::string(text.substr(start, i - start)) + "'",
                               start);
        tokens.emplace_back(value, start);
    }
    if (tokens.empty())
        throw format_error("missing vertex count", 0);
    if ((tokens.size() - 1) % 2 != 0)
        throw format_error("edge list ends with an unpaired endpoint", tokens.back().second);
    const std::uint64_t n = tokens.front().first;
    if (n > (std::uint64_t{1} << 24))
        throw format_error("vertex count too large", tokens.front().second);

    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t t = 1; t + 1 < tokens.size(); t += 2) {
        const auto a = tokens[t].first;
        const auto b = tokens[t + 1].first;
        if (a >= n || b >= n)
            throw invalid_vertex("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                 ") has an endpoint >= " + std::to_string(n));
        pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    return make_graph(static_cast<std::size_t>(n), pairs);
}

inline std::string emit_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

/// Picks the format from the first significant character: graph6 bytes are
/// never digits, edge lists always start with one (or a comment).
inline Graph parse_graph_auto(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    if (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '#'))
        return parse_edge_list(text);
    std::size_t end = text.find_first_of("\r\n", i);
    std::string_view line = text.substr(i, end == std::string_view::npos ? std::string_view::npos : end - i);
    if (end != std::string_view::npos) {
        for (std::size_t k = end; k < text.size(); ++k)
            if (!std::isspace(static_cast<unsigned char>(text[k])))
                throw format_error("more than one graph6 line; use bulk input instead", k);
    }
    return parse_graph6(line);
}

} // namespace cyclemod
