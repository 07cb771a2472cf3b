#ifndef THUELAB_GRAPH6_HPP
#define THUELAB_GRAPH6_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "thuelab/errors.hpp"
#include "thuelab/graph.hpp"

namespace thuelab::graphs {

// graph6: printable ASCII encoding of a simple undirected graph. The order
// is encoded first (one byte for n <= 62, '~' + 3 bytes up to 258047,
// '~~' + 6 bytes beyond), then the upper triangle of the adjacency matrix
// in column order, 6 bits per byte, each byte offset by 63.

namespace detail {

constexpr int kG6Offset = 63;

inline int g6_value(char c) {
    const int v = static_cast<unsigned char>(c) - kG6Offset;
    if (v < 0 || v > 63) throw ParseError("graph6: byte out of range");
    return v;
}

}  // namespace detail

inline std::string to_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    std::string s;
    if (n <= 62) {
        s.push_back(static_cast<char>(n + detail::kG6Offset));
    } else if (n <= 258047) {
        s.push_back('~');
        s.push_back(static_cast<char>(((n >> 12) & 0x3f) + detail::kG6Offset));
        s.push_back(static_cast<char>(((n >> 6) & 0x3f) + detail::kG6Offset));
        s.push_back(static_cast<char>((n & 0x3f) + detail::kG6Offset));
    } else {
        s.push_back('~');
        s.push_back('~');
        for (int shift = 30; shift >= 0; shift -= 6) {
            s.push_back(static_cast<char>(((n >> shift) & 0x3f) + detail::kG6Offset));
        }
    }
    int bits = 0;
    int value = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            value = (value << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bits == 6) {
                s.push_back(static_cast<char>(value + detail::kG6Offset));
                bits = 0;
                value = 0;
            }
        }
    }
    if (bits > 0) {
        value <<= (6 - bits);
        s.push_back(static_cast<char>(value + detail::kG6Offset));
    }
    return s;
}

inline Graph from_graph6(std::string_view s) {
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw ParseError("graph6: empty string");

    std::size_t pos = 0;
    long long n = 0;
    if (s[0] != '~') {
        n = detail::g6_value(s[0]);
        pos = 1;
    } else if (s.size() >= 2 && s[1] != '~') {
        if (s.size() < 4) throw ParseError("graph6: truncated order");
        n = 0;
        for (pos = 1; pos < 4; ++pos) n = (n << 6) | detail::g6_value(s[pos]);
    } else {
        if (s.size() < 8) throw ParseError("graph6: truncated order");
        n = 0;
        for (pos = 2; pos < 8; ++pos) n = (n << 6) | detail::g6_value(s[pos]);
    }
    if (n > (1 << 20)) throw TooLarge("graph6: order too large for this tool");

    Graph g(static_cast<int>(n));
    const std::size_t bit_count = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
    const std::size_t byte_count = (bit_count + 5) / 6;
    if (s.size() - pos != byte_count) throw ParseError("graph6: adjacency data has wrong length");

    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const int byte = detail::g6_value(s[pos + bit / 6]);
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace thuelab::graphs

#endif
