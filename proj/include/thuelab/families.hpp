#ifndef THUELAB_FAMILIES_HPP
#define THUELAB_FAMILIES_HPP

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "thuelab/errors.hpp"
#include "thuelab/graph.hpp"
#include "thuelab/graph6.hpp"
#include "thuelab/product.hpp"

namespace thuelab::graphs {

/// Part sizes n_1, ..., n_k of a complete multipartite graph.
struct MultipartiteSpec {
    std::vector<int> part_sizes;

    void validate() const {
        if (part_sizes.empty()) throw BadParameter("multipartite spec needs at least one part");
        for (int s : part_sizes) {
            if (s < 1) throw BadParameter("multipartite part sizes must be positive");
        }
    }

    int total() const { return std::accumulate(part_sizes.begin(), part_sizes.end(), 0); }

    int max_part() const { return *std::max_element(part_sizes.begin(), part_sizes.end()); }
};

inline Graph complete_graph(int n) {
    if (n < 1) throw BadParameter("K_n needs n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

inline Graph empty_graph(int n) {
    if (n < 1) throw BadParameter("E_n needs n >= 1");
    return Graph(n);
}

inline Graph path_graph(int n) {
    if (n < 1) throw BadParameter("P_n needs n >= 1");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw BadParameter("C_n needs n >= 3");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
    g.add_edge(n - 1, 0);
    return g;
}

/// Star S_n on n+1 vertices, centre first.
inline Graph star_graph(int n) {
    if (n < 1) throw BadParameter("S_n needs n >= 1");
    Graph g(n + 1);
    for (int leaf = 1; leaf <= n; ++leaf) g.add_edge(0, leaf);
    return g;
}

/// Complete multipartite graph with parts laid out in the given order.
inline Graph complete_multipartite(const MultipartiteSpec& spec) {
    spec.validate();
    const int n = spec.total();
    Graph g(n);
    std::vector<int> part_of(static_cast<std::size_t>(n));
    int v = 0;
    for (std::size_t p = 0; p < spec.part_sizes.size(); ++p) {
        for (int i = 0; i < spec.part_sizes[p]; ++i) part_of[static_cast<std::size_t>(v++)] = static_cast<int>(p);
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (part_of[static_cast<std::size_t>(a)] != part_of[static_cast<std::size_t>(b)]) g.add_edge(a, b);
        }
    }
    return g;
}

/// Recognises a complete multipartite graph (every component of the
/// complement is a clique) and recovers its part sizes, largest part
/// first. Returns nullopt otherwise.
inline std::optional<MultipartiteSpec> as_complete_multipartite(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    const Graph co = complement(g);
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<int> sizes;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        const int id = static_cast<int>(sizes.size());
        std::vector<int> stack{s};
        std::vector<int> members;
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (int w : co.neighbours(u)) {
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        for (int a : members) {
            for (int b : members) {
                if (a < b && !co.adjacent(a, b)) return std::nullopt;
            }
        }
        sizes.push_back(static_cast<int>(members.size()));
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    return MultipartiteSpec{sizes};
}

namespace detail {

inline int parse_count(std::string_view text, std::string_view what) {
    if (text.empty()) throw ParseError(std::string("missing number in ") + std::string(what));
    int value = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError(std::string("bad number in descriptor: ") + std::string(what));
        }
        if (value > 100000000) throw ParseError("number in descriptor too large");
        value = value * 10 + (c - '0');
    }
    return value;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Splits "A,B" at the top-level comma of a lex(...) argument list.
inline std::pair<std::string_view, std::string_view> split_two(std::string_view s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == ',' && depth == 0) return {s.substr(0, i), s.substr(i + 1)};
    }
    throw ParseError("lex(...) needs two comma-separated descriptors");
}

}  // namespace detail

/// Builds a graph from a family descriptor:
///   K<n> | E<n> | P<n> | C<n> | S<n> | K<n1>,<n2>[,...]
///   | lex(<desc>,<desc>) | g6:<graph6> | file:<path>
/// Family letters are case-insensitive; S<n> is the star on n+1 vertices.
/// A file may hold either a graph6 string or an "n m" edge list.
inline Graph make_family(std::string_view descriptor) {
    const std::string_view desc = detail::trim(descriptor);
    if (desc.empty()) throw ParseError("empty graph descriptor");

    std::string lowered(desc);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

    if (lowered.rfind("g6:", 0) == 0) return from_graph6(desc.substr(3));
    if (lowered.rfind("file:", 0) == 0) {
        const std::string path(desc.substr(5));
        std::ifstream in(path);
        if (!in) throw IoError("cannot open graph file: " + path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        const std::string text = buffer.str();
        // graph6 bytes are all >= '?', so a digit means an edge list header.
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) throw ParseError("graph file is empty: " + path);
        if (std::isdigit(static_cast<unsigned char>(text[first]))) return read_edge_list(text);
        auto line_end = text.find('\n', first);
        return from_graph6(std::string_view(text).substr(first, line_end - first));
    }
    if (lowered.rfind("lex(", 0) == 0) {
        if (desc.back() != ')') throw ParseError("lex(...) missing closing parenthesis");
        const auto [left, right] = detail::split_two(desc.substr(4, desc.size() - 5));
        return lex_product(make_family(left), make_family(right));
    }

    const char family = lowered[0];
    const std::string_view args = desc.substr(1);
    if (family == 'k' && args.find(',') != std::string_view::npos) {
        MultipartiteSpec spec;
        std::size_t from = 0;
        while (from <= args.size()) {
            const std::size_t comma = std::min(args.find(',', from), args.size());
            spec.part_sizes.push_back(detail::parse_count(args.substr(from, comma - from), desc));
            from = comma + 1;
        }
        if (std::any_of(spec.part_sizes.begin(), spec.part_sizes.end(), [](int s) { return s < 1; })) {
            throw BadParameter("multipartite part sizes must be positive");
        }
        return complete_multipartite(spec);
    }

    switch (family) {
        case 'k': return complete_graph(detail::parse_count(args, desc));
        case 'e': return empty_graph(detail::parse_count(args, desc));
        case 'p': return path_graph(detail::parse_count(args, desc));
        case 'c': return cycle_graph(detail::parse_count(args, desc));
        case 's': return star_graph(detail::parse_count(args, desc));
        default: throw UnknownFamily("unknown graph family: " + std::string(desc));
    }
}

}  // namespace thuelab::graphs

#endif
