#ifndef THUELAB_GRAPH_HPP
#define THUELAB_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "thuelab/errors.hpp"

namespace thuelab::graphs {

/// Finite simple undirected graph on vertices 0..n-1 with sorted
/// per-vertex neighbour lists. Immutable in spirit: build it, then query.
class Graph {
  public:
    Graph() = default;

    explicit Graph(int n) : adj_(n >= 0 ? static_cast<std::size_t>(n) : 0) {
        if (n < 0) throw BadParameter("graph order must be non-negative");
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }

    std::size_t edge_count() const {
        std::size_t deg_sum = 0;
        for (const auto& nb : adj_) deg_sum += nb.size();
        return deg_sum / 2;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw BadParameter("loops are not allowed in a simple graph");
        insert_sorted(adj_[static_cast<std::size_t>(u)], v);
        insert_sorted(adj_[static_cast<std::size_t>(v)], u);
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    const std::vector<int>& neighbours(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbours(v).size()); }

    /// Edges as (u, v) pairs with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_count());
        for (int u = 0; u < vertex_count(); ++u) {
            for (int v : adj_[static_cast<std::size_t>(u)]) {
                if (u < v) out.emplace_back(u, v);
            }
        }
        return out;
    }

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

    /// Optional per-vertex display names; empty when unused.
    std::vector<std::string> labels;

  private:
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count()) throw BadParameter("vertex index out of range");
    }

    static void insert_sorted(std::vector<int>& nb, int v) {
        auto it = std::lower_bound(nb.begin(), nb.end(), v);
        if (it == nb.end() || *it != v) nb.insert(it, v);
    }

    std::vector<std::vector<int>> adj_;
};

inline Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph c(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) c.add_edge(u, v);
        }
    }
    return c;
}

inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbours(u)) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

/// Plain text edge list: "n m" header line, then one "u v" line per edge,
/// vertices 0-based.
inline Graph read_edge_list(std::istream& in) {
    int n = 0;
    std::size_t m = 0;
    if (!(in >> n >> m)) throw ParseError("edge list: expected 'n m' header");
    if (n < 0) throw ParseError("edge list: negative vertex count");
    Graph g(n);
    for (std::size_t i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw ParseError("edge list: expected 'u v' edge line");
        if (u < 0 || u >= n || v < 0 || v >= n || u == v) {
            throw ParseError("edge list: invalid edge endpoints");
        }
        g.add_edge(u, v);
    }
    return g;
}

inline Graph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    const auto es = g.edges();
    out << g.vertex_count() << ' ' << es.size() << '\n';
    for (const auto& [u, v] : es) out << u << ' ' << v << '\n';
}

inline std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace thuelab::graphs

#endif
