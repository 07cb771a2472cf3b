#ifndef THUELAB_PRODUCT_HPP
#define THUELAB_PRODUCT_HPP

#include <vector>

#include "thuelab/errors.hpp"
#include "thuelab/graph.hpp"

namespace thuelab::graphs {

/// A vertex (g, h) of a lexicographic product. Products are numbered
/// row-major: index = g * |V(H)| + h, fixed so that certificates are
/// reproducible across runs.
struct ProductVertex {
    int g;
    int h;

    bool operator==(const ProductVertex&) const = default;
};

inline int product_index(ProductVertex v, int n_h) { return v.g * n_h + v.h; }

inline ProductVertex product_vertex(int index, int n_h) { return {index / n_h, index % n_h}; }

/// The H-layer above a vertex of G: product indices of {(g, h) : h in V(H)}.
inline std::vector<int> h_layer(int g_vertex, int n_h) {
    std::vector<int> layer(static_cast<std::size_t>(n_h));
    for (int h = 0; h < n_h; ++h) layer[static_cast<std::size_t>(h)] = g_vertex * n_h + h;
    return layer;
}

/// Lexicographic product G o H: (u,v) ~ (x,y) iff u ~ x in G, or u = x and
/// v ~ y in H. Not commutative.
inline Graph lex_product(const Graph& g, const Graph& h) {
    const int n_g = g.vertex_count();
    const int n_h = h.vertex_count();
    if (n_g == 0 || n_h == 0) throw EmptyFactor("lex_product: factors must be nonempty");
    Graph p(n_g * n_h);
    for (int u = 0; u < n_g; ++u) {
        // within a layer: a copy of H
        for (const auto& [a, b] : h.edges()) p.add_edge(u * n_h + a, u * n_h + b);
        // between layers of adjacent G-vertices: all pairs
        for (int x : g.neighbours(u)) {
            if (x < u) continue;
            for (int a = 0; a < n_h; ++a) {
                for (int b = 0; b < n_h; ++b) p.add_edge(u * n_h + a, x * n_h + b);
            }
        }
    }
    return p;
}

}  // namespace thuelab::graphs

#endif
