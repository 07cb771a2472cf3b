#ifndef THUELAB_COLOURING_HPP
#define THUELAB_COLOURING_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "thuelab/errors.hpp"
#include "thuelab/graph.hpp"
#include "thuelab/independence.hpp"
#include "thuelab/paths.hpp"
#include "thuelab/product.hpp"
#include "thuelab/words.hpp"

namespace thuelab::colouring {

/// Total map vertex -> colour for a specific graph; colours are
/// non-negative integers indexed by vertex.
using Colouring = std::vector<int>;

/// Per-vertex sets of permitted colours.
using ListAssignment = std::vector<std::vector<int>>;

inline int palette_size(const Colouring& c) {
    return static_cast<int>(std::set<int>(c.begin(), c.end()).size());
}

/// A simple path whose colour sequence is a repetition: the first
/// half_length colours equal the second half_length colours.
struct RepetitionWitness {
    std::vector<int> path;
    std::size_t half_length;
};

namespace detail {

inline bool is_square_word(const words::Word& w) {
    const std::size_t len = w.size();
    if (len == 0 || len % 2 != 0) return false;
    const std::size_t half = len / 2;
    for (std::size_t i = 0; i < half; ++i) {
        if (w[i] != w[i + half]) return false;
    }
    return true;
}

inline void check_total(const graphs::Graph& g, const Colouring& c) {
    if (c.size() != static_cast<std::size_t>(g.vertex_count())) {
        throw IncompleteColouring("colouring size does not match the graph order");
    }
    for (int colour : c) {
        if (colour < 0) throw IncompleteColouring("colouring has an uncoloured vertex");
    }
}

}  // namespace detail

/// Checks a colouring against every simple path. Any repeated block along a
/// path lies on a sub-path, and sub-paths are enumerated too, so only whole
/// colour words need testing. Returns the first witness in enumeration
/// order, or nullopt if the colouring is nonrepetitive.
inline std::optional<RepetitionWitness> verify_nonrepetitive(const graphs::Graph& g,
                                                             const Colouring& c) {
    detail::check_total(g, c);
    std::optional<RepetitionWitness> witness;
    words::Word colour_word;
    graphs::enumerate_simple_paths(g, [&](const std::vector<int>& path) {
        if (path.size() % 2 != 0) return true;
        colour_word.clear();
        for (int v : path) colour_word.push_back(c[static_cast<std::size_t>(v)]);
        if (detail::is_square_word(colour_word)) {
            witness = RepetitionWitness{path, path.size() / 2};
            return false;
        }
        return true;
    });
    return witness;
}

/// The Thue chromatic number of a complete multipartite graph without
/// search: total order minus the largest part plus one.
inline int multipartite_exact_pi(const graphs::MultipartiteSpec& spec) {
    spec.validate();
    return spec.total() - spec.max_part() + 1;
}

/// Colours G o H given an independent set M of G and a nonrepetitive
/// colouring of H: every layer above M gets the identical copy of the
/// H-colouring, every other product vertex a fresh unique colour. Uses
/// palette(h_colouring) + (|V(G)| - |M|) * |V(H)| colours in total and is
/// always nonrepetitive.
inline Colouring construct_product_colouring(const graphs::Graph& g, const graphs::Graph& h,
                                             const std::vector<int>& independent_set,
                                             const Colouring& h_colouring) {
    const int n_g = g.vertex_count();
    const int n_h = h.vertex_count();
    if (n_g == 0 || n_h == 0) throw EmptyFactor("product colouring needs nonempty factors");

    std::vector<char> in_set(static_cast<std::size_t>(n_g), 0);
    for (int v : independent_set) {
        if (v < 0 || v >= n_g) throw NotIndependent("independent set contains a bad vertex index");
        if (in_set[static_cast<std::size_t>(v)]) throw NotIndependent("independent set repeats a vertex");
        in_set[static_cast<std::size_t>(v)] = 1;
    }
    for (int u : independent_set) {
        for (int v : independent_set) {
            if (u < v && g.adjacent(u, v)) throw NotIndependent("set is not independent in G");
        }
    }
    if (verify_nonrepetitive(h, h_colouring)) {
        throw RepetitiveFactorColouring("the H colouring must be nonrepetitive");
    }

    int fresh = *std::max_element(h_colouring.begin(), h_colouring.end()) + 1;
    Colouring product(static_cast<std::size_t>(n_g) * static_cast<std::size_t>(n_h));
    for (int u = 0; u < n_g; ++u) {
        for (int v = 0; v < n_h; ++v) {
            const auto idx = static_cast<std::size_t>(graphs::product_index({u, v}, n_h));
            product[idx] = in_set[static_cast<std::size_t>(u)] ? h_colouring[static_cast<std::size_t>(v)] : fresh++;
        }
    }
    return product;
}

/// Nonrepetitive list colouring when every list has at least
/// |V(G)| - alpha(G) + 1 colours: vertices outside a fixed maximum
/// independent set M get pairwise distinct colours from their lists, and
/// each vertex of M takes a list colour unused outside. On any path the
/// outside colours form a rainbow word interrupted by single colours from
/// M, so the result is nonrepetitive.
inline Colouring greedy_list_colouring(const graphs::Graph& g, const ListAssignment& lists) {
    const int n = g.vertex_count();
    if (n == 0) throw BadParameter("list colouring needs a nonempty graph");
    if (lists.size() != static_cast<std::size_t>(n)) {
        throw BadParameter("one colour list per vertex required");
    }

    const std::vector<int> m = graphs::maximum_independent_set(g);
    const int required = n - static_cast<int>(m.size()) + 1;
    std::vector<std::vector<int>> sorted_lists(lists.size());
    for (std::size_t v = 0; v < lists.size(); ++v) {
        sorted_lists[v] = lists[v];
        std::sort(sorted_lists[v].begin(), sorted_lists[v].end());
        sorted_lists[v].erase(std::unique(sorted_lists[v].begin(), sorted_lists[v].end()),
                              sorted_lists[v].end());
        if (static_cast<int>(sorted_lists[v].size()) < required) {
            throw ListTooShort("every list needs at least n - alpha + 1 distinct colours");
        }
    }

    std::vector<char> in_set(static_cast<std::size_t>(n), 0);
    for (int v : m) in_set[static_cast<std::size_t>(v)] = 1;

    Colouring result(static_cast<std::size_t>(n), -1);
    std::set<int> used_outside;
    for (int v = 0; v < n; ++v) {
        if (in_set[static_cast<std::size_t>(v)]) continue;
        bool picked = false;
        for (int colour : sorted_lists[static_cast<std::size_t>(v)]) {
            if (!used_outside.count(colour)) {
                result[static_cast<std::size_t>(v)] = colour;
                used_outside.insert(colour);
                picked = true;
                break;
            }
        }
        // Unreachable when the length precondition holds: at most |V - M| - 1
        // colours are forbidden and each list has at least |V - M| + 1.
        if (!picked) throw DistinctSelectionFailed("no distinct colour left for a vertex outside M");
    }
    for (int v : m) {
        bool picked = false;
        for (int colour : sorted_lists[static_cast<std::size_t>(v)]) {
            if (!used_outside.count(colour)) {
                result[static_cast<std::size_t>(v)] = colour;
                picked = true;
                break;
            }
        }
        if (!picked) throw DistinctSelectionFailed("no colour left for a vertex of M");
    }
    return result;
}

}  // namespace thuelab::colouring

#endif
