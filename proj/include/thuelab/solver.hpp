#ifndef THUELAB_SOLVER_HPP
#define THUELAB_SOLVER_HPP

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "thuelab/colouring.hpp"
#include "thuelab/errors.hpp"
#include "thuelab/graph.hpp"
#include "thuelab/independence.hpp"

namespace thuelab::colouring {

struct PiResult {
    int pi;
    Colouring witness;
};

namespace detail {

// Incremental repetition test for backtracking searches. After a vertex is
// coloured, any new repetitive path in the coloured induced subgraph must
// pass through that vertex, so scanning the paths through it (as endpoint
// or interior vertex) keeps the subgraph repetition-free. Restricting the
// scan to paths that merely end at the new vertex is not enough: the last
// vertex coloured on a repetitive path may be interior to it.
class SquareScanner {
  public:
    explicit SquareScanner(const graphs::Graph& g)
        : g_(g), n_(g.vertex_count()), buffer_(2 * static_cast<std::size_t>(g.vertex_count()) + 1) {
        if (n_ > 64) throw TooLarge("solver handles at most 64 vertices");
    }

    /// True iff the induced subgraph on `coloured` has a simple path through
    /// `v` whose colour word is a repetition. `colours` must be set for every
    /// vertex in `coloured`, including v.
    bool square_through(int v, const std::vector<int>& colours, std::uint64_t coloured) {
        colours_ = &colours;
        coloured_ = coloured;
        const int colour_v = colours[static_cast<std::size_t>(v)];
        for (int u : g_.neighbours(v)) {
            if ((coloured >> u) & 1 && colours[static_cast<std::size_t>(u)] == colour_v) {
                return true;  // length-2 repetition on the edge uv
            }
        }
        const int centre = n_;
        buffer_[static_cast<std::size_t>(centre)] = colour_v;
        left_ = right_ = centre;
        const std::uint64_t used = 1ULL << v;
        for (int a : g_.neighbours(v)) {
            if (!((coloured >> a) & 1)) continue;
            if (grow_left(v, a, a, used | (1ULL << a))) return true;
        }
        return false;
    }

  private:
    // The path under construction lives in buffer_[left_..right_] with v at
    // the centre; the left arm grows towards index 0, the right arm towards
    // the end. Reversal maps repetitions to repetitions, so each undirected
    // path is scanned in one direction only: left arms start at every
    // coloured neighbour, right arms only at larger-numbered ones.
    bool grow_left(int v, int first, int x, std::uint64_t used) {
        buffer_[static_cast<std::size_t>(--left_)] = (*colours_)[static_cast<std::size_t>(x)];
        bool found = false;
        if ((right_ - left_) % 2 == 1 && right_ - left_ > 1 && window_is_square()) {
            found = true;  // v is an endpoint of this path
        }
        if (!found) {
            for (int b : g_.neighbours(v)) {
                if (b <= first || !((coloured_ >> b) & 1) || ((used >> b) & 1)) continue;
                if (grow_right(b, used | (1ULL << b))) {
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            for (int y : g_.neighbours(x)) {
                if (!((coloured_ >> y) & 1) || ((used >> y) & 1)) continue;
                if (grow_left(v, first, y, used | (1ULL << y))) {
                    found = true;
                    break;
                }
            }
        }
        ++left_;
        return found;
    }

    bool grow_right(int y, std::uint64_t used) {
        buffer_[static_cast<std::size_t>(++right_)] = (*colours_)[static_cast<std::size_t>(y)];
        bool found = (right_ - left_) % 2 == 1 && window_is_square();
        if (!found) {
            for (int z : g_.neighbours(y)) {
                if (!((coloured_ >> z) & 1) || ((used >> z) & 1)) continue;
                if (grow_right(z, used | (1ULL << z))) {
                    found = true;
                    break;
                }
            }
        }
        --right_;
        return found;
    }

    bool window_is_square() const {
        const int len = right_ - left_ + 1;
        const int half = len / 2;
        for (int i = 0; i < half; ++i) {
            if (buffer_[static_cast<std::size_t>(left_ + i)] !=
                buffer_[static_cast<std::size_t>(left_ + half + i)]) {
                return false;
            }
        }
        return true;
    }

    const graphs::Graph& g_;
    int n_;
    std::vector<int> buffer_;
    int left_ = 0;
    int right_ = 0;
    const std::vector<int>* colours_ = nullptr;
    std::uint64_t coloured_ = 0;
};

/// Vertices in search order: descending degree, ties by index.
inline std::vector<int> search_order(const graphs::Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

struct PiSearch {
    const graphs::Graph& g;
    const std::vector<int>& order;
    SquareScanner& scanner;
    std::vector<int>& colours;
    std::uint64_t coloured = 0;
    int palette = 0;

    // Colour j is allowed only once 0..j-1 appear; colour names are
    // interchangeable, so this prunes permuted duplicates only.
    bool run(std::size_t pos, int max_colours) {
        if (pos == order.size()) return true;
        const int v = order[pos];
        const int limit = std::min(max_colours - 1, palette);
        for (int c = 0; c <= limit; ++c) {
            colours[static_cast<std::size_t>(v)] = c;
            coloured |= 1ULL << v;
            const int previous_palette = palette;
            palette = std::max(palette, c + 1);
            if (!scanner.square_through(v, colours, coloured) && run(pos + 1, max_colours)) {
                return true;
            }
            palette = previous_palette;
            coloured &= ~(1ULL << v);
            colours[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }
};

}  // namespace detail

/// Exact Thue chromatic number with a verified witness colouring.
/// Deterministic: fixed vertex order (descending degree, ties by index),
/// colour symmetry breaking, first feasible palette size wins. lower_hint
/// must be a proven lower bound; upper_hint is only sanity-checked.
inline PiResult exact_pi(const graphs::Graph& g, std::optional<int> lower_hint = std::nullopt,
                         std::optional<int> upper_hint = std::nullopt) {
    const int n = g.vertex_count();
    if (n == 0) throw BadParameter("exact_pi needs a nonempty graph");
    const auto order = detail::search_order(g);
    detail::SquareScanner scanner(g);
    std::vector<int> colours(static_cast<std::size_t>(n), -1);

    const int start = std::clamp(lower_hint.value_or(1), 1, n);
    for (int k = start; k <= n; ++k) {
        detail::PiSearch search{g, order, scanner, colours};
        if (search.run(0, k)) {
            assert(!verify_nonrepetitive(g, colours));
            assert(!upper_hint || k <= *upper_hint);
            return {k, colours};
        }
    }
    throw Error("exact_pi: unreachable, a rainbow colouring always verifies");
}

/// Safe lower bound for pi(G o H): the product contains G and H as induced
/// subgraphs, and when G has an edge it contains the join of two H-layers,
/// which needs pi(H) + |V(H)| colours (two equal colours in one layer plus
/// any repeat in or across the opposite layers would align into a
/// repetitive 4-vertex path).
inline int product_pi_lower_hint(int pi_g, int pi_h, int n_h, bool g_has_edge) {
    int hint = std::max(pi_g, pi_h);
    if (g_has_edge) hint = std::max(hint, pi_h + n_h);
    return hint;
}

struct ChoosabilityResult {
    bool choosable;
    std::optional<ListAssignment> counterexample;
};

namespace detail {

inline bool list_colourable(const graphs::Graph& g, const ListAssignment& lists,
                            SquareScanner& scanner) {
    const int n = g.vertex_count();
    std::vector<int> colours(static_cast<std::size_t>(n), -1);

    struct Rec {
        const graphs::Graph& g;
        const ListAssignment& lists;
        SquareScanner& scanner;
        std::vector<int>& colours;
        std::uint64_t coloured = 0;

        bool run(int v) {
            if (v == g.vertex_count()) return true;
            for (int c : lists[static_cast<std::size_t>(v)]) {
                colours[static_cast<std::size_t>(v)] = c;
                coloured |= 1ULL << v;
                if (!scanner.square_through(v, colours, coloured) && run(v + 1)) return true;
                coloured &= ~(1ULL << v);
                colours[static_cast<std::size_t>(v)] = -1;
            }
            return false;
        }
    } rec{g, lists, scanner, colours};

    return rec.run(0);
}

}  // namespace detail

/// Decides non-repetitive k-choosability over lists drawn as k-subsets of
/// {0..universe-1} by exhausting list assignments up to colour relabelling:
/// a canonical list reuses already-introduced symbols or takes the smallest
/// fresh ones. A violating assignment needs at most k * |V| distinct
/// symbols in total, hence the universe default.
inline ChoosabilityResult check_choosable(const graphs::Graph& g, int k,
                                          std::optional<int> universe_opt = std::nullopt) {
    const int n = g.vertex_count();
    if (n < 1 || n > 5) throw TooLarge("choosability checker is guarded to 1..5 vertices");
    if (k < 1) throw BadParameter("list size must be positive");
    const int universe = universe_opt.value_or(k * n);
    if (universe < k) throw BadParameter("universe must hold at least one k-subset");
    if (universe > 15) throw TooLarge("choosability universe guarded to 15 symbols");

    double assignments = 1.0;
    for (int i = 1; i < n; ++i) {
        double options = 0.0;
        for (int j = 0; j <= k; ++j) {
            double c = 1.0;
            for (int t = 0; t < k - j; ++t) c *= static_cast<double>(universe - t) / (t + 1);
            options += c;
        }
        assignments *= options;
    }
    if (assignments > 2e7) throw TooLarge("choosability enumeration would be too large");

    detail::SquareScanner scanner(g);
    ListAssignment lists(static_cast<std::size_t>(n));
    std::optional<ListAssignment> counterexample;

    struct Enumerate {
        const graphs::Graph& g;
        int k;
        int universe;
        detail::SquareScanner& scanner;
        ListAssignment& lists;
        std::optional<ListAssignment>& counterexample;
        std::vector<int> current;

        bool run(int vertex, int seen) {
            if (vertex == g.vertex_count()) {
                if (!detail::list_colourable(g, lists, scanner)) {
                    counterexample = lists;
                    return true;
                }
                return false;
            }
            return build_list(vertex, seen, 0, -1);
        }

        // Choose the vertex's list: old symbols ascending, then fresh ones
        // (the smallest unused ids, forced, so relabel-equivalent
        // assignments are generated once).
        bool build_list(int vertex, int seen, int chosen, int last) {
            if (chosen == k) {
                lists[static_cast<std::size_t>(vertex)] = current;
                const int new_seen = std::max(seen, current.empty() ? 0 : current.back() + 1);
                return run(vertex + 1, new_seen);
            }
            const int remaining = k - chosen;
            for (int s = last + 1; s < seen; ++s) {
                current.push_back(s);
                if (build_list(vertex, seen, chosen + 1, s)) return true;
                current.pop_back();
            }
            // Take all remaining symbols fresh.
            if (seen + remaining <= universe && (current.empty() || current.back() < seen)) {
                for (int t = 0; t < remaining; ++t) current.push_back(seen + t);
                if (build_list(vertex, seen + remaining, k, seen + remaining - 1)) return true;
                for (int t = 0; t < remaining; ++t) current.pop_back();
            }
            return false;
        }
    } enumerate{g, k, universe, scanner, lists, counterexample, {}};

    const bool violated = enumerate.run(0, 0);
    return {!violated, counterexample};
}

}  // namespace thuelab::colouring

#endif
