#ifndef THUELAB_INDEPENDENCE_HPP
#define THUELAB_INDEPENDENCE_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "thuelab/errors.hpp"
#include "thuelab/graph.hpp"

namespace thuelab::graphs {

namespace detail {

inline std::vector<std::uint64_t> neighbour_masks(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 64) throw TooLarge("graph order above the 64-vertex mask limit");
    std::vector<std::uint64_t> mask(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbours(u)) mask[static_cast<std::size_t>(u)] |= 1ULL << v;
    }
    return mask;
}

// Branch and bound on a candidate mask: take or drop the first candidate,
// pruning when even taking everything left cannot beat the best so far.
inline void bb_independent(const std::vector<std::uint64_t>& nb, std::uint64_t candidates,
                           int current, int& best) {
    if (current + std::popcount(candidates) <= best) return;
    if (candidates == 0) {
        best = current;
        return;
    }
    const int v = std::countr_zero(candidates);
    bb_independent(nb, candidates & ~(nb[static_cast<std::size_t>(v)] | (1ULL << v)), current + 1,
                   best);
    bb_independent(nb, candidates & ~(1ULL << v), current, best);
}

inline int alpha_of_mask(const std::vector<std::uint64_t>& nb, std::uint64_t candidates) {
    int best = 0;
    bb_independent(nb, candidates, 0, best);
    return best;
}

}  // namespace detail

/// Exact maximum independent set size.
inline int independence_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    const auto nb = detail::neighbour_masks(g);
    const std::uint64_t all =
        g.vertex_count() == 64 ? ~0ULL : (1ULL << g.vertex_count()) - 1;
    return detail::alpha_of_mask(nb, all);
}

/// The lexicographically least maximum independent set, as a sorted vertex
/// list. Deterministic, so constructions that fix "a maximum independent
/// set M" are reproducible.
inline std::vector<int> maximum_independent_set(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {};
    const auto nb = detail::neighbour_masks(g);
    const std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
    const int alpha = detail::alpha_of_mask(nb, all);

    // Fix vertices in ascending order: v joins iff some maximum independent
    // set extends the chosen prefix with v using only vertices beyond v.
    std::vector<int> chosen;
    std::uint64_t chosen_mask = 0;
    std::uint64_t blocked = 0;  // neighbours of chosen vertices
    for (int v = 0; v < n && static_cast<int>(chosen.size()) < alpha; ++v) {
        const std::uint64_t bit = 1ULL << v;
        if (blocked & bit) continue;
        const std::uint64_t rest =
            all & ~((bit << 1) - 1) & ~(blocked | nb[static_cast<std::size_t>(v)] | chosen_mask);
        if (static_cast<int>(chosen.size()) + 1 + detail::alpha_of_mask(nb, rest) == alpha) {
            chosen.push_back(v);
            chosen_mask |= bit;
            blocked |= nb[static_cast<std::size_t>(v)];
        }
    }
    return chosen;
}

/// Exact maximum clique size, via the complement's independence number.
inline int clique_number(const Graph& g) { return independence_number(complement(g)); }

}  // namespace thuelab::graphs

#endif
