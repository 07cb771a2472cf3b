#ifndef THUELAB_PATHS_HPP
#define THUELAB_PATHS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "thuelab/errors.hpp"
#include "thuelab/graph.hpp"

namespace thuelab::graphs {

/// Streams every simple path with at least one vertex, each undirected path
/// exactly once, in the direction whose first endpoint is the smaller one.
/// Singletons count as paths. The visitor receives the vertex sequence and
/// returns false to abort the enumeration.
///
/// DFS from every start vertex with an on-path bitmask; a path is emitted
/// only when start <= end, which deduplicates the two traversal directions.
template <typename Visitor>
void enumerate_simple_paths(const Graph& g, Visitor&& visit) {
    const int n = g.vertex_count();
    if (n > 64) throw TooLarge("graph order above the 64-vertex mask limit");
    std::vector<int> path;
    path.reserve(static_cast<std::size_t>(n));

    struct Dfs {
        const Graph& g;
        Visitor& visit;
        std::vector<int>& path;
        std::uint64_t on_path = 0;
        bool stopped = false;

        void run(int v) {
            path.push_back(v);
            on_path |= 1ULL << v;
            if (path.front() <= path.back() && !visit(std::as_const(path))) {
                stopped = true;
            }
            if (!stopped) {
                for (int u : g.neighbours(v)) {
                    if (on_path & (1ULL << u)) continue;
                    run(u);
                    if (stopped) break;
                }
            }
            on_path &= ~(1ULL << v);
            path.pop_back();
        }
    } dfs{g, visit, path};

    for (int s = 0; s < n && !dfs.stopped; ++s) dfs.run(s);
}

/// Convenience count of all simple paths (mind the exponential growth).
inline std::size_t count_simple_paths(const Graph& g) {
    std::size_t count = 0;
    enumerate_simple_paths(g, [&](const std::vector<int>&) {
        ++count;
        return true;
    });
    return count;
}

}  // namespace thuelab::graphs

#endif
