#ifndef THUELAB_BOUNDS_HPP
#define THUELAB_BOUNDS_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "thuelab/colouring.hpp"
#include "thuelab/errors.hpp"
#include "thuelab/families.hpp"
#include "thuelab/graph.hpp"
#include "thuelab/graph6.hpp"
#include "thuelab/independence.hpp"
#include "thuelab/product.hpp"
#include "thuelab/solver.hpp"

namespace thuelab::bounds {

/// pi(H) + (|V(G)| - alpha(G)) * |V(H)|, an upper bound for pi(G o H):
/// colour the layers over a maximum independent set of G identically and
/// everything else with fresh colours.
inline int upper_bound_product(int pi_h, int n_g, int alpha_g, int n_h) {
    if (pi_h < 1 || n_g < 1 || alpha_g < 1 || n_h < 1) {
        throw BadParameter("bound inputs must be positive");
    }
    if (alpha_g > n_g) throw BadParameter("alpha(G) cannot exceed |V(G)|");
    if (pi_h > n_h) throw BadParameter("pi(H) cannot exceed |V(H)|");
    return pi_h + (n_g - alpha_g) * n_h;
}

/// pi(H) + (pi(G) - 1) * |V(H)|, the conjectured lower bound for pi(G o H).
inline int lower_bound_conjecture(int pi_h, int pi_g, int n_h) {
    if (pi_h < 1 || pi_g < 1 || n_h < 1) throw BadParameter("bound inputs must be positive");
    if (pi_h > n_h) throw BadParameter("pi(H) cannot exceed |V(H)|");
    return pi_h + (pi_g - 1) * n_h;
}

/// Exact pi(G o H) for complete multipartite G: the conjectured lower bound
/// meets the independent-set upper bound there.
inline int multipartite_product_pi(const graphs::MultipartiteSpec& spec, int pi_h, int n_h) {
    const int pi_g = colouring::multipartite_exact_pi(spec);
    return lower_bound_conjecture(pi_h, pi_g, n_h);
}

/// Closed-form value attached to a certificate, with the formula that
/// produced it.
struct ClosedForm {
    int value;
    std::string provenance;
};

/// Everything computed for one product instance. lower/upper are evaluated
/// with exact factor data, so lower <= upper always holds; exact, when
/// present, is the solver value for the product itself.
struct BoundsCertificate {
    std::string g_descriptor;
    std::string h_descriptor;
    std::string g_graph6;
    std::string h_graph6;
    int pi_g = 0;
    int pi_h = 0;
    int lower_conjectured = 0;
    int upper_theorem = 0;
    std::optional<int> exact;
    std::optional<colouring::Colouring> witness;
    std::optional<ClosedForm> closed_form;

    bool conjecture_holds() const { return !exact || *exact >= lower_conjectured; }
};

struct PiCheckRecord {
    int pi_exact;
    int upper_n_minus_alpha_plus_1;
    bool is_multipartite;
    bool equality_expected;
    bool equality_observed;
};

/// Compares the solver against the independence upper bound
/// n - alpha(G) + 1, flagging complete multipartite graphs where equality
/// is guaranteed.
inline PiCheckRecord theorem_pi_check(const graphs::Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw BadParameter("theorem_pi_check needs a nonempty graph");
    if (n > 9) throw TooLarge("theorem_pi_check is guarded to 9 vertices");
    const int pi = colouring::exact_pi(g).pi;
    const int upper = n - graphs::independence_number(g) + 1;
    const auto spec = graphs::as_complete_multipartite(g);
    PiCheckRecord record{pi, upper, spec.has_value(), spec.has_value(), pi == upper};
    if (pi > upper) throw Error("independence upper bound violated: solver or bound is wrong");
    if (record.equality_expected && !record.equality_observed) {
        throw Error("multipartite equality violated: solver or formula is wrong");
    }
    return record;
}

/// One row of a conjecture sweep, keyed canonically by the graph6 pair.
struct SweepRecord {
    BoundsCertificate certificate;

    std::pair<std::string, std::string> key() const {
        return {certificate.g_graph6, certificate.h_graph6};
    }
};

struct SweepReport {
    int max_product_order = 0;
    std::vector<SweepRecord> records;  // sorted by key

    std::size_t counterexample_count() const {
        std::size_t count = 0;
        for (const auto& r : records) {
            if (!r.certificate.conjecture_holds()) ++count;
        }
        return count;
    }
};

/// Built-in family pool for sweeps: named families up to the given order,
/// deduplicated by graph6 string (isomorphic graphs with different labels
/// stay separate; that only repeats work, never hides a counterexample).
inline std::vector<std::pair<std::string, graphs::Graph>> default_family_pool(int max_order) {
    std::vector<std::pair<std::string, graphs::Graph>> pool;
    std::map<std::string, bool> seen;
    auto add = [&](const std::string& desc) {
        graphs::Graph g = graphs::make_family(desc);
        if (g.vertex_count() > max_order) return;
        const std::string key = graphs::to_graph6(g);
        if (!seen.emplace(key, true).second) return;
        pool.emplace_back(desc, std::move(g));
    };
    for (int n = 1; n <= max_order; ++n) add("K" + std::to_string(n));
    for (int n = 2; n <= max_order; ++n) add("E" + std::to_string(n));
    for (int n = 2; n <= max_order; ++n) add("P" + std::to_string(n));
    for (int n = 3; n <= max_order; ++n) add("C" + std::to_string(n));
    for (int n = 1; n + 1 <= max_order; ++n) add("S" + std::to_string(n));
    for (int m = 1; m <= max_order / 2; ++m) {
        for (int n = m; m + n <= max_order; ++n) {
            add("K" + std::to_string(m) + "," + std::to_string(n));
        }
    }
    return pool;
}

namespace detail {

struct FactorData {
    int pi = 0;
    int alpha = 0;
    bool has_edge = false;
};

}  // namespace detail

/// Runs the solver over every factor pair with |V(G)| * |V(H)| within the
/// bound and certifies the conjectured lower bound against the exact value.
/// Records are computed independently (optionally on several threads) and
/// assembled in canonical key order, so the report is byte-stable. Pairs
/// whose key satisfies `skip` are left out, which makes interrupted sweeps
/// resumable from their partial reports.
inline SweepReport sweep_conjecture(
    int max_product_order,
    const std::vector<std::pair<std::string, graphs::Graph>>& pool_g,
    const std::vector<std::pair<std::string, graphs::Graph>>& pool_h, bool force = false,
    unsigned threads = 1,
    const std::function<bool(const std::string&, const std::string&)>& skip = nullptr) {
    if (max_product_order < 1) throw BadParameter("max product order must be positive");
    if (max_product_order > 12 && !force) {
        throw TooLarge("sweep guarded to product order 12; pass force to override");
    }

    // Factor solves are shared across pairs.
    std::map<std::string, detail::FactorData> factor_cache;
    std::mutex cache_mutex;
    auto factor_data = [&](const graphs::Graph& g, const std::string& g6) {
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            auto it = factor_cache.find(g6);
            if (it != factor_cache.end()) return it->second;
        }
        detail::FactorData data{colouring::exact_pi(g).pi, graphs::independence_number(g),
                                g.edge_count() > 0};
        std::lock_guard<std::mutex> lock(cache_mutex);
        factor_cache.emplace(g6, data);
        return data;
    };

    struct Instance {
        std::pair<std::string, std::string> key;
        const std::pair<std::string, graphs::Graph>* g;
        const std::pair<std::string, graphs::Graph>* h;
    };
    std::vector<Instance> instances;
    for (const auto& g_entry : pool_g) {
        for (const auto& h_entry : pool_h) {
            const long long order = static_cast<long long>(g_entry.second.vertex_count()) *
                                    h_entry.second.vertex_count();
            if (order > max_product_order) continue;
            Instance inst{{graphs::to_graph6(g_entry.second), graphs::to_graph6(h_entry.second)},
                          &g_entry,
                          &h_entry};
            if (skip && skip(inst.key.first, inst.key.second)) continue;
            instances.push_back(std::move(inst));
        }
    }
    std::sort(instances.begin(), instances.end(),
              [](const Instance& a, const Instance& b) { return a.key < b.key; });
    instances.erase(std::unique(instances.begin(), instances.end(),
                                [](const Instance& a, const Instance& b) { return a.key == b.key; }),
                    instances.end());

    std::vector<SweepRecord> records(instances.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) return;
            {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (failure) return;
            }
            const Instance& inst = instances[i];
            const graphs::Graph& g = inst.g->second;
            const graphs::Graph& h = inst.h->second;
            const auto g_data = factor_data(g, inst.key.first);
            const auto h_data = factor_data(h, inst.key.second);

            BoundsCertificate cert;
            cert.g_descriptor = inst.g->first;
            cert.h_descriptor = inst.h->first;
            cert.g_graph6 = inst.key.first;
            cert.h_graph6 = inst.key.second;
            cert.pi_g = g_data.pi;
            cert.pi_h = h_data.pi;
            cert.lower_conjectured = lower_bound_conjecture(h_data.pi, g_data.pi, h.vertex_count());
            cert.upper_theorem =
                upper_bound_product(h_data.pi, g.vertex_count(), g_data.alpha, h.vertex_count());

            const graphs::Graph product = graphs::lex_product(g, h);
            const int hint = colouring::product_pi_lower_hint(g_data.pi, h_data.pi,
                                                              h.vertex_count(), g_data.has_edge);
            auto result = colouring::exact_pi(product, hint);
            cert.exact = result.pi;
            cert.witness = std::move(result.witness);
            if (const auto spec = graphs::as_complete_multipartite(g)) {
                cert.closed_form = ClosedForm{
                    multipartite_product_pi(*spec, h_data.pi, h.vertex_count()),
                    "complete-multipartite-product"};
            }
            if (*cert.exact > cert.upper_theorem) {
                throw Error("product exceeded its proven upper bound: solver is wrong");
            }
            records[i].certificate = std::move(cert);
        }
    };

    const unsigned worker_count = std::max(1u, threads);
    if (worker_count == 1) {
        worker();
    } else {
        std::vector<std::thread> team;
        team.reserve(worker_count);
        for (unsigned t = 0; t < worker_count; ++t) team.emplace_back(worker);
        for (auto& t : team) t.join();
    }

    return SweepReport{max_product_order, std::move(records)};
}

}  // namespace thuelab::bounds

#endif
