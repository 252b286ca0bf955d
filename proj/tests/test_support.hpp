#ifndef GWIDTH_TEST_SUPPORT_HPP
#define GWIDTH_TEST_SUPPORT_HPP

// Test-only oracles, kept independent of the library's own algorithms: plain
// adjacency-matrix BFS and power-set filtering.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "gwidth/graph.hpp"
#include "gwidth/subset.hpp"

namespace testsupport {

inline gwidth::Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    gwidth::Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

// BFS over an adjacency matrix built straight from the edge list.
inline bool bfs_connected(const gwidth::Graph& g, gwidth::Subset s) {
    const int n = g.vertex_count();
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n + 1),
                                       std::vector<bool>(static_cast<std::size_t>(n + 1), false));
    for (auto [u, v] : g.edge_list()) {
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
        adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    }
    std::vector<int> members = gwidth::elements(s);
    if (members.empty()) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
    std::vector<int> queue{members.front()};
    seen[static_cast<std::size_t>(members.front())] = true;
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        for (int v : members) {
            if (seen[static_cast<std::size_t>(v)] ||
                !adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
                continue;
            seen[static_cast<std::size_t>(v)] = true;
            queue.push_back(v);
        }
    }
    for (int v : members)
        if (!seen[static_cast<std::size_t>(v)]) return false;
    return true;
}

// Every nonempty subset, filtered by the BFS oracle.
inline std::vector<gwidth::Subset> powerset_connected(const gwidth::Graph& g) {
    std::vector<gwidth::Subset> out;
    gwidth::Subset full = g.vertices();
    for (gwidth::Subset s = 1; s <= full; ++s)
        if (bfs_connected(g, s)) out.push_back(s);
    std::sort(out.begin(), out.end(), gwidth::canonical_less);
    return out;
}

// Portable bounded draw (uniform_int_distribution is not cross-platform
// stable, and these are fixed-seed tests).
inline long long draw(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Random connected graph: random attachment tree plus extra random edges.
inline gwidth::Graph random_connected_graph(std::mt19937_64& rng, int n) {
    gwidth::Graph g(n);
    for (int v = 2; v <= n; ++v)
        g.add_edge(static_cast<int>(draw(rng, 1, v - 1)), v);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!g.has_edge(u, v) && draw(rng, 0, 3) == 0) g.add_edge(u, v);
    return g;
}

// Random relabeling of the vertex set.
inline gwidth::Graph random_permuted(std::mt19937_64& rng, const gwidth::Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) order[static_cast<std::size_t>(i)] = i + 1;
    for (int i = g.vertex_count() - 1; i > 0; --i)
        std::swap(order[static_cast<std::size_t>(i)],
                  order[static_cast<std::size_t>(draw(rng, 0, i))]);
    return gwidth::relabeled(g, order);
}

// All labeled graphs on n vertices whose edge subset makes them connected.
template <typename Visit>
void for_each_connected_graph(int n, Visit&& visit) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        gwidth::Graph g(n);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1) g.add_edge(slots[i].first, slots[i].second);
        if (bfs_connected(g, g.vertices())) visit(g);
    }
}

} // namespace testsupport

#endif // GWIDTH_TEST_SUPPORT_HPP
