#ifndef GWIDTH_GRAPH_HPP
#define GWIDTH_GRAPH_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "gwidth/errors.hpp"
#include "gwidth/subset.hpp"

namespace gwidth {

// Caps for the exponential operations. Materializing a building set is
// allowed up to max_materialize vertices, pure counting up to max_count,
// and vertex enumeration up to projected dimension max_geometry_dim with at
// most max_candidates basis subsets.
struct EnumLimits {
    int max_materialize = 16;
    int max_count = 20;
    int max_geometry_dim = 8;
    long long max_candidates = 20'000'000;
};

// Simple undirected graph on the labeled vertex set [n+1].
class Graph {
public:
    explicit Graph(int vertex_count) : vertex_count_(vertex_count) {
        if (vertex_count < 1) throw InputError("graph needs at least one vertex");
        if (vertex_count > kMaxGroundSize)
            throw InputError("graph exceeds the supported " +
                             std::to_string(kMaxGroundSize) + "-vertex limit");
        adj_.assign(static_cast<std::size_t>(vertex_count), Subset{0});
    }

    int vertex_count() const { return vertex_count_; }
    Subset vertices() const { return full_subset(vertex_count_); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        adj_[u - 1] |= singleton(v);
        adj_[v - 1] |= singleton(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return subset_contains(adj_[u - 1], v);
    }

    Subset neighbors(int v) const {
        check_vertex(v);
        return adj_[v - 1];
    }

    // Union of neighborhoods over the members of s (may intersect s).
    Subset neighborhood(Subset s) const {
        Subset out = 0;
        while (s != 0) {
            int v = min_element(s);
            out |= adj_[v - 1];
            s &= s - 1;
        }
        return out;
    }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 1; u <= vertex_count_; ++u) {
            Subset rest = adj_[u - 1] & ~full_subset(u);
            while (rest != 0) {
                out.emplace_back(u, min_element(rest));
                rest &= rest - 1;
            }
        }
        return out;
    }

    std::size_t edge_count() const { return edge_list().size(); }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 1 || v > vertex_count_)
            throw InputError("vertex " + std::to_string(v) + " out of range [1," +
                             std::to_string(vertex_count_) + "]");
    }

    int vertex_count_;
    std::vector<Subset> adj_;
};

// k_i = number of connected induced subgraphs containing vertex i.
struct KVector {
    std::vector<long long> counts; // counts[v-1] = k_v

    long long at(int v) const { return counts[static_cast<std::size_t>(v - 1)]; }
    int size() const { return static_cast<int>(counts.size()); }
};

inline void check_vertex_subset(const Graph& g, Subset s) {
    if (s == 0) throw InputError("vertex subset must be nonempty");
    if (!is_subset_of(s, g.vertices()))
        throw InputError("vertex subset " + subset_to_string(s) +
                         " is not contained in the vertex set");
}

// Single vertices count as connected.
inline bool is_connected_induced(const Graph& g, Subset s) {
    check_vertex_subset(g, s);
    Subset reached = singleton(min_element(s));
    for (;;) {
        Subset grown = reached | (g.neighborhood(reached) & s);
        if (grown == reached) break;
        reached = grown;
    }
    return reached == s;
}

// Visits every nonempty connected vertex subset exactly once. Sets are grown
// from their smallest vertex through the neighbor frontier; a branch that
// skips a frontier vertex bans it for the rest of that subtree, so no set is
// produced twice.
template <typename Emit>
void for_each_connected_subset(const Graph& g, Emit&& emit) {
    auto grow = [&](auto&& self, Subset s, Subset banned) -> void {
        emit(s);
        Subset frontier = g.neighborhood(s) & ~s & ~banned;
        Subset blocked = banned;
        while (frontier != 0) {
            Subset low = frontier & (~frontier + 1);
            self(self, s | low, blocked);
            blocked |= low;
            frontier ^= low;
        }
    };
    for (int v = 1; v <= g.vertex_count(); ++v) {
        Subset anchor = singleton(v);
        grow(grow, anchor, anchor - 1); // vertices below v are banned
    }
}

inline std::vector<Subset> enumerate_connected_subsets(const Graph& g,
                                                       const EnumLimits& limits = {}) {
    if (g.vertex_count() > limits.max_materialize)
        throw ResourceLimitError("building-set materialization capped at " +
                                 std::to_string(limits.max_materialize) +
                                 " vertices (got " + std::to_string(g.vertex_count()) + ")");
    std::vector<Subset> out;
    for_each_connected_subset(g, [&](Subset s) { out.push_back(s); });
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

inline long long count_connected_subsets(const Graph& g, const EnumLimits& limits = {}) {
    if (g.vertex_count() > limits.max_count)
        throw ResourceLimitError("connected-subgraph counting capped at " +
                                 std::to_string(limits.max_count) + " vertices (got " +
                                 std::to_string(g.vertex_count()) + ")");
    long long total = 0;
    for_each_connected_subset(g, [&](Subset) { ++total; });
    return total;
}

inline KVector count_k(const Graph& g, const EnumLimits& limits = {}) {
    if (g.vertex_count() > limits.max_count)
        throw ResourceLimitError("connected-subgraph counting capped at " +
                                 std::to_string(limits.max_count) + " vertices (got " +
                                 std::to_string(g.vertex_count()) + ")");
    KVector k;
    k.counts.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    for_each_connected_subset(g, [&](Subset s) {
        while (s != 0) {
            ++k.counts[static_cast<std::size_t>(min_element(s) - 1)];
            s &= s - 1;
        }
    });
    return k;
}

// Maximal connected vertex sets, ordered by smallest member.
inline std::vector<Subset> connected_components(const Graph& g) {
    std::vector<Subset> out;
    Subset remaining = g.vertices();
    while (remaining != 0) {
        Subset comp = singleton(min_element(remaining));
        for (;;) {
            Subset grown = comp | (g.neighborhood(comp) & remaining);
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(comp);
        remaining &= ~comp;
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    return is_connected_induced(g, g.vertices());
}

// Relabels vertices; old_of_new[j-1] is the original label of new label j.
inline Graph relabeled(const Graph& g, const std::vector<int>& old_of_new) {
    Graph out(g.vertex_count());
    std::vector<int> new_of_old(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (int j = 1; j <= g.vertex_count(); ++j)
        new_of_old[static_cast<std::size_t>(old_of_new[static_cast<std::size_t>(j - 1)])] = j;
    for (auto [u, v] : g.edge_list())
        out.add_edge(new_of_old[static_cast<std::size_t>(u)],
                     new_of_old[static_cast<std::size_t>(v)]);
    return out;
}

// True when h's vertex set [m] and edges embed identically into g.
inline bool is_subgraph(const Graph& h, const Graph& g) {
    if (h.vertex_count() > g.vertex_count()) return false;
    for (auto [u, v] : h.edge_list())
        if (!g.has_edge(u, v)) return false;
    return true;
}

} // namespace gwidth

#endif // GWIDTH_GRAPH_HPP
