#ifndef GWIDTH_WIDTH_HPP
#define GWIDTH_WIDTH_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwidth/building_set.hpp"
#include "gwidth/errors.hpp"
#include "gwidth/graph.hpp"
#include "gwidth/polytope.hpp"
#include "gwidth/rational.hpp"
#include "gwidth/subset.hpp"

namespace gwidth {

// Width of the toric manifold attached to a graph: min over k_i > 1, minus
// one; zero when every k_i is one (the manifold is a point).
struct WidthResult {
    long long width = 0;
    std::optional<int> pivot_vertex; // smallest label attaining the minimum
    KVector k;
    std::vector<Subset> components;
    std::vector<long long> component_widths;
};

inline WidthResult gromov_width(const Graph& g, const EnumLimits& limits = {}) {
    WidthResult r;
    r.k = count_k(g, limits);
    long long best = -1;
    int pivot = 0;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        long long kv = r.k.at(v);
        if (kv > 1 && (best < 0 || kv < best)) {
            best = kv;
            pivot = v;
        }
    }
    r.width = best < 0 ? 0 : best - 1;
    if (best >= 0) r.pivot_vertex = pivot;
    r.components = connected_components(g);
    for (Subset comp : r.components) {
        long long cbest = -1;
        for (int v : elements(comp)) {
            long long kv = r.k.at(v);
            if (kv > 1 && (cbest < 0 || kv < cbest)) cbest = kv;
        }
        r.component_widths.push_back(cbest < 0 ? 0 : cbest - 1);
    }
    return r;
}

// Relabeling chart that moves the pivot (smallest label among the minimizers
// of k_i over k_i > 1) to the last position. old_of_new[j-1] is the original
// label carried by new label j.
struct PivotRelabeling {
    int pivot_original = 0;
    std::vector<int> old_of_new;
    Graph relabeled;
};

inline PivotRelabeling relabel_pivot_last(const Graph& g, const KVector& k) {
    const int last = g.vertex_count();
    long long best = -1;
    int pivot = 0;
    for (int v = 1; v <= last; ++v) {
        long long kv = k.at(v);
        if (kv > 1 && (best < 0 || kv < best)) {
            best = kv;
            pivot = v;
        }
    }
    if (pivot == 0) throw InputError("graph has no vertex with k_i > 1");
    std::vector<int> old_of_new(static_cast<std::size_t>(last));
    for (int j = 1; j <= last; ++j) old_of_new[static_cast<std::size_t>(j - 1)] = j;
    std::swap(old_of_new[static_cast<std::size_t>(pivot - 1)],
              old_of_new[static_cast<std::size_t>(last - 1)]);
    return {pivot, old_of_new, relabeled(g, old_of_new)};
}

struct Segment {
    int axis = 0; // 1-based coordinate that varies
    std::vector<Rational> from, to;
};

// A diamond: n segments along the coordinate axes meeting at one interior
// point, each of affine length rho; its presence certifies width >= rho.
struct DiamondCertificate {
    Rational rho;
    std::optional<Rational> a; // common off-axis coordinate (absent when n = 1)
    std::vector<Rational> center;
    std::vector<Segment> segments;
    std::vector<int> old_of_new; // label chart the coordinates live in
    bool containment_checked = false;
};

// Pair of parallel supporting hyperplanes <u,x> = lambda, mu whose direction
// pairs to {0,+-1} with every edge; certifies width <= lambda - mu.
struct ParallelFacetCertificate {
    std::vector<long long> u;
    Rational lambda, mu, bound;
    bool edge_pairings_ok = false;
    bool verified_geometrically = false;
    std::vector<int> old_of_new;
};

// True when removing the last vertex keeps the graph connected, i.e. [n] is a
// member of the building set. Callers relabel the pivot to the last position
// first; for a true minimal-k pivot this always holds.
inline bool check_parallel_facets_exist(const Graph& g) {
    if (g.vertex_count() < 2)
        throw InputError("parallel-facet check needs at least two vertices");
    Subset rest = g.vertices() & ~singleton(g.vertex_count());
    return is_connected_induced(g, rest);
}

namespace detail {

inline void require_connected_nontrivial(const Graph& g, const char* op) {
    if (g.vertex_count() < 2)
        throw InputError(std::string(op) + " needs at least two vertices");
    if (!is_connected(g))
        throw InputError(std::string(op) + " needs a connected graph");
}

} // namespace detail

inline DiamondCertificate lower_certificate(const Graph& g, const EnumLimits& limits = {}) {
    detail::require_connected_nontrivial(g, "lower certificate");
    const int n = g.vertex_count() - 1;
    KVector k = count_k(g, limits);
    PivotRelabeling chart = relabel_pivot_last(g, k);
    BuildingSet b = BuildingSet::from_graph(chart.relabeled, limits);
    HalfspaceSystem proj = project(hrep(b));
    const long long kp = k.at(chart.pivot_original);
    const Rational bsize(static_cast<long long>(b.size()));

    DiamondCertificate cert;
    cert.rho = Rational(kp - 1);
    cert.old_of_new = chart.old_of_new;

    if (n == 1) {
        // one-dimensional chart: the certificate is the interval itself
        Segment s;
        s.axis = 1;
        s.from = {Rational(1)};
        s.to = {Rational(kp)};
        cert.center = {(Rational(1) + Rational(kp)) / 2};
        cert.segments.push_back(std::move(s));
    } else {
        Rational a = (bsize - Rational(kp) - 1) / Rational(n - 1);
        if (a < 1 || a > Rational(kp))
            throw InternalInconsistencyError("diamond center coordinate " + to_string(a) +
                                             " escapes [1," + std::to_string(kp) + "]");
        cert.a = a;
        cert.center.assign(static_cast<std::size_t>(n), a);
        for (int axis = 1; axis <= n; ++axis) {
            Segment s;
            s.axis = axis;
            s.from.assign(static_cast<std::size_t>(n), a);
            s.to.assign(static_cast<std::size_t>(n), a);
            s.from[static_cast<std::size_t>(axis - 1)] = 1;
            s.to[static_cast<std::size_t>(axis - 1)] = Rational(kp);
            cert.segments.push_back(std::move(s));
        }
    }
    for (const Segment& s : cert.segments)
        if (!contains_segment(proj, s.from, s.to))
            throw InternalInconsistencyError("diamond segment along axis " +
                                             std::to_string(s.axis) +
                                             " leaves the polytope");
    cert.containment_checked = true;
    return cert;
}

inline ParallelFacetCertificate upper_certificate(const Graph& g,
                                                  const EnumLimits& limits = {},
                                                  bool use_geometry = false) {
    detail::require_connected_nontrivial(g, "upper certificate");
    const int n = g.vertex_count() - 1;
    KVector k = count_k(g, limits);
    PivotRelabeling chart = relabel_pivot_last(g, k);
    BuildingSet b = BuildingSet::from_graph(chart.relabeled, limits);
    HalfspaceSystem proj = project(hrep(b));
    const long long kp = k.at(chart.pivot_original);
    const long long bsz = static_cast<long long>(b.size());

    if (!check_parallel_facets_exist(chart.relabeled))
        throw InternalInconsistencyError(
            "removing the minimal-k pivot disconnected the graph");
    if (b.restriction_size(full_subset(n)) != static_cast<std::size_t>(bsz - kp))
        throw InternalInconsistencyError(
            "restriction to the pivot complement has unexpected size");

    ParallelFacetCertificate cert;
    cert.old_of_new = chart.old_of_new;
    cert.u.assign(static_cast<std::size_t>(n), 1);
    cert.lambda = Rational(bsz - 1);
    cert.mu = Rational(bsz - kp);
    cert.bound = cert.lambda - cert.mu;

    if (use_geometry && n <= limits.max_geometry_dim) {
        Polytope p = enumerate_vertices_bruteforce(proj, limits);
        if (p.vertices.empty()) throw InternalInconsistencyError("empty polytope");
        Rational lo, hi;
        bool first = true;
        for (const auto& v : p.vertices) {
            Rational s = 0;
            for (const Rational& x : v) s += x;
            if (first || s < lo) lo = s;
            if (first || s > hi) hi = s;
            first = false;
        }
        if (hi != cert.lambda || lo != cert.mu)
            throw InternalInconsistencyError("supported values " + to_string(lo) + ".." +
                                             to_string(hi) + " differ from the facet pair " +
                                             to_string(cert.mu) + ".." + to_string(cert.lambda));
        for (const EdgeDescriptor& e : edges(p)) {
            long long dot = 0;
            for (long long d : e.primitive_direction) dot += d;
            if (dot > 1 || dot < -1)
                throw InternalInconsistencyError("edge direction pairs to " +
                                                 std::to_string(dot));
        }
        cert.edge_pairings_ok = true;
        cert.verified_geometrically = true;
    } else {
        // facet-data verification: both supporting facets exist by label and
        // edge pairings follow from the edge-direction form
        int top = proj.find_by_label(singleton(n + 1));
        int bottom = proj.find_by_label(full_subset(n));
        if (top < 0 || bottom < 0)
            throw InternalInconsistencyError("expected parallel facets are missing");
        const Constraint& ct = proj.constraints[static_cast<std::size_t>(top)];
        const Constraint& cb = proj.constraints[static_cast<std::size_t>(bottom)];
        bool shapes_ok = ct.sense == Sense::Le && cb.sense == Sense::Ge &&
                         ct.rhs == cert.lambda && cb.rhs == cert.mu;
        for (long long v : ct.coeffs) shapes_ok = shapes_ok && v == 1;
        for (long long v : cb.coeffs) shapes_ok = shapes_ok && v == 1;
        if (!shapes_ok)
            throw InternalInconsistencyError("parallel facet rows have unexpected shape");
        cert.edge_pairings_ok = true;
        cert.verified_geometrically = false;
    }
    return cert;
}

inline bool check_k_inequality(const Graph& g, const EnumLimits& limits = {}) {
    detail::require_connected_nontrivial(g, "k-inequality check");
    const long long n = g.vertex_count() - 1;
    KVector k = count_k(g, limits);
    long long total = count_connected_subsets(g, limits);
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (n * k.at(v) < total - 1) return false;
    return true;
}

// The facet-size ratio f(I) = (|restriction to I| - 1) / (|I| - 1) must grow
// along one-step nested chains, and the diamond coordinate bound must
// dominate it everywhere.
inline bool check_f_monotonic(const BuildingSet& b) {
    if (!b.has_full_ground())
        throw InputError("f-monotonicity check needs the full ground set");
    const int n = b.ground_size() - 1;
    const auto& members = b.members();
    std::vector<std::size_t> sizes = b.restriction_sizes();

    for (std::size_t i = 0; i < members.size(); ++i) {
        if (cardinality(members[i]) < 2) continue;
        for (std::size_t j = 0; j < members.size(); ++j) {
            if (cardinality(members[j]) != cardinality(members[i]) + 1) continue;
            if (!is_subset_of(members[i], members[j])) continue;
            long long si = static_cast<long long>(sizes[i]) - 1;
            long long sj = static_cast<long long>(sizes[j]) - 1;
            long long ci = cardinality(members[i]) - 1;
            long long cj = cardinality(members[j]) - 1;
            if (sj * ci < si * cj) return false;
        }
    }
    if (n >= 2) {
        std::vector<long long> kc = b.member_counts_per_vertex();
        long long kp = -1;
        for (long long kv : kc)
            if (kv > 1 && (kp < 0 || kv < kp)) kp = kv;
        if (kp < 0) return true;
        long long lhs = static_cast<long long>(b.size()) - kp - 1;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (members[i] == b.full_set() || cardinality(members[i]) < 2) continue;
            long long si = static_cast<long long>(sizes[i]) - 1;
            long long ci = cardinality(members[i]) - 1;
            if (lhs * ci < si * static_cast<long long>(n - 1)) return false;
        }
    }
    return true;
}

struct MonotonicityResult {
    long long width_g = 0, width_h = 0;
    bool holds = false;
    bool strict_expected = false;
    bool strict = false;
};

// Width comparison under subgraph inclusion; violations are structural
// failures, not user errors.
inline MonotonicityResult subgraph_monotonicity(const Graph& g, const Graph& h,
                                                const EnumLimits& limits = {}) {
    if (!is_subgraph(h, g))
        throw InputError("second graph is not a subgraph of the first");
    MonotonicityResult r;
    r.width_g = gromov_width(g, limits).width;
    r.width_h = gromov_width(h, limits).width;
    r.holds = r.width_h <= r.width_g;
    r.strict_expected = h.vertex_count() < g.vertex_count();
    r.strict = r.width_h < r.width_g;
    if (!r.holds)
        throw InternalInconsistencyError("subgraph width exceeds the ambient width");
    if (r.strict_expected && !r.strict)
        throw InternalInconsistencyError("expected strict width drop for a smaller subgraph");
    return r;
}

struct NonsqueezeReport {
    long long width_g = 0, width_h = 0;
    int vertex_gap = 0;        // k = |G| - |H|
    long long stabilization = 0; // m
    bool obstructed = false;
    std::string statement;
};

inline NonsqueezeReport nonsqueezing_report(const Graph& g, const Graph& h, long long m,
                                            const EnumLimits& limits = {}) {
    if (m < 0) throw InputError("stabilization parameter must be nonnegative");
    if (!is_connected(g) || !is_connected(h))
        throw InputError("non-squeezing report needs connected graphs");
    if (!is_subgraph(h, g) || h.vertex_count() >= g.vertex_count())
        throw InputError("second graph must be a proper subgraph with fewer vertices");
    NonsqueezeReport r;
    r.width_g = gromov_width(g, limits).width;
    r.width_h = gromov_width(h, limits).width;
    r.vertex_gap = g.vertex_count() - h.vertex_count();
    r.stabilization = m;
    r.obstructed = r.width_g > r.width_h;
    if (!r.obstructed)
        throw InternalInconsistencyError("expected a strict width drop between the factors");
    r.statement =
        "width(M_G x R^{2m}) = width(M_G) = " + std::to_string(r.width_g) + " > " +
        std::to_string(r.width_h) + " = width(M_H) = width(M_H x R^{2(k+m)}); "
        "no symplectic embedding of M_G x R^{2m} into M_H x R^{2(k+m)} exists "
        "(m = " + std::to_string(m) + ", k = " + std::to_string(r.vertex_gap) + ").";
    return r;
}

} // namespace gwidth

#endif // GWIDTH_WIDTH_HPP
