#ifndef GWIDTH_POLYTOPE_HPP
#define GWIDTH_POLYTOPE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gwidth/building_set.hpp"
#include "gwidth/errors.hpp"
#include "gwidth/graph.hpp"
#include "gwidth/linalg.hpp"
#include "gwidth/rational.hpp"
#include "gwidth/subset.hpp"

namespace gwidth {

enum class Sense { Ge, Le, Eq };

inline const char* sense_text(Sense s) {
    switch (s) {
        case Sense::Ge: return ">=";
        case Sense::Le: return "<=";
        default: return "=";
    }
}

struct Constraint {
    std::vector<long long> coeffs;
    Rational rhs;
    Sense sense = Sense::Ge;
    std::optional<Subset> label; // building-set member; empty for synthetic rows

    Rational evaluate(std::span<const Rational> point) const {
        Rational acc = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) acc += Rational(coeffs[i]) * point[i];
        return acc;
    }

    bool satisfied_by(std::span<const Rational> point) const {
        Rational v = evaluate(point);
        switch (sense) {
            case Sense::Ge: return v >= rhs;
            case Sense::Le: return v <= rhs;
            default: return v == rhs;
        }
    }

    bool active_at(std::span<const Rational> point) const {
        return evaluate(point) == rhs;
    }
};

struct HalfspaceSystem {
    int dimension = 0;
    std::vector<Constraint> constraints;

    bool contains_point(std::span<const Rational> point) const {
        if (static_cast<int>(point.size()) != dimension)
            throw InputError("point dimension mismatch");
        for (const Constraint& c : constraints)
            if (!c.satisfied_by(point)) return false;
        return true;
    }

    // Index of the inequality labeled by the given member, or -1.
    int find_by_label(Subset label) const {
        for (std::size_t i = 0; i < constraints.size(); ++i)
            if (constraints[i].label && *constraints[i].label == label)
                return static_cast<int>(i);
        return -1;
    }
};

// Ambient H-representation: the total-sum equality plus one >= row per proper
// member, whose right-hand side is the size of the restriction to the member.
inline HalfspaceSystem hrep(const BuildingSet& b) {
    if (!b.has_full_ground())
        throw InputError("building set lacks the full ground set; "
                         "the polytope is not full-dimensional in this chart");
    const int dim = b.ground_size();
    HalfspaceSystem h;
    h.dimension = dim;

    Constraint total;
    total.coeffs.assign(static_cast<std::size_t>(dim), 1);
    total.rhs = Rational(static_cast<long long>(b.size()));
    total.sense = Sense::Eq;
    h.constraints.push_back(std::move(total));

    Subset full = b.full_set();
    for (Subset m : b.members()) {
        if (m == full) continue;
        Constraint c;
        c.coeffs.assign(static_cast<std::size_t>(dim), 0);
        for (int v : elements(m)) c.coeffs[static_cast<std::size_t>(v - 1)] = 1;
        c.rhs = Rational(static_cast<long long>(b.restriction_size(m)));
        c.sense = Sense::Ge;
        c.label = m;
        h.constraints.push_back(std::move(c));
    }
    return h;
}

// Eliminates the last coordinate via the single equality sum(x) = total. Rows
// that become all-nonpositive are negated into <= form so reports read the
// usual way (e.g. a facet containing the last vertex turns into
// sum_{i in complement} x_i <= total - rhs).
inline HalfspaceSystem project(const HalfspaceSystem& h) {
    const Constraint* eq = nullptr;
    for (const Constraint& c : h.constraints) {
        if (c.sense != Sense::Eq) continue;
        if (eq != nullptr) throw InputError("projection expects exactly one equality");
        eq = &c;
    }
    if (eq == nullptr) throw InputError("projection expects exactly one equality");
    for (long long v : eq->coeffs)
        if (v != 1) throw InputError("projection expects an all-ones equality");

    const int dim = h.dimension - 1;
    HalfspaceSystem out;
    out.dimension = dim;
    for (const Constraint& c : h.constraints) {
        if (&c == eq) continue;
        long long last = c.coeffs[static_cast<std::size_t>(dim)];
        Constraint nc;
        nc.coeffs.assign(static_cast<std::size_t>(dim), 0);
        for (int i = 0; i < dim; ++i)
            nc.coeffs[static_cast<std::size_t>(i)] =
                c.coeffs[static_cast<std::size_t>(i)] - last;
        nc.rhs = c.rhs - Rational(last) * eq->rhs;
        nc.sense = c.sense;
        nc.label = c.label;
        bool any_positive = false, any_nonzero = false;
        for (long long v : nc.coeffs) {
            if (v > 0) any_positive = true;
            if (v != 0) any_nonzero = true;
        }
        if (any_nonzero && !any_positive) {
            for (long long& v : nc.coeffs) v = -v;
            nc.rhs = -nc.rhs;
            nc.sense = (nc.sense == Sense::Ge) ? Sense::Le
                     : (nc.sense == Sense::Le) ? Sense::Ge
                                               : Sense::Eq;
        }
        out.constraints.push_back(std::move(nc));
    }
    return out;
}

struct Polytope {
    int dimension = 0;
    std::vector<std::vector<Rational>> vertices;       // sorted lexicographically
    std::vector<std::vector<int>> vertex_facets;       // active constraint indices
};

namespace detail {

struct ProcessedRow {
    std::vector<long long> coeffs;
    Rational rhs;
    Sense sense; // Ge or Le only
};

// Flattens equalities into opposing inequalities.
inline std::vector<ProcessedRow> processed_rows(const HalfspaceSystem& h) {
    std::vector<ProcessedRow> rows;
    for (const Constraint& c : h.constraints) {
        if (c.sense == Sense::Eq) {
            rows.push_back({c.coeffs, c.rhs, Sense::Ge});
            rows.push_back({c.coeffs, c.rhs, Sense::Le});
        } else {
            rows.push_back({c.coeffs, c.rhs, c.sense});
        }
    }
    return rows;
}

inline bool int_fast_path_ok(const std::vector<ProcessedRow>& rows, int dim) {
    if (dim > 9) return false;
    for (const ProcessedRow& r : rows) {
        for (long long c : r.coeffs)
            if (c < -4 || c > 4) return false;
        if (!is_integer(r.rhs)) return false;
        BigInt num = boost::multiprecision::numerator(r.rhs);
        if (boost::multiprecision::abs(num) > 1'000'000'000) return false;
    }
    return true;
}

inline long long binomial_capped(long long m, long long k, long long cap) {
    if (k < 0 || k > m) return 0;
    long long out = 1;
    for (long long i = 1; i <= k; ++i) {
        out = out * (m - k + i) / i;
        if (out > cap) return cap + 1;
    }
    return out;
}

template <typename Visit>
void for_each_combination(int m, int k, Visit&& visit) {
    if (k > m) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        visit(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Throws when a direction satisfies every homogeneous inequality: first the
// lineality test (rank deficiency), then the extreme-ray scan over
// (dim-1)-subsets, whose kernel generator comes from signed maximal minors.
inline void check_bounded(const std::vector<ProcessedRow>& rows, int dim,
                          const EnumLimits& limits) {
    if (dim == 0) return;
    auto is_recession = [&](const RationalVector& d) -> bool {
        bool fwd = true, bwd = true;
        for (const ProcessedRow& r : rows) {
            Rational dot = 0;
            for (int i = 0; i < dim; ++i)
                if (r.coeffs[static_cast<std::size_t>(i)] != 0)
                    dot += Rational(r.coeffs[static_cast<std::size_t>(i)]) *
                           d[static_cast<std::size_t>(i)];
            if (r.sense == Sense::Ge) {
                if (dot < 0) fwd = false;
                if (dot > 0) bwd = false;
            } else {
                if (dot > 0) fwd = false;
                if (dot < 0) bwd = false;
            }
            if (!fwd && !bwd) return false;
        }
        return true;
    };

    RationalMatrix all(rows.size(), RationalVector(static_cast<std::size_t>(dim)));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int i = 0; i < dim; ++i)
            all[r][static_cast<std::size_t>(i)] = rows[r].coeffs[static_cast<std::size_t>(i)];
    if (matrix_rank(all) < static_cast<std::size_t>(dim)) {
        auto d = nullspace_vector(all, static_cast<std::size_t>(dim));
        if (d) throw UnboundedSystemError("system has a lineality direction");
        throw InternalInconsistencyError("rank-deficient system without kernel vector");
    }

    const int m = static_cast<int>(rows.size());
    if (binomial_capped(m, dim - 1, limits.max_candidates) > limits.max_candidates)
        throw ResourceLimitError("boundedness scan exceeds the candidate budget");
    for_each_combination(m, dim - 1, [&](const std::vector<int>& idx) {
        RationalMatrix sub(static_cast<std::size_t>(dim - 1),
                           RationalVector(static_cast<std::size_t>(dim)));
        for (int r = 0; r < dim - 1; ++r)
            for (int i = 0; i < dim; ++i)
                sub[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] =
                    rows[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])]
                        .coeffs[static_cast<std::size_t>(i)];
        RationalVector d = kernel_by_minors(sub);
        bool nonzero = false;
        for (const Rational& v : d)
            if (v != 0) { nonzero = true; break; }
        if (nonzero && is_recession(d))
            throw UnboundedSystemError("system has an extreme recession ray");
    });
}

} // namespace detail

// All basic solutions of dim-subsets of constraint boundaries, kept when
// feasible for the whole system, deduplicated exactly and sorted. Integral
// systems with small coefficients run on a fraction-free int128 path; anything
// else falls back to rational elimination. vertex_facets is recomputed against
// the input constraints, so it also picks up activity beyond the solved basis.
inline Polytope enumerate_vertices_bruteforce(const HalfspaceSystem& h,
                                              const EnumLimits& limits = {}) {
    const int dim = h.dimension;
    if (dim > limits.max_geometry_dim)
        throw ResourceLimitError("vertex enumeration capped at dimension " +
                                 std::to_string(limits.max_geometry_dim) + " (got " +
                                 std::to_string(dim) + ")");
    auto rows = detail::processed_rows(h);
    const int m = static_cast<int>(rows.size());

    Polytope p;
    p.dimension = dim;

    if (dim == 0) {
        std::vector<Rational> origin;
        bool ok = true;
        for (const auto& r : rows) {
            bool sat = (r.sense == Sense::Ge) ? (0 >= r.rhs) : (0 <= r.rhs);
            if (!sat) { ok = false; break; }
        }
        if (ok) {
            p.vertices.push_back({});
            std::vector<int> act;
            for (std::size_t i = 0; i < h.constraints.size(); ++i)
                if (h.constraints[i].rhs == 0) act.push_back(static_cast<int>(i));
            p.vertex_facets.push_back(std::move(act));
        }
        return p;
    }

    detail::check_bounded(rows, dim, limits);
    if (detail::binomial_capped(m, dim, limits.max_candidates) > limits.max_candidates)
        throw ResourceLimitError("vertex enumeration exceeds the candidate budget");

    std::map<std::vector<Rational>, bool> found;
    const bool fast = detail::int_fast_path_ok(rows, dim);

    std::vector<long long> int_rhs;
    if (fast) {
        int_rhs.reserve(rows.size());
        for (const auto& r : rows)
            int_rhs.push_back(static_cast<long long>(
                boost::multiprecision::numerator(r.rhs).convert_to<long long>()));
    }

    detail::for_each_combination(m, dim, [&](const std::vector<int>& idx) {
        if (fast) {
            std::vector<std::vector<detail::Int128>> a(
                static_cast<std::size_t>(dim),
                std::vector<detail::Int128>(static_cast<std::size_t>(dim)));
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c)
                    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                        rows[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])]
                            .coeffs[static_cast<std::size_t>(c)];
            detail::Int128 det = detail::bareiss_determinant(a);
            if (det == 0) return;
            std::vector<detail::Int128> sol(static_cast<std::size_t>(dim));
            for (int col = 0; col < dim; ++col) {
                auto aj = a;
                for (int r = 0; r < dim; ++r)
                    aj[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] =
                        int_rhs[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])];
                sol[static_cast<std::size_t>(col)] = detail::bareiss_determinant(aj);
            }
            for (const auto& r : rows) {
                detail::Int128 lhs = 0;
                for (int c = 0; c < dim; ++c)
                    lhs += detail::Int128(r.coeffs[static_cast<std::size_t>(c)]) *
                           sol[static_cast<std::size_t>(c)];
                detail::Int128 rhs = detail::Int128(static_cast<long long>(
                                         boost::multiprecision::numerator(r.rhs)
                                             .convert_to<long long>())) * det;
                bool ok = (r.sense == Sense::Ge) == (det > 0) ? (lhs >= rhs) : (lhs <= rhs);
                if (!ok) return;
            }
            std::vector<Rational> point(static_cast<std::size_t>(dim));
            for (int c = 0; c < dim; ++c)
                point[static_cast<std::size_t>(c)] =
                    detail::rational_from_int128(sol[static_cast<std::size_t>(c)], det);
            found.emplace(std::move(point), true);
        } else {
            RationalMatrix a(static_cast<std::size_t>(dim),
                             RationalVector(static_cast<std::size_t>(dim)));
            RationalVector b(static_cast<std::size_t>(dim));
            for (int r = 0; r < dim; ++r) {
                const auto& row = rows[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])];
                for (int c = 0; c < dim; ++c)
                    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                        row.coeffs[static_cast<std::size_t>(c)];
                b[static_cast<std::size_t>(r)] = row.rhs;
            }
            auto x = solve_square(std::move(a), std::move(b));
            if (!x) return;
            for (const auto& r : rows) {
                Rational lhs = 0;
                for (int c = 0; c < dim; ++c)
                    if (r.coeffs[static_cast<std::size_t>(c)] != 0)
                        lhs += Rational(r.coeffs[static_cast<std::size_t>(c)]) *
                               (*x)[static_cast<std::size_t>(c)];
                bool ok = (r.sense == Sense::Ge) ? (lhs >= r.rhs) : (lhs <= r.rhs);
                if (!ok) return;
            }
            found.emplace(std::move(*x), true);
        }
    });

    for (auto& [point, unused] : found) {
        (void)unused;
        std::vector<int> act;
        for (std::size_t i = 0; i < h.constraints.size(); ++i)
            if (h.constraints[i].active_at(point)) act.push_back(static_cast<int>(i));
        p.vertices.push_back(point);
        p.vertex_facets.push_back(std::move(act));
    }
    return p;
}

// Nested collections: n proper members, pairwise nested or disjoint, with no
// pairwise-disjoint subfamily whose union is again a member. These are in
// bijection with the vertices. The disjoint-union bookkeeping carries every
// union of a pairwise-disjoint subfamily of the current stack, so a violation
// is caught the moment the offending member is pushed.
inline std::vector<std::vector<Subset>> enumerate_vertices_nested(
    const BuildingSet& b, const EnumLimits& limits = {}) {
    if (!b.has_full_ground())
        throw InputError("nested-collection enumeration needs the full ground set");
    const int n = b.ground_size() - 1;
    if (n > limits.max_geometry_dim)
        throw ResourceLimitError("nested-collection enumeration capped at dimension " +
                                 std::to_string(limits.max_geometry_dim));
    std::vector<Subset> facets;
    for (Subset m : b.members())
        if (m != b.full_set()) facets.push_back(m);
    const int f = static_cast<int>(facets.size());

    std::vector<std::vector<bool>> compatible(
        static_cast<std::size_t>(f), std::vector<bool>(static_cast<std::size_t>(f), false));
    for (int i = 0; i < f; ++i)
        for (int j = i + 1; j < f; ++j) {
            Subset x = facets[static_cast<std::size_t>(i)];
            Subset y = facets[static_cast<std::size_t>(j)];
            bool ok = ((x & y) == 0) || is_subset_of(x, y) || is_subset_of(y, x);
            compatible[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ok;
            compatible[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = ok;
        }

    std::vector<std::vector<Subset>> out;
    std::vector<int> chosen;
    struct DisjointUnion { Subset mask; int size; };
    std::vector<DisjointUnion> unions;

    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(chosen.size()) == n) {
            std::vector<Subset> collection;
            collection.reserve(chosen.size());
            for (int i : chosen) collection.push_back(facets[static_cast<std::size_t>(i)]);
            out.push_back(std::move(collection));
            return;
        }
        int remaining = n - static_cast<int>(chosen.size());
        for (int i = next; i <= f - remaining; ++i) {
            bool ok = true;
            for (int c : chosen)
                if (!compatible[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            Subset cand = facets[static_cast<std::size_t>(i)];
            std::size_t mark = unions.size();
            bool violated = false;
            std::vector<DisjointUnion> added;
            added.push_back({cand, 1});
            for (std::size_t u = 0; u < mark && !violated; ++u) {
                if ((unions[u].mask & cand) != 0) continue;
                Subset merged = unions[u].mask | cand;
                if (b.contains(merged)) { violated = true; break; }
                added.push_back({merged, unions[u].size + 1});
            }
            if (violated) continue;
            for (auto& a : added) unions.push_back(a);
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
            unions.resize(mark);
        }
    };
    rec(rec, 0);
    return out;
}

struct EdgeDescriptor {
    int v0 = 0, v1 = 0;                        // vertex indices, v0 < v1
    std::vector<long long> primitive_direction; // gcd 1, first nonzero positive
    Rational affine_length;                     // endpoint difference / primitive
};

namespace detail {

// Integer primitive vector parallel to a rational difference, first nonzero
// entry positive; also returns the (positive) affine length.
inline std::pair<std::vector<long long>, Rational> primitive_of(
    const std::vector<Rational>& diff) {
    BigInt lcm = 1;
    for (const Rational& d : diff) {
        BigInt den = boost::multiprecision::denominator(d);
        lcm = boost::multiprecision::lcm(lcm, den);
    }
    std::vector<BigInt> ints(diff.size());
    BigInt g = 0;
    for (std::size_t i = 0; i < diff.size(); ++i) {
        ints[i] = boost::multiprecision::numerator(diff[i] * Rational(lcm));
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(ints[i]));
    }
    if (g == 0) throw InternalInconsistencyError("zero edge direction");
    bool flip = false;
    for (const BigInt& v : ints) {
        if (v == 0) continue;
        flip = v < 0;
        break;
    }
    std::vector<long long> prim(diff.size(), 0);
    for (std::size_t i = 0; i < diff.size(); ++i) {
        BigInt q = ints[i] / g;
        if (flip) q = -q;
        prim[i] = q.convert_to<long long>();
    }
    // affine length: the ratio diff = t * primitive
    Rational t = 0;
    for (std::size_t i = 0; i < diff.size(); ++i)
        if (prim[i] != 0) {
            t = diff[i] / Rational(prim[i]);
            break;
        }
    if (t < 0) t = -t;
    return {std::move(prim), std::move(t)};
}

} // namespace detail

// Two vertices of a simple n-polytope span an edge exactly when they share
// n-1 active facets.
inline std::vector<EdgeDescriptor> edges(const Polytope& p) {
    const int n = p.dimension;
    std::vector<EdgeDescriptor> out;
    if (n == 0) return out;
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        if (static_cast<int>(p.vertex_facets[v].size()) > n)
            throw SimplicityError("vertex " + std::to_string(v) + " lies on " +
                                  std::to_string(p.vertex_facets[v].size()) +
                                  " facets in dimension " + std::to_string(n));
        if (static_cast<int>(p.vertex_facets[v].size()) < n)
            throw InternalInconsistencyError("vertex with fewer active facets than the dimension");
    }
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < p.vertices.size(); ++j) {
            std::vector<int> shared;
            std::set_intersection(p.vertex_facets[i].begin(), p.vertex_facets[i].end(),
                                  p.vertex_facets[j].begin(), p.vertex_facets[j].end(),
                                  std::back_inserter(shared));
            if (static_cast<int>(shared.size()) != n - 1) continue;
            std::vector<Rational> diff(static_cast<std::size_t>(n));
            for (int c = 0; c < n; ++c)
                diff[static_cast<std::size_t>(c)] =
                    p.vertices[j][static_cast<std::size_t>(c)] -
                    p.vertices[i][static_cast<std::size_t>(c)];
            auto [prim, len] = detail::primitive_of(diff);
            out.push_back({static_cast<int>(i), static_cast<int>(j), std::move(prim), std::move(len)});
        }
    }
    return out;
}

// Projected edge directions of these polytopes must be +-e_j or e_j - e_k;
// lifted back to the ambient sum hyperplane both forms equal e_j - e_k.
inline bool verify_edge_directions(const Polytope& p) {
    for (const EdgeDescriptor& e : edges(p)) {
        int positives = 0, negatives = 0;
        bool small = true;
        for (long long v : e.primitive_direction) {
            if (v > 1 || v < -1) { small = false; break; }
            if (v == 1) ++positives;
            if (v == -1) ++negatives;
        }
        if (!small) return false;
        int nonzeros = positives + negatives;
        bool unit = nonzeros == 1;
        bool difference = nonzeros == 2 && positives == 1;
        if (!unit && !difference) return false;
    }
    return true;
}

// At every vertex the primitive facet normals must form a +-1 determinant
// basis. Orientation does not change |det|, so stored row signs are fine.
inline bool delzant_check(const Polytope& p, const HalfspaceSystem& h) {
    const int n = p.dimension;
    if (n == 0) return true;
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        const auto& act = p.vertex_facets[v];
        if (static_cast<int>(act.size()) > n)
            throw SimplicityError("vertex " + std::to_string(v) + " lies on " +
                                  std::to_string(act.size()) + " facets in dimension " +
                                  std::to_string(n));
        if (static_cast<int>(act.size()) < n)
            throw InternalInconsistencyError("vertex with fewer active facets than the dimension");
        RationalMatrix m(static_cast<std::size_t>(n), RationalVector(static_cast<std::size_t>(n)));
        for (int r = 0; r < n; ++r) {
            const auto& coeffs = h.constraints[static_cast<std::size_t>(act[static_cast<std::size_t>(r)])].coeffs;
            long long g = 0;
            for (long long c : coeffs) g = std::gcd(g, c < 0 ? -c : c);
            if (g == 0) throw InternalInconsistencyError("zero facet normal");
            for (int c = 0; c < n; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    Rational(coeffs[static_cast<std::size_t>(c)] / g);
        }
        Rational det = determinant(std::move(m));
        if (det != 1 && det != -1) return false;
    }
    return true;
}

// Every inequality should support a face of affine dimension n-1 (a facet).
inline bool facets_irredundant(const Polytope& p, const HalfspaceSystem& h) {
    const int n = p.dimension;
    for (std::size_t ci = 0; ci < h.constraints.size(); ++ci) {
        if (h.constraints[ci].sense == Sense::Eq) continue;
        std::vector<std::size_t> on;
        for (std::size_t v = 0; v < p.vertices.size(); ++v)
            if (std::binary_search(p.vertex_facets[v].begin(), p.vertex_facets[v].end(),
                                   static_cast<int>(ci)))
                on.push_back(v);
        if (on.empty()) return false;
        if (n == 0) continue;
        RationalMatrix rel;
        for (std::size_t k = 1; k < on.size(); ++k) {
            RationalVector row(static_cast<std::size_t>(n));
            for (int c = 0; c < n; ++c)
                row[static_cast<std::size_t>(c)] =
                    p.vertices[on[k]][static_cast<std::size_t>(c)] -
                    p.vertices[on[0]][static_cast<std::size_t>(c)];
            rel.push_back(std::move(row));
        }
        std::size_t dim_of_face = rel.empty() ? 0 : matrix_rank(std::move(rel));
        if (dim_of_face != static_cast<std::size_t>(n - 1)) return false;
    }
    return true;
}

// Support function of the Minkowski sum of member simplices: the sum over
// members of the largest weight inside each member.
inline Rational support_minkowski(const BuildingSet& b, std::span<const long long> w) {
    if (static_cast<int>(w.size()) != b.ground_size())
        throw InputError("direction dimension mismatch");
    long long total = 0;
    for (Subset m : b.members()) {
        long long best = 0;
        bool first = true;
        Subset s = m;
        while (s != 0) {
            long long v = w[static_cast<std::size_t>(min_element(s) - 1)];
            if (first || v > best) best = v;
            first = false;
            s &= s - 1;
        }
        total += best;
    }
    return Rational(total);
}

// By convexity a segment lies inside iff both endpoints do.
inline bool contains_segment(const HalfspaceSystem& h, std::span<const Rational> p,
                             std::span<const Rational> q) {
    if (p.size() != q.size()) throw InputError("segment endpoint dimension mismatch");
    return h.contains_point(p) && h.contains_point(q);
}

inline std::vector<Rational> lift_to_ambient(std::span<const Rational> v, const Rational& total) {
    std::vector<Rational> out(v.begin(), v.end());
    Rational sum = 0;
    for (const Rational& x : v) sum += x;
    out.push_back(total - sum);
    return out;
}

} // namespace gwidth

#endif // GWIDTH_POLYTOPE_HPP
