#ifndef GWIDTH_NESTOHEDRON_HPP
#define GWIDTH_NESTOHEDRON_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwidth/building_set.hpp"
#include "gwidth/errors.hpp"
#include "gwidth/polytope.hpp"
#include "gwidth/rational.hpp"
#include "gwidth/width.hpp"

namespace gwidth {

namespace detail {

// Rows in >= form: (coeffs, rhs) meaning coeffs . x >= rhs.
struct GeRow {
    std::vector<long long> coeffs;
    Rational rhs;
};

inline std::vector<GeRow> ge_rows(const HalfspaceSystem& h) {
    std::vector<GeRow> rows;
    for (const Constraint& c : h.constraints) {
        if (c.sense == Sense::Eq)
            throw InputError("chord computations expect an inequality system");
        GeRow r{c.coeffs, c.rhs};
        if (c.sense == Sense::Le) {
            for (long long& v : r.coeffs) v = -v;
            r.rhs = -r.rhs;
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

// Maximal chord [l_i, u_i] through the point along coordinate axis i; the
// point must be feasible. Returns nothing when either side is unsupported
// (impossible for a bounded system).
inline std::optional<std::pair<Rational, Rational>> chord_through(
    const std::vector<GeRow>& rows, const std::vector<Rational>& point, int axis) {
    std::optional<Rational> lo, hi;
    for (const GeRow& r : rows) {
        long long ai = r.coeffs[static_cast<std::size_t>(axis - 1)];
        if (ai == 0) continue;
        Rational rest = 0;
        for (std::size_t j = 0; j < r.coeffs.size(); ++j) {
            if (static_cast<int>(j) == axis - 1 || r.coeffs[j] == 0) continue;
            rest += Rational(r.coeffs[j]) * point[j];
        }
        Rational bound = (r.rhs - rest) / Rational(ai);
        if (ai > 0) {
            if (!lo || bound > *lo) lo = bound;
        } else {
            if (!hi || bound < *hi) hi = bound;
        }
    }
    if (!lo || !hi) return std::nullopt;
    return std::make_pair(*lo, *hi);
}

// Lifted system over (x, rho): the base rows, rho >= 0, and one row per
// (lower,upper) facet pair and axis demanding an axis chord of length >= rho
// through x. Vertices of this polytope realize max rho exactly, so the best
// axis-aligned diamond drops out of vertex enumeration.
inline HalfspaceSystem chord_lp_system(const HalfspaceSystem& base) {
    const int n = base.dimension;
    auto rows = ge_rows(base);
    HalfspaceSystem lifted;
    lifted.dimension = n + 1;
    for (const GeRow& r : rows) {
        Constraint c;
        c.coeffs = r.coeffs;
        c.coeffs.push_back(0);
        c.rhs = r.rhs;
        c.sense = Sense::Ge;
        lifted.constraints.push_back(std::move(c));
    }
    Constraint nonneg;
    nonneg.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
    nonneg.coeffs.back() = 1;
    nonneg.rhs = 0;
    nonneg.sense = Sense::Ge;
    lifted.constraints.push_back(std::move(nonneg));

    for (int axis = 1; axis <= n; ++axis) {
        for (const GeRow& low : rows) {
            long long alpha = low.coeffs[static_cast<std::size_t>(axis - 1)];
            if (alpha <= 0) continue;
            for (const GeRow& up : rows) {
                long long beta = -up.coeffs[static_cast<std::size_t>(axis - 1)];
                if (beta <= 0) continue;
                // alpha*(up . x - up.rhs) + beta*(low . x - low.rhs) >= alpha*beta*rho
                Constraint c;
                c.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
                for (int j = 0; j < n; ++j)
                    c.coeffs[static_cast<std::size_t>(j)] =
                        alpha * up.coeffs[static_cast<std::size_t>(j)] +
                        beta * low.coeffs[static_cast<std::size_t>(j)];
                c.coeffs.back() = -alpha * beta;
                c.rhs = Rational(alpha) * up.rhs + Rational(beta) * low.rhs;
                c.sense = Sense::Ge;
                lifted.constraints.push_back(std::move(c));
            }
        }
    }
    return lifted;
}

} // namespace detail

// Bound report for a nestohedron that need not come from a graph. The
// width-formula value is only a candidate here; the report brackets the true
// width with a verified upper bound and a found diamond, and says whether the
// three agree.
struct NestohedronBoundReport {
    long long formula_value = 0;
    std::vector<long long> k_counts;       // in original labels
    std::vector<int> old_of_new;           // chart permutation (pivot moved last)
    std::optional<Rational> best_upper;
    std::optional<std::vector<long long>> best_upper_direction;
    Rational lower_found;
    std::vector<Rational> lower_center;
    std::vector<Segment> lower_segments;
    std::string lower_method; // "chord-lp" or "center-scan"
    bool formula_tight = false;
};

inline NestohedronBoundReport nestohedron_bounds(const BuildingSet& original,
                                                 const EnumLimits& limits = {}) {
    if (!original.has_full_ground())
        throw InputError("bound report needs the full ground set");
    NestohedronBoundReport rep;
    rep.k_counts = original.member_counts_per_vertex();
    long long kp = -1;
    int pivot = 0;
    for (std::size_t i = 0; i < rep.k_counts.size(); ++i)
        if (rep.k_counts[i] > 1 && (kp < 0 || rep.k_counts[i] < kp)) {
            kp = rep.k_counts[i];
            pivot = static_cast<int>(i) + 1;
        }
    rep.formula_value = kp < 0 ? 0 : kp - 1;

    const int ground = original.ground_size();
    const int n = ground - 1;
    rep.old_of_new.resize(static_cast<std::size_t>(ground));
    for (int j = 1; j <= ground; ++j) rep.old_of_new[static_cast<std::size_t>(j - 1)] = j;
    if (n == 0) {
        rep.best_upper = Rational(0);
        rep.lower_found = 0;
        rep.lower_method = "trivial";
        rep.formula_tight = rep.formula_value == 0;
        return rep;
    }

    // work in the chart that drops a minimal-k vertex, as the diamond
    // construction expects; pivot defaults to the last label when every k is 1
    if (pivot == 0) pivot = ground;
    std::swap(rep.old_of_new[static_cast<std::size_t>(pivot - 1)],
              rep.old_of_new[static_cast<std::size_t>(ground - 1)]);
    BuildingSet b = relabeled(original, rep.old_of_new);

    HalfspaceSystem proj = project(hrep(b));
    Polytope p = enumerate_vertices_bruteforce(proj, limits);
    if (p.vertices.empty())
        throw InternalInconsistencyError("nestohedron came out empty");
    std::vector<EdgeDescriptor> edge_list = edges(p);

    // candidate directions: all-ones, then +-(each facet row)
    std::vector<std::vector<long long>> candidates;
    candidates.emplace_back(static_cast<std::size_t>(n), 1);
    for (const Constraint& c : proj.constraints) {
        std::vector<long long> plus = c.coeffs;
        std::vector<long long> minus = c.coeffs;
        for (long long& v : minus) v = -v;
        candidates.push_back(std::move(plus));
        candidates.push_back(std::move(minus));
    }
    std::vector<std::vector<long long>> seen;
    for (const auto& u : candidates) {
        bool zero = std::all_of(u.begin(), u.end(), [](long long v) { return v == 0; });
        if (zero || std::find(seen.begin(), seen.end(), u) != seen.end()) continue;
        seen.push_back(u);
        bool pairs = true;
        for (const EdgeDescriptor& e : edge_list) {
            long long dot = 0;
            for (int j = 0; j < n; ++j)
                dot += u[static_cast<std::size_t>(j)] *
                       e.primitive_direction[static_cast<std::size_t>(j)];
            if (dot > 1 || dot < -1) { pairs = false; break; }
        }
        if (!pairs) continue;
        Rational lo, hi;
        bool first = true;
        for (const auto& v : p.vertices) {
            Rational dot = 0;
            for (int j = 0; j < n; ++j)
                if (u[static_cast<std::size_t>(j)] != 0)
                    dot += Rational(u[static_cast<std::size_t>(j)]) *
                           v[static_cast<std::size_t>(j)];
            if (first || dot < lo) lo = dot;
            if (first || dot > hi) hi = dot;
            first = false;
        }
        Rational bound = hi - lo;
        if (!rep.best_upper || bound < *rep.best_upper) {
            rep.best_upper = bound;
            rep.best_upper_direction = u;
        }
    }

    // lower bound: exact axis-chord program when affordable, else a
    // deterministic scan over interior center candidates
    auto rows = detail::ge_rows(proj);
    std::vector<Rational> center;
    Rational rho(-1);
    try {
        HalfspaceSystem lifted = detail::chord_lp_system(proj);
        Polytope lp = enumerate_vertices_bruteforce(lifted, limits);
        for (const auto& v : lp.vertices) {
            Rational r = v.back();
            if (r > rho) {
                rho = r;
                center.assign(v.begin(), v.end() - 1);
            }
        }
        rep.lower_method = "chord-lp";
    } catch (const ResourceLimitError&) {
        std::vector<std::vector<Rational>> tries;
        std::vector<Rational> bary(static_cast<std::size_t>(n), Rational(0));
        for (const auto& v : p.vertices)
            for (int j = 0; j < n; ++j) bary[static_cast<std::size_t>(j)] += v[static_cast<std::size_t>(j)];
        for (Rational& x : bary) x /= Rational(static_cast<long long>(p.vertices.size()));
        tries.push_back(std::move(bary));
        // all-equal point, midpoint of its feasibility interval
        std::optional<Rational> tlo, thi;
        bool line_ok = true;
        for (const detail::GeRow& r : rows) {
            long long s = 0;
            for (long long v : r.coeffs) s += v;
            if (s == 0) {
                if (r.rhs > 0) { line_ok = false; break; }
                continue;
            }
            Rational bound = r.rhs / Rational(s);
            if (s > 0) {
                if (!tlo || bound > *tlo) tlo = bound;
            } else {
                if (!thi || bound < *thi) thi = bound;
            }
        }
        if (line_ok && tlo && thi && *tlo <= *thi)
            tries.emplace_back(static_cast<std::size_t>(n), (*tlo + *thi) / 2);
        for (const auto& cand : tries) {
            Rational worst(-1);
            bool ok = true;
            for (int axis = 1; axis <= n && ok; ++axis) {
                auto chord = detail::chord_through(rows, cand, axis);
                if (!chord) { ok = false; break; }
                Rational len = chord->second - chord->first;
                if (worst < 0 || len < worst) worst = len;
            }
            if (ok && worst > rho) {
                rho = worst;
                center = cand;
            }
        }
        rep.lower_method = "center-scan";
    }
    if (rho < 0 || center.empty())
        throw InternalInconsistencyError("no diamond center found");
    rep.lower_found = rho;
    rep.lower_center = center;

    for (int axis = 1; axis <= n; ++axis) {
        auto chord = detail::chord_through(rows, center, axis);
        if (!chord || chord->second - chord->first < rho)
            throw InternalInconsistencyError("reported diamond does not fit its chords");
        Rational start = center[static_cast<std::size_t>(axis - 1)] - rho;
        if (start < chord->first) start = chord->first;
        Segment s;
        s.axis = axis;
        s.from = center;
        s.to = center;
        s.from[static_cast<std::size_t>(axis - 1)] = start;
        s.to[static_cast<std::size_t>(axis - 1)] = start + rho;
        if (!contains_segment(proj, s.from, s.to))
            throw InternalInconsistencyError("diamond segment escapes the polytope");
        rep.lower_segments.push_back(std::move(s));
    }

    if (rep.best_upper && rep.lower_found > *rep.best_upper)
        throw InternalInconsistencyError("found diamond exceeds the verified upper bound");
    rep.formula_tight = rep.best_upper && *rep.best_upper == Rational(rep.formula_value) &&
                        rep.lower_found == Rational(rep.formula_value);
    return rep;
}

} // namespace gwidth

#endif // GWIDTH_NESTOHEDRON_HPP
