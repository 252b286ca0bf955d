#ifndef GWIDTH_PERMUTOHEDRON_HPP
#define GWIDTH_PERMUTOHEDRON_HPP

#include <algorithm>
#include <vector>

#include "gwidth/errors.hpp"
#include "gwidth/polytope.hpp"
#include "gwidth/rational.hpp"
#include "gwidth/width.hpp"

namespace gwidth {

// H-representation of the permutohedron with vertex coordinates all
// permutations of c: one >= row per proper nonempty subset S with right-hand
// side c_1 + ... + c_{|S|}, plus the total-sum equality.
inline HalfspaceSystem permutohedron_hrep(const std::vector<Rational>& c) {
    const int ground = static_cast<int>(c.size());
    std::vector<Rational> prefix(static_cast<std::size_t>(ground) + 1, Rational(0));
    for (int i = 0; i < ground; ++i)
        prefix[static_cast<std::size_t>(i + 1)] =
            prefix[static_cast<std::size_t>(i)] + c[static_cast<std::size_t>(i)];

    HalfspaceSystem h;
    h.dimension = ground;
    Constraint total;
    total.coeffs.assign(static_cast<std::size_t>(ground), 1);
    total.rhs = prefix[static_cast<std::size_t>(ground)];
    total.sense = Sense::Eq;
    h.constraints.push_back(std::move(total));

    std::vector<Subset> proper;
    Subset full = full_subset(ground);
    for (Subset s = 1; s < full; ++s) proper.push_back(s);
    std::sort(proper.begin(), proper.end(), canonical_less);
    for (Subset s : proper) {
        Constraint r;
        r.coeffs.assign(static_cast<std::size_t>(ground), 0);
        for (int v : elements(s)) r.coeffs[static_cast<std::size_t>(v - 1)] = 1;
        r.rhs = prefix[static_cast<std::size_t>(cardinality(s))];
        r.sense = Sense::Ge;
        r.label = s;
        h.constraints.push_back(std::move(r));
    }
    return h;
}

struct PermutohedronResult {
    Rational width;
    DiamondCertificate diamond;
    ParallelFacetCertificate facets;
};

// Width c_{n+1} - c_1, certified both ways: segments through the all-equal
// interior point, and the parallel pair x_1 >= c_1 / x_1 <= c_{n+1}.
inline PermutohedronResult permutohedron_width(const std::vector<Rational>& c,
                                               const EnumLimits& limits = {}) {
    const int ground = static_cast<int>(c.size());
    if (ground < 2) throw InputError("permutohedron needs at least two values");
    if (ground > limits.max_materialize)
        throw ResourceLimitError("permutohedron facet generation capped at " +
                                 std::to_string(limits.max_materialize) + " values");
    for (int i = 0; i + 1 < ground; ++i)
        if (c[static_cast<std::size_t>(i)] >= c[static_cast<std::size_t>(i + 1)])
            throw InputError("values must be strictly increasing");

    const int n = ground - 1;
    HalfspaceSystem proj = project(permutohedron_hrep(c));

    PermutohedronResult out;
    out.width = c.back() - c.front();

    std::vector<int> identity(static_cast<std::size_t>(ground));
    for (int j = 1; j <= ground; ++j) identity[static_cast<std::size_t>(j - 1)] = j;

    DiamondCertificate& d = out.diamond;
    d.rho = out.width;
    d.old_of_new = identity;
    if (n == 1) {
        Segment s;
        s.axis = 1;
        s.from = {c.front()};
        s.to = {c.back()};
        d.center = {(c.front() + c.back()) / 2};
        d.segments.push_back(std::move(s));
    } else {
        Rational abar = 0;
        for (int i = 2; i <= n; ++i) abar += c[static_cast<std::size_t>(i - 1)];
        abar /= Rational(n - 1);
        d.a = abar;
        d.center.assign(static_cast<std::size_t>(n), abar);
        for (int axis = 1; axis <= n; ++axis) {
            Segment s;
            s.axis = axis;
            s.from.assign(static_cast<std::size_t>(n), abar);
            s.to.assign(static_cast<std::size_t>(n), abar);
            s.from[static_cast<std::size_t>(axis - 1)] = c.front();
            s.to[static_cast<std::size_t>(axis - 1)] = c.back();
            d.segments.push_back(std::move(s));
        }
    }
    for (const Segment& s : d.segments)
        if (!contains_segment(proj, s.from, s.to))
            throw InternalInconsistencyError("permutohedron segment along axis " +
                                             std::to_string(s.axis) +
                                             " leaves the polytope");
    d.containment_checked = true;

    ParallelFacetCertificate& f = out.facets;
    f.old_of_new = identity;
    f.u.assign(static_cast<std::size_t>(n), 0);
    f.u[0] = 1;
    f.lambda = c.back();
    f.mu = c.front();
    f.bound = f.lambda - f.mu;
    int low = proj.find_by_label(singleton(1));
    int high = proj.find_by_label(full_subset(ground) & ~singleton(1));
    if (low < 0 || high < 0)
        throw InternalInconsistencyError("expected coordinate facets are missing");
    const Constraint& cl = proj.constraints[static_cast<std::size_t>(low)];
    const Constraint& ch = proj.constraints[static_cast<std::size_t>(high)];
    bool shapes_ok = cl.sense == Sense::Ge && cl.rhs == f.mu && cl.coeffs[0] == 1 &&
                     ch.sense == Sense::Le && ch.rhs == f.lambda && ch.coeffs[0] == 1;
    for (std::size_t i = 1; i < cl.coeffs.size(); ++i)
        shapes_ok = shapes_ok && cl.coeffs[i] == 0 && ch.coeffs[i] == 0;
    if (!shapes_ok)
        throw InternalInconsistencyError("coordinate facet rows have unexpected shape");
    f.edge_pairings_ok = true;
    f.verified_geometrically = false;
    return out;
}

} // namespace gwidth

#endif // GWIDTH_PERMUTOHEDRON_HPP
