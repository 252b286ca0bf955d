#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gwidth/polytope.hpp"
#include "test_support.hpp"

using namespace gwidth;
using testsupport::make_graph;

namespace {

std::vector<Rational> point(std::initializer_list<long long> xs) {
    std::vector<Rational> out;
    for (long long x : xs) out.emplace_back(x);
    return out;
}

BuildingSet counterexample_set() {
    return BuildingSet(4, {subset_of({1}), subset_of({2}), subset_of({3}), subset_of({4}),
                           subset_of({1, 2}), subset_of({3, 4}), subset_of({1, 2, 3, 4})});
}

Graph p3() { return make_graph(3, {{1, 2}, {2, 3}}); }
Graph k3() { return make_graph(3, {{1, 2}, {2, 3}, {1, 3}}); }

const Constraint& row_for(const HalfspaceSystem& h, Subset label) {
    int idx = h.find_by_label(label);
    REQUIRE(idx >= 0);
    return h.constraints[static_cast<std::size_t>(idx)];
}

} // namespace

TEST_CASE("ambient H-representation") {
    SECTION("single edge") {
        HalfspaceSystem h = hrep(BuildingSet::from_graph(make_graph(2, {{1, 2}})));
        REQUIRE(h.dimension == 2);
        REQUIRE(h.constraints.size() == 3);
        REQUIRE(h.constraints[0].sense == Sense::Eq);
        REQUIRE(h.constraints[0].rhs == 3);
        REQUIRE(row_for(h, singleton(1)).rhs == 1);
        REQUIRE(row_for(h, singleton(2)).rhs == 1);
    }
    SECTION("path on three vertices has facet sizes 1,1,1,3,3") {
        HalfspaceSystem h = hrep(BuildingSet::from_graph(p3()));
        REQUIRE(h.constraints[0].rhs == 6);
        std::vector<Rational> rhs;
        for (std::size_t i = 1; i < h.constraints.size(); ++i)
            rhs.push_back(h.constraints[i].rhs);
        REQUIRE(rhs == std::vector<Rational>{1, 1, 1, 3, 3});
    }
    SECTION("non-graphical set with parallel facets") {
        HalfspaceSystem h = hrep(counterexample_set());
        REQUIRE(h.constraints[0].rhs == 7);
        REQUIRE(row_for(h, subset_of({1, 2})).rhs == 3);
        REQUIRE(row_for(h, subset_of({3, 4})).rhs == 3);
    }
    SECTION("full ground set is required") {
        REQUIRE_THROWS_AS(hrep(BuildingSet::from_graph(Graph(2))), InputError);
    }
}

TEST_CASE("projection eliminates the last coordinate") {
    SECTION("single edge becomes an interval") {
        HalfspaceSystem h = project(hrep(BuildingSet::from_graph(make_graph(2, {{1, 2}}))));
        REQUIRE(h.dimension == 1);
        const Constraint& lo = row_for(h, singleton(1));
        REQUIRE(lo.sense == Sense::Ge);
        REQUIRE(lo.rhs == 1);
        const Constraint& hi = row_for(h, singleton(2));
        REQUIRE(hi.sense == Sense::Le);
        REQUIRE(hi.rhs == 2);
    }
    SECTION("path facets rewrite as upper bounds") {
        HalfspaceSystem h = project(hrep(BuildingSet::from_graph(p3())));
        const Constraint& f3 = row_for(h, singleton(3));
        REQUIRE(f3.sense == Sense::Le);
        REQUIRE(f3.coeffs == std::vector<long long>{1, 1});
        REQUIRE(f3.rhs == 5);
        const Constraint& f23 = row_for(h, subset_of({2, 3}));
        REQUIRE(f23.sense == Sense::Le);
        REQUIRE(f23.coeffs == std::vector<long long>{1, 0});
        REQUIRE(f23.rhs == 3);
    }
    SECTION("parallel pair of the non-graphical set") {
        HalfspaceSystem h = project(hrep(counterexample_set()));
        const Constraint& low = row_for(h, subset_of({1, 2}));
        REQUIRE(low.sense == Sense::Ge);
        REQUIRE(low.coeffs == std::vector<long long>{1, 1, 0});
        REQUIRE(low.rhs == 3);
        const Constraint& high = row_for(h, subset_of({3, 4}));
        REQUIRE(high.sense == Sense::Le);
        REQUIRE(high.coeffs == std::vector<long long>{1, 1, 0});
        REQUIRE(high.rhs == 4);
        const Constraint& top = row_for(h, singleton(4));
        REQUIRE(top.coeffs == std::vector<long long>{1, 1, 1});
        REQUIRE(top.rhs == 6);
    }
}

TEST_CASE("brute-force vertex enumeration") {
    SECTION("interval") {
        Polytope p = enumerate_vertices_bruteforce(
            project(hrep(BuildingSet::from_graph(make_graph(2, {{1, 2}})))));
        REQUIRE(p.vertices == std::vector<std::vector<Rational>>{point({1}), point({2})});
    }
    SECTION("pentagon") {
        Polytope p = enumerate_vertices_bruteforce(project(hrep(BuildingSet::from_graph(p3()))));
        REQUIRE(p.vertices == std::vector<std::vector<Rational>>{
                                  point({1, 2}), point({1, 4}), point({2, 1}),
                                  point({3, 1}), point({3, 2})});
        for (const auto& act : p.vertex_facets) REQUIRE(act.size() == 2);
    }
    SECTION("hexagon: permutations of (1,2,4) with the last coordinate dropped") {
        Polytope p = enumerate_vertices_bruteforce(project(hrep(BuildingSet::from_graph(k3()))));
        REQUIRE(p.vertices == std::vector<std::vector<Rational>>{
                                  point({1, 2}), point({1, 4}), point({2, 1}),
                                  point({2, 4}), point({4, 1}), point({4, 2})});
    }
    SECTION("zero-dimensional polytope is a point") {
        Polytope p = enumerate_vertices_bruteforce(project(hrep(BuildingSet::from_graph(Graph(1)))));
        REQUIRE(p.dimension == 0);
        REQUIRE(p.vertices.size() == 1);
        REQUIRE(p.vertices[0].empty());
    }
    SECTION("unbounded systems are rejected") {
        HalfspaceSystem ray;
        ray.dimension = 1;
        ray.constraints.push_back({{1}, Rational(0), Sense::Ge, std::nullopt});
        REQUIRE_THROWS_AS(enumerate_vertices_bruteforce(ray), UnboundedSystemError);

        HalfspaceSystem line;
        line.dimension = 2;
        line.constraints.push_back({{1, 0}, Rational(0), Sense::Ge, std::nullopt});
        line.constraints.push_back({{1, 0}, Rational(1), Sense::Le, std::nullopt});
        REQUIRE_THROWS_AS(enumerate_vertices_bruteforce(line), UnboundedSystemError);
    }
    SECTION("candidate budget") {
        EnumLimits tiny;
        tiny.max_candidates = 2;
        REQUIRE_THROWS_AS(
            enumerate_vertices_bruteforce(project(hrep(BuildingSet::from_graph(k3()))), tiny),
            ResourceLimitError);
    }
    SECTION("dimension cap") {
        EnumLimits tight;
        tight.max_geometry_dim = 1;
        REQUIRE_THROWS_AS(
            enumerate_vertices_bruteforce(project(hrep(BuildingSet::from_graph(k3()))), tight),
            ResourceLimitError);
    }
    SECTION("rational fallback agrees with the integer fast path under scaling") {
        HalfspaceSystem h = project(hrep(BuildingSet::from_graph(p3())));
        HalfspaceSystem halved = h;
        for (Constraint& c : halved.constraints) c.rhs /= 2;
        Polytope full = enumerate_vertices_bruteforce(h);
        Polytope half = enumerate_vertices_bruteforce(halved);
        REQUIRE(full.vertices.size() == half.vertices.size());
        for (std::size_t i = 0; i < full.vertices.size(); ++i)
            for (std::size_t c = 0; c < full.vertices[i].size(); ++c)
                REQUIRE(full.vertices[i][c] == half.vertices[i][c] * 2);
    }
}

TEST_CASE("nested collections biject with vertices") {
    SECTION("pentagon collections") {
        auto cols = enumerate_vertices_nested(BuildingSet::from_graph(p3()));
        std::vector<std::vector<Subset>> expected = {
            {singleton(1), singleton(3)},
            {singleton(1), subset_of({1, 2})},
            {singleton(2), subset_of({1, 2})},
            {singleton(2), subset_of({2, 3})},
            {singleton(3), subset_of({2, 3})},
        };
        REQUIRE(cols == expected);
    }
    SECTION("hexagon count") {
        REQUIRE(enumerate_vertices_nested(BuildingSet::from_graph(k3())).size() == 6);
    }
    SECTION("parallel facets never meet") {
        auto cols = enumerate_vertices_nested(counterexample_set());
        REQUIRE(cols.size() == 8);
        for (const auto& col : cols) {
            bool low = std::find(col.begin(), col.end(), subset_of({1, 2})) != col.end();
            bool high = std::find(col.begin(), col.end(), subset_of({3, 4})) != col.end();
            REQUIRE_FALSE((low && high));
        }
    }
    SECTION("each collection's boundaries meet in exactly one enumerated vertex") {
        for (const Graph& g : {p3(), k3(), make_graph(4, {{1, 2}, {1, 3}, {1, 4}})}) {
            BuildingSet b = BuildingSet::from_graph(g);
            HalfspaceSystem proj = project(hrep(b));
            Polytope p = enumerate_vertices_bruteforce(proj);
            auto cols = enumerate_vertices_nested(b);
            REQUIRE(cols.size() == p.vertices.size());
            std::vector<std::vector<Rational>> solved;
            for (const auto& col : cols) {
                RationalMatrix a;
                RationalVector rhs;
                for (Subset label : col) {
                    const Constraint& c = row_for(proj, label);
                    RationalVector row;
                    for (long long v : c.coeffs) row.emplace_back(v);
                    a.push_back(row);
                    rhs.push_back(c.rhs);
                }
                auto x = solve_square(a, rhs);
                REQUIRE(x.has_value());
                solved.push_back(*x);
            }
            std::sort(solved.begin(), solved.end());
            solved.erase(std::unique(solved.begin(), solved.end()), solved.end());
            REQUIRE(solved == p.vertices);
        }
    }
}

TEST_CASE("edges of the pentagon") {
    Polytope p = enumerate_vertices_bruteforce(project(hrep(BuildingSet::from_graph(p3()))));
    auto es = edges(p);
    REQUIRE(es.size() == 5);
    // (1,2)-(1,4): direction (0,1), affine length 2
    bool seen_vertical = false, seen_diagonal = false;
    for (const auto& e : es) {
        if (p.vertices[static_cast<std::size_t>(e.v0)] == point({1, 2}) &&
            p.vertices[static_cast<std::size_t>(e.v1)] == point({1, 4})) {
            REQUIRE(e.primitive_direction == std::vector<long long>{0, 1});
            REQUIRE(e.affine_length == 2);
            seen_vertical = true;
        }
        if (p.vertices[static_cast<std::size_t>(e.v0)] == point({1, 2}) &&
            p.vertices[static_cast<std::size_t>(e.v1)] == point({2, 1})) {
            REQUIRE(e.primitive_direction == std::vector<long long>{1, -1});
            REQUIRE(e.affine_length == 1);
            seen_diagonal = true;
        }
    }
    REQUIRE(seen_vertical);
    REQUIRE(seen_diagonal);
}

TEST_CASE("single edge of the interval") {
    Polytope p = enumerate_vertices_bruteforce(
        project(hrep(BuildingSet::from_graph(make_graph(2, {{1, 2}})))));
    auto es = edges(p);
    REQUIRE(es.size() == 1);
    REQUIRE(es[0].primitive_direction == std::vector<long long>{1});
    REQUIRE(es[0].affine_length == 1);
}

TEST_CASE("edge directions have the coordinate-difference form") {
    for (const BuildingSet& b :
         {BuildingSet::from_graph(p3()), BuildingSet::from_graph(k3()), counterexample_set()}) {
        Polytope p = enumerate_vertices_bruteforce(project(hrep(b)));
        REQUIRE(verify_edge_directions(p));
    }
}

TEST_CASE("non-simple vertices are refused") {
    // square pyramid: the apex lies on four planes in dimension three
    HalfspaceSystem pyr;
    pyr.dimension = 3;
    pyr.constraints.push_back({{0, 0, 1}, Rational(0), Sense::Ge, std::nullopt});
    pyr.constraints.push_back({{1, 0, 1}, Rational(1), Sense::Le, std::nullopt});
    pyr.constraints.push_back({{-1, 0, 1}, Rational(1), Sense::Le, std::nullopt});
    pyr.constraints.push_back({{0, 1, 1}, Rational(1), Sense::Le, std::nullopt});
    pyr.constraints.push_back({{0, -1, 1}, Rational(1), Sense::Le, std::nullopt});
    Polytope p = enumerate_vertices_bruteforce(pyr);
    REQUIRE(p.vertices.size() == 5);
    REQUIRE_THROWS_AS(edges(p), SimplicityError);
    REQUIRE_THROWS_AS(delzant_check(p, pyr), SimplicityError);
}

TEST_CASE("smoothness determinants") {
    for (const Graph& g : {p3(), k3()}) {
        HalfspaceSystem proj = project(hrep(BuildingSet::from_graph(g)));
        Polytope p = enumerate_vertices_bruteforce(proj);
        REQUIRE(delzant_check(p, proj));
    }
    HalfspaceSystem square;
    square.dimension = 2;
    square.constraints.push_back({{1, 0}, Rational(0), Sense::Ge, std::nullopt});
    square.constraints.push_back({{0, 1}, Rational(0), Sense::Ge, std::nullopt});
    square.constraints.push_back({{1, 0}, Rational(1), Sense::Le, std::nullopt});
    square.constraints.push_back({{0, 1}, Rational(1), Sense::Le, std::nullopt});
    Polytope p = enumerate_vertices_bruteforce(square);
    REQUIRE(p.vertices.size() == 4);
    REQUIRE(delzant_check(p, square));

    // skewed normals break the determinant condition
    HalfspaceSystem skew = square;
    skew.constraints[2].coeffs = {2, 1};
    skew.constraints[2].rhs = 2;
    Polytope ps = enumerate_vertices_bruteforce(skew);
    REQUIRE_FALSE(delzant_check(ps, skew));
}

TEST_CASE("irredundancy of the facet description") {
    HalfspaceSystem proj = project(hrep(BuildingSet::from_graph(p3())));
    Polytope p = enumerate_vertices_bruteforce(proj);
    REQUIRE(facets_irredundant(p, proj));

    HalfspaceSystem padded = proj;
    padded.constraints.push_back({{1, 1}, Rational(2), Sense::Ge, std::nullopt}); // slack row
    Polytope p2 = enumerate_vertices_bruteforce(padded);
    REQUIRE_FALSE(facets_irredundant(p2, padded));
}

TEST_CASE("support function of the simplex sum") {
    BuildingSet k2 = BuildingSet::from_graph(make_graph(2, {{1, 2}}));
    std::vector<long long> w{1, 0};
    REQUIRE(support_minkowski(k2, w) == 2);

    BuildingSet bp3 = BuildingSet::from_graph(p3());
    std::vector<long long> w2{1, 0, -1};
    REQUIRE(support_minkowski(bp3, w2) == 2);
    std::vector<long long> zero{0, 0, 0};
    REQUIRE(support_minkowski(bp3, zero) == 0);
    std::vector<long long> wrong{1};
    REQUIRE_THROWS_AS(support_minkowski(bp3, wrong), InputError);
}

TEST_CASE("support function equals the lifted vertex maximum on random directions") {
    std::mt19937_64 rng(29);
    for (const Graph& g :
         {p3(), k3(), make_graph(4, {{1, 2}, {1, 3}, {1, 4}}),
          make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})}) {
        BuildingSet b = BuildingSet::from_graph(g);
        Polytope p = enumerate_vertices_bruteforce(project(hrep(b)));
        Rational total(static_cast<long long>(b.size()));
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<long long> w(static_cast<std::size_t>(b.ground_size()));
            for (auto& v : w) v = testsupport::draw(rng, -9, 9);
            Rational best;
            bool first = true;
            for (const auto& vert : p.vertices) {
                auto lifted = lift_to_ambient(vert, total);
                Rational dot = 0;
                for (std::size_t i = 0; i < w.size(); ++i)
                    dot += Rational(w[i]) * lifted[i];
                if (first || dot > best) best = dot;
                first = false;
            }
            REQUIRE(support_minkowski(b, w) == best);
        }
    }
}

TEST_CASE("segment containment") {
    HalfspaceSystem k2 = project(hrep(BuildingSet::from_graph(make_graph(2, {{1, 2}}))));
    REQUIRE(contains_segment(k2, point({1}), point({2})));

    HalfspaceSystem bp3 = project(hrep(BuildingSet::from_graph(p3())));
    REQUIRE(contains_segment(bp3, point({1, 2}), point({3, 2})));
    REQUIRE_FALSE(contains_segment(bp3, point({0, 2}), point({1, 2})));
}
