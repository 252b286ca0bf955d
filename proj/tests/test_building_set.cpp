#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gwidth/building_set.hpp"
#include "test_support.hpp"

using namespace gwidth;
using testsupport::make_graph;

namespace {

BuildingSet counterexample_set() {
    return BuildingSet(4, {subset_of({1}), subset_of({2}), subset_of({3}), subset_of({4}),
                           subset_of({1, 2}), subset_of({3, 4}), subset_of({1, 2, 3, 4})});
}

} // namespace

TEST_CASE("structural checks happen at construction") {
    REQUIRE_THROWS_AS(BuildingSet(2, {subset_of({3})}), InputError);
    REQUIRE_THROWS_AS(BuildingSet(2, {Subset{0}}), InputError);
    BuildingSet dup(2, {singleton(1), singleton(1), singleton(2)});
    REQUIRE(dup.size() == 2);
}

TEST_CASE("axiom validation") {
    REQUIRE(counterexample_set().validate().ok());
    REQUIRE(counterexample_set().has_full_ground());

    BuildingSet pair(2, {singleton(1), singleton(2)});
    REQUIRE(pair.validate().ok());
    REQUIRE_FALSE(pair.has_full_ground());

    BuildingSet bad(3, {singleton(1), singleton(2), subset_of({1, 2}), subset_of({2, 3})});
    auto v = bad.validate();
    REQUIRE_FALSE(v.ok());
    REQUIRE(v.missing_singletons == std::vector<int>{3});
    REQUIRE(v.open_unions.size() == 1);
    REQUIRE(v.open_unions[0] ==
            std::make_pair(subset_of({1, 2}), subset_of({2, 3})));
}

TEST_CASE("graphical building sets") {
    Graph p3 = make_graph(3, {{1, 2}, {2, 3}});
    BuildingSet b = BuildingSet::from_graph(p3);
    REQUIRE(b.size() == 6);
    REQUIRE(b.contains(subset_of({1, 2, 3})));
    REQUIRE(b.has_full_ground());

    Graph two(2);
    BuildingSet disconnected = BuildingSet::from_graph(two);
    REQUIRE(disconnected.size() == 2);
    REQUIRE_FALSE(disconnected.has_full_ground());

    Graph k2 = make_graph(2, {{1, 2}});
    REQUIRE(BuildingSet::from_graph(k2).members() ==
            std::vector<Subset>{singleton(1), singleton(2), subset_of({1, 2})});
}

TEST_CASE("members are canonically ordered") {
    Graph star = make_graph(4, {{1, 2}, {1, 3}, {1, 4}});
    auto members = BuildingSet::from_graph(star).members();
    for (std::size_t i = 1; i < members.size(); ++i)
        REQUIRE(canonical_less(members[i - 1], members[i]));
}

TEST_CASE("every graphical building set passes validation") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(testsupport::draw(rng, 1, 8));
        Graph g(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (testsupport::draw(rng, 0, 2) == 0) g.add_edge(u, v);
        REQUIRE(BuildingSet::from_graph(g).validate().ok());
    }
}

TEST_CASE("restriction") {
    Graph p3 = make_graph(3, {{1, 2}, {2, 3}});
    BuildingSet b = BuildingSet::from_graph(p3);
    auto r = restrict(b, subset_of({1, 2}));
    REQUIRE(r.members ==
            std::vector<Subset>{singleton(1), singleton(2), subset_of({1, 2})});
    REQUIRE(restrict(b, singleton(2)).members == std::vector<Subset>{singleton(2)});

    Graph k3 = make_graph(3, {{1, 2}, {2, 3}, {1, 3}});
    REQUIRE(restrict(BuildingSet::from_graph(k3), subset_of({1, 3})).members.size() == 3);
    REQUIRE_THROWS_AS(restrict(b, subset_of({4})), InputError);
}

TEST_CASE("restriction equals the relabeled induced building set") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 25; ++trial) {
        int n = static_cast<int>(testsupport::draw(rng, 2, 7));
        Graph g(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (testsupport::draw(rng, 0, 1) == 0) g.add_edge(u, v);
        Subset window = static_cast<Subset>(testsupport::draw(rng, 1, (1 << n) - 1));
        auto members = restrict(BuildingSet::from_graph(g), window).members;

        // rebuild the window as a standalone graph and map its sets back
        std::vector<int> labels = elements(window);
        Graph induced(static_cast<int>(labels.size()));
        for (std::size_t a = 0; a < labels.size(); ++a)
            for (std::size_t b2 = a + 1; b2 < labels.size(); ++b2)
                if (g.has_edge(labels[a], labels[b2]))
                    induced.add_edge(static_cast<int>(a) + 1, static_cast<int>(b2) + 1);
        std::vector<Subset> expected;
        for (Subset s : enumerate_connected_subsets(induced)) {
            Subset mapped = 0;
            for (int v : elements(s)) mapped |= singleton(labels[static_cast<std::size_t>(v - 1)]);
            expected.push_back(mapped);
        }
        std::sort(expected.begin(), expected.end(), canonical_less);
        REQUIRE(members == expected);
    }
}

TEST_CASE("component decomposition of the member count") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        int n = static_cast<int>(testsupport::draw(rng, 2, 8));
        Graph g(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (testsupport::draw(rng, 0, 3) == 0) g.add_edge(u, v);
        std::size_t total = BuildingSet::from_graph(g).size();
        std::size_t by_parts = 0;
        for (Subset comp : connected_components(g))
            by_parts += restrict(BuildingSet::from_graph(g), comp).members.size();
        REQUIRE(total == by_parts);
    }
}

TEST_CASE("member counts per vertex match k on graphical sets") {
    Graph star = make_graph(4, {{1, 2}, {1, 3}, {1, 4}});
    auto counts = BuildingSet::from_graph(star).member_counts_per_vertex();
    REQUIRE(counts == count_k(star).counts);
}
