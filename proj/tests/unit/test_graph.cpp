#include <random>

#include "doctest.h"
#include "isotree/errors.hpp"
#include "isotree/graph.hpp"
#include "test_support.hpp"

using namespace isotree;
using namespace isotree::testing;

TEST_SUITE_BEGIN("graph");

TEST_CASE("construction rejects malformed adjacency") {
    CHECK_THROWS_AS(Graph({"a", "b"}, {{SiteId{0}, SiteId{0}}}), PreconditionError);
    CHECK_THROWS_AS(Graph({"a", "b"}, {{SiteId{0}, SiteId{2}}}), InvalidRegionError);
    CHECK_THROWS_AS(Graph({"a", "b"}, {{SiteId{0}, SiteId{1}}, {SiteId{1}, SiteId{0}}}), PreconditionError);
    CHECK_THROWS_AS(Graph({"a", "a"}, {}), PreconditionError);
    CHECK_THROWS_AS(Graph({}, {}), PreconditionError);
}

TEST_CASE("connectivity is a query") {
    CHECK(path_of({0, 1, 2}).graph.is_connected());
    CHECK_FALSE(Graph({"a", "b"}, {}).is_connected());
    CHECK(Graph({"a"}, {}).is_connected());
}

TEST_CASE("components_of") {
    const auto g = path_of({0, 1, 2}).graph;
    SUBCASE("non-adjacent sites split") {
        auto comps = components_of(g, region(g, {"a", "c"}));
        REQUIRE(comps.size() == 2);
        CHECK(comps[0] == region(g, {"a"}));
        CHECK(comps[1] == region(g, {"c"}));
    }
    SUBCASE("empty region") { CHECK(components_of(g, Region{}).empty()); }
    SUBCASE("whole graph") {
        auto comps = components_of(g, g.all_sites());
        REQUIRE(comps.size() == 1);
        CHECK(comps[0] == g.all_sites());
    }
    SUBCASE("unknown site") { CHECK_THROWS_AS(components_of(g, Region{SiteId{7}}), InvalidRegionError); }
}

TEST_CASE("immediate_interior") {
    const auto g = path_of({0, 1, 2}).graph;
    CHECK(immediate_interior(g, region(g, {"a", "b"})) == region(g, {"b"}));
    CHECK(immediate_interior(g, g.all_sites()).empty());
    CHECK(immediate_interior(g, Region{}).empty());
    CHECK_THROWS_AS(immediate_interior(g, Region{SiteId{3}}), InvalidRegionError);
}

TEST_CASE("is_jcut") {
    const auto g = path_of({0, 1, 2}).graph;
    CHECK(is_jcut(g, region(g, {"a"})));
    CHECK_FALSE(is_jcut(g, region(g, {"a", "c"})));
    CHECK_FALSE(is_jcut(g, g.all_sites()));
    CHECK_FALSE(is_jcut(g, Region{}));
    CHECK_FALSE(is_jcut(Graph({"a"}, {}), Region{SiteId{0}}));
    CHECK_THROWS_AS(JCut(g, region(g, {"a", "c"})), PreconditionError);
}

TEST_CASE("boundary_surfels are oriented low to up") {
    const auto g = path_of({0, 1, 2}).graph;
    const auto a = *g.find("a"), b = *g.find("b"), c = *g.find("c");
    CHECK(boundary_surfels(g, cut(g, {"a"})) == std::vector<Surfel>{{a, b}});
    CHECK(boundary_surfels(g, cut(g, {"a", "b"})) == std::vector<Surfel>{{b, c}});
    const auto t = triangle();
    CHECK(boundary_surfels(t, cut(t, {"a"})) == std::vector<Surfel>{{a, b}, {a, c}});
}

TEST_CASE("inverse_surfels") {
    const SiteId a{0}, b{1}, c{2};
    CHECK(inverse_surfels(std::vector<Surfel>{{a, b}}) == std::vector<Surfel>{{b, a}});
    CHECK(inverse_surfels(std::vector<Surfel>{}).empty());
    CHECK(inverse_surfels(std::vector<Surfel>{{a, b}, {b, c}}) == std::vector<Surfel>{{b, a}, {c, b}});
    const Surfel s{a, c};
    CHECK(s.inverse().inverse() == s);
    CHECK(s.inverse() != s);
}

TEST_CASE("canonical orientation puts the least site low") {
    const auto g = path_of({0, 1, 2}).graph;
    const auto c = cut(g, {"b", "c"});
    CHECK(c.canonical().low() == region(g, {"a"}));
    CHECK(c.canonical().flipped() == c);
}

TEST_CASE("region and cut invariants on random subsets") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const auto sg = random_graph(rng, 3, 8, 0, 3, 9);
        const Graph& g = sg.graph;
        const auto n = g.site_count();
        std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
        for (int k = 0; k < 20; ++k) {
            const auto bits = pick(rng);
            std::vector<SiteId> sites;
            for (std::uint32_t i = 0; i < n; ++i)
                if (bits >> i & 1) sites.emplace_back(i);
            const Region r(sites);
            const Region rc = g.complement(r);

            const auto ii = immediate_interior(g, r);
            CHECK(ii.is_subset_of(r));
            CHECK_FALSE(ii.intersects(immediate_interior(g, rc)));

            // components partition the region
            std::vector<SiteId> joined;
            auto comps = components_of(g, r);
            for (std::size_t i = 0; i < comps.size(); ++i) {
                for (std::size_t j = i + 1; j < comps.size(); ++j) CHECK_FALSE(comps[i].intersects(comps[j]));
                joined.insert(joined.end(), comps[i].begin(), comps[i].end());
            }
            CHECK(Region(joined) == r);

            CHECK(is_jcut(g, r) == is_jcut(g, rc));
            if (is_jcut(g, r)) {
                const JCut c(g, r);
                CHECK(boundary_surfels(g, c.flipped()) == inverse_surfels(boundary_surfels(g, c)));
            }
        }
    }
}

TEST_SUITE_END();
