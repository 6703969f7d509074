#include <random>

#include "doctest.h"
#include "isotree/contour_tree.hpp"
#include "isotree/errors.hpp"
#include "isotree/oracle.hpp"
#include "properties.hpp"
#include "test_support.hpp"

using namespace isotree;
using namespace isotree::testing;

namespace {

using Arcs = std::vector<std::pair<SiteId, SiteId>>;

Arcs arcs(const Graph& g, std::initializer_list<std::pair<const char*, const char*>> named) {
    Arcs out;
    for (auto [a, b] : named) out.emplace_back(*g.find(a), *g.find(b));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("contour_tree");

TEST_CASE("perturb_rank orders by value then site") {
    CHECK(perturb_rank(path_of({0, 0, 1})).rank == std::vector<std::size_t>{0, 1, 2});
    CHECK(perturb_rank(path_of({1, 3, 0})).rank == std::vector<std::size_t>{1, 2, 0});
    CHECK(perturb_rank(path_of({5, 5, 5})).rank == std::vector<std::size_t>{0, 1, 2});
    const auto rp = perturb_rank(path_of({2, 1, 2, 1}));
    CHECK(rp.rank == std::vector<std::size_t>{2, 0, 3, 1});
    CHECK(rp.order == std::vector<SiteId>{SiteId{1}, SiteId{3}, SiteId{0}, SiteId{2}});
}

TEST_CASE("merge tree sweeps") {
    SUBCASE("ramp") {
        const auto sg = path_of({0, 1, 2});
        const auto rp = perturb_rank(sg);
        CHECK(sublevel_merge_tree(sg, rp).arcs() == arcs(sg.graph, {{"a", "b"}, {"b", "c"}}));
        CHECK(superlevel_merge_tree(sg, rp).arcs() == arcs(sg.graph, {{"c", "b"}, {"b", "a"}}));
    }
    SUBCASE("peak") {
        const auto sg = path_of({1, 3, 0});
        const auto rp = perturb_rank(sg);
        CHECK(sublevel_merge_tree(sg, rp).arcs() == arcs(sg.graph, {{"a", "b"}, {"c", "b"}}));
        CHECK(superlevel_merge_tree(sg, rp).arcs() == arcs(sg.graph, {{"b", "a"}, {"a", "c"}}));
    }
    SUBCASE("single site") {
        const ScalarGraph sg(Graph({"a"}, {}), {4});
        const auto rp = perturb_rank(sg);
        CHECK(sublevel_merge_tree(sg, rp).arcs().empty());
        CHECK(superlevel_merge_tree(sg, rp).arcs().empty());
    }
    SUBCASE("disconnected") {
        const ScalarGraph sg(Graph({"a", "b"}, {}), {0, 1});
        CHECK_THROWS_AS(sublevel_merge_tree(sg, perturb_rank(sg)), PreconditionError);
        CHECK_THROWS_AS(superlevel_merge_tree(sg, perturb_rank(sg)), PreconditionError);
    }
}

TEST_CASE("merge trees respect rank direction") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto sg = random_graph(rng, 4, 10, 0, 3);
        const auto rp = perturb_rank(sg);
        const auto sub = sublevel_merge_tree(sg, rp), super = superlevel_merge_tree(sg, rp);
        CHECK(sub.arcs().size() + 1 == sg.graph.site_count());
        CHECK(super.arcs().size() + 1 == sg.graph.site_count());
        for (auto [c, p] : sub.arcs()) CHECK(rp(p) > rp(c));
        for (auto [c, p] : super.arcs()) CHECK(rp(p) < rp(c));
    }
}

TEST_CASE("merge_to_augmented_ct") {
    SUBCASE("peak") {
        const auto sg = path_of({1, 3, 0});
        const auto rp = perturb_rank(sg);
        const auto ct = merge_to_augmented_ct(sublevel_merge_tree(sg, rp), superlevel_merge_tree(sg, rp));
        CHECK(ct.edges == arcs(sg.graph, {{"a", "b"}, {"c", "b"}}));
    }
    SUBCASE("ramp") {
        const auto sg = path_of({0, 1, 2});
        const auto rp = perturb_rank(sg);
        const auto ct = merge_to_augmented_ct(sublevel_merge_tree(sg, rp), superlevel_merge_tree(sg, rp));
        CHECK(ct.edges == arcs(sg.graph, {{"a", "b"}, {"b", "c"}}));
    }
    SUBCASE("single site") {
        const ScalarGraph sg(Graph({"a"}, {}), {0});
        const auto rp = perturb_rank(sg);
        CHECK(merge_to_augmented_ct(sublevel_merge_tree(sg, rp), superlevel_merge_tree(sg, rp)).edges.empty());
    }
    SUBCASE("malformed inputs stall") {
        // two disjoint chains cannot be merged into one tree
        MergeTree sub{MergeFlavor::sublevel, {SiteId{1}, std::nullopt, SiteId{3}, std::nullopt}};
        MergeTree super{MergeFlavor::superlevel, {std::nullopt, SiteId{0}, std::nullopt, SiteId{2}}};
        CHECK_THROWS_AS(merge_to_augmented_ct(sub, super), InternalInconsistencyError);
    }
}

TEST_CASE("ct_to_iso_tree yields singleton zones valued by rank") {
    SUBCASE("peak") {
        const auto sg = path_of({1, 3, 0});
        const auto trace = run_pipeline(sg);
        const auto& t = trace.perturbed_tree;
        REQUIRE(t.zones().size() == 3);
        CHECK(t.zones()[0].value == 1);
        CHECK(t.zones()[1].value == 2);
        CHECK(t.zones()[2].value == 0);
        CHECK(t.edges() == std::vector<IsoEdge>{{0, 1, 1}, {2, 1, 2}});
    }
    SUBCASE("plateau") {
        const auto trace = run_pipeline(path_of({0, 0, 1}));
        CHECK(trace.perturbed_tree.edges() == std::vector<IsoEdge>{{0, 1, 1}, {1, 2, 1}});
    }
    SUBCASE("single site") {
        const auto trace = run_pipeline(ScalarGraph(Graph({"a"}, {}), {3}));
        CHECK(trace.perturbed_tree.zones().size() == 1);
        CHECK(trace.tree.zones()[0].value == 3);
    }
}

TEST_CASE("reduce_by_f") {
    SUBCASE("plateau contracts the tie") {
        const auto sg = path_of({0, 0, 1});
        const auto t = build_iso_tree(sg);
        REQUIRE(t.zones().size() == 2);
        CHECK(t.zones()[0] == IsoZone{region(sg.graph, {"a", "b"}), 0});
        CHECK(t.zones()[1] == IsoZone{region(sg.graph, {"c"}), 1});
        CHECK(t.edges() == std::vector<IsoEdge>{{0, 1, 1}});
    }
    SUBCASE("injective input keeps every edge, gaps in f units") {
        const auto sg = path_of({1, 3, 0});
        const auto t = build_iso_tree(sg);
        CHECK(t.zones().size() == 3);
        CHECK(t.edges() == std::vector<IsoEdge>{{0, 1, 2}, {2, 1, 3}});
    }
    SUBCASE("constant contracts everything") {
        const auto t = build_iso_tree(path_of({5, 5, 5}));
        REQUIRE(t.zones().size() == 1);
        CHECK(t.zones()[0].value == 5);
        CHECK(t.edges().empty());
    }
    SUBCASE("rejects a tree that descends in f") {
        const auto sg = path_of({1, 0});
        // rank-valued chain a -> b although f(a) > f(b)
        IsoTree wrong(2, {{region(sg.graph, {"a"}), 0}, {region(sg.graph, {"b"}), 1}}, {{0, 1, 1}}, SiteId{0}, 0);
        CHECK_THROWS_AS(reduce_by_f(sg, wrong), InternalInconsistencyError);
    }
}

TEST_CASE("perturbed tree equals the oracle tree of the perturbed graph") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 60; ++trial) {
        const auto sg = random_graph(rng, 3, 12, 0, 4, 12);
        const auto trace = run_pipeline(sg);
        const auto hg = perturbed_graph(sg, trace.rank);
        for (const auto& z : trace.perturbed_tree.zones()) CHECK(z.sites.size() == 1);
        const auto diff = first_difference(sg.graph, trace.perturbed_tree, brute_force_iso_tree(hg));
        CHECK_MESSAGE(!diff, diff.value_or(""));
    }
}

TEST_CASE("reduction clauses hold on graphs with ties") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const auto sg = random_graph(rng, 4, 12, 0, 2, 12);
        const auto trace = run_pipeline(sg);
        for (const auto& p : reduction_problems(sg, trace.perturbed_tree, trace.tree)) FAIL_CHECK(p);
    }
}

TEST_CASE("pipeline agrees with the oracle") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 80; ++trial) {
        const auto sg = random_graph(rng, 4, 12, 0, 5, 12);
        const auto diff = first_difference(sg.graph, build_iso_tree(sg), brute_force_iso_tree(sg));
        CHECK_MESSAGE(!diff, diff.value_or(""));
    }
}

TEST_SUITE_END();
