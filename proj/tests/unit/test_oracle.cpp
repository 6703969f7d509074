#include <algorithm>
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

std::pair<double, double> value_range(const ScalarGraph& sg, const Region& r) {
    double lo = sg.value(r.sites().front()), hi = lo;
    for (SiteId s : r) {
        lo = std::min(lo, sg.value(s));
        hi = std::max(hi, sg.value(s));
    }
    return {lo, hi};
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("brute_force_lcuts on fixtures") {
    SUBCASE("ramp") {
        const auto sg = path_of({0, 1, 2});
        const auto cuts = brute_force_lcuts(sg);
        REQUIRE(cuts.size() == 2);
        CHECK(cuts[0] == LCut{cut(sg.graph, {"a"}), 1});
        CHECK(cuts[1] == LCut{cut(sg.graph, {"a", "b"}), 1});
    }
    SUBCASE("peak, one cut reversed") {
        const auto sg = path_of({1, 3, 0});
        const auto cuts = brute_force_lcuts(sg);
        REQUIRE(cuts.size() == 2);
        CHECK(cuts[0] == LCut{cut(sg.graph, {"a"}), 2});
        CHECK(cuts[1] == LCut{cut(sg.graph, {"c"}), 3});
    }
    SUBCASE("constant") { CHECK(brute_force_lcuts(path_of({2, 2, 2, 2})).empty()); }
    SUBCASE("single site") { CHECK(brute_force_lcuts(ScalarGraph(Graph({"a"}, {}), {1})).empty()); }
}

TEST_CASE("brute_force_iso_tree on fixtures") {
    const auto peak = path_of({1, 3, 0});
    const auto t = brute_force_iso_tree(peak);
    CHECK(t.edges() == std::vector<IsoEdge>{{0, 1, 2}, {2, 1, 3}});
    CHECK(reconstruct_rt(peak.graph, t).values == peak.values);

    const auto flat = brute_force_iso_tree(path_of({4, 4}));
    CHECK(flat.zones().size() == 1);
    CHECK(flat.zones()[0].value == 4);
}

TEST_CASE("a zone may be disconnected") {
    // value-1 corners on both sides of a 2/0 column
    const auto sg = gen_tri_grid(3, 2, values::Explicit{{1, 2, 1, 1, 0, 1}});
    const auto t = brute_force_iso_tree(sg);
    REQUIRE(t.zones().size() == 3);
    const auto& g = sg.graph;
    CHECK(t.zones()[0] == IsoZone{region(g, {"r0c0", "r0c2", "r1c0", "r1c2"}), 1});
    CHECK(components_of(g, t.zones()[0].sites).size() == 2);
    CHECK(has_disconnected_zone(g, t));
    CHECK(zone_problems(sg, t).empty());
    CHECK(validate_regular_division(g, division_of(t)).valid);
    CHECK_FALSE(first_difference(g, build_iso_tree(sg), t));
}

TEST_CASE("oracle preconditions") {
    CHECK_THROWS_AS(brute_force_lcuts(gen_path(15, values::Ramp{})), SizeLimitError);
    CHECK_NOTHROW(brute_force_lcuts(gen_path(15, values::Ramp{}), {15, false}));
    const ScalarGraph c4(cycle_graph(4), {0, 1, 2, 3});
    CHECK_THROWS_AS(brute_force_lcuts(c4), PreconditionError);
    CHECK_THROWS_AS(brute_force_iso_tree(c4), PreconditionError);
}

TEST_CASE("oracle trees satisfy the zone and axiom properties") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const auto sg = random_graph(rng, 4, 10, 0, 5, 12);
        const auto t = brute_force_iso_tree(sg);
        CHECK(zone_problems(sg, t).empty());
        CHECK(validate_regular_division(sg.graph, division_of(t)).valid);
        CHECK(reconstruct_rt(sg.graph, t).values == sg.values);
    }
}

TEST_CASE("gap equals the distance between the immediate interiors") {
    std::mt19937_64 rng(4242);
    std::size_t checked = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const auto sg = random_graph(rng, 4, 10, 0, 5, 12);
        for (const auto& lc : brute_force_lcuts(sg)) {
            const auto low = value_range(sg, immediate_interior(sg.graph, lc.cut.low()));
            const auto up = value_range(sg, immediate_interior(sg.graph, lc.cut.up()));
            CHECK(lc.value_gap == up.first - low.second);
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("f need not be constant on an immediate interior") {
    // Diagonal neighbours of the 2 reach both the 1 and the 0 plateau.
    const auto sg = gen_tri_grid(2, 2, values::Explicit{{2, 1, 0, 0}});
    const auto c = cut(sg.graph, {"r0c1", "r1c0", "r1c1"});
    REQUIRE(is_lcut(sg, c));
    const auto ii = immediate_interior(sg.graph, c.low());
    CHECK(ii == region(sg.graph, {"r0c1", "r1c0", "r1c1"}));
    CHECK(value_range(sg, ii) == std::pair{0.0, 1.0});
    CHECK(value_gap_of(sg, c) == 1);
}

TEST_SUITE_END();
