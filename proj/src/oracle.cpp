#include "isotree/oracle.hpp"

#include <algorithm>

#include "isotree/errors.hpp"
#include "isotree/mono.hpp"

namespace isotree {

namespace {

std::vector<JCut> oriented_lcuts(const ScalarGraph& sg, const OracleOptions& opts) {
    const Graph& g = sg.graph;
    if (g.site_count() > opts.max_sites)
        throw SizeLimitError("oracle cap is " + std::to_string(opts.max_sites) + " sites, graph has " +
                             std::to_string(g.site_count()));
    if (!opts.trust_mono_connected) {
        auto w = is_mono_connected(g, opts.max_sites);
        if (!w.verdict)
            throw PreconditionError("graph is not mono-connected; counterexample " +
                                    format_cut(g, *w.counterexample));
    }
    std::vector<JCut> out;
    for (const JCut& cut : enumerate_jcuts(g, opts.max_sites)) {
        const bool forward = is_lcut(sg, cut);
        const JCut flipped = cut.flipped();
        const bool backward = is_lcut(sg, flipped);
        if (forward && backward)
            throw TheoremViolationError("both orientations of " + format_cut(g, cut) + " are level cuts");
        if (forward) out.push_back(cut);
        if (backward) out.push_back(flipped);
    }
    return out;
}

}  // namespace

std::vector<LCut> brute_force_lcuts(const ScalarGraph& sg, const OracleOptions& opts) {
    auto cuts = oriented_lcuts(sg, opts);
    std::vector<LCut> out;
    out.reserve(cuts.size());
    if (cuts.empty()) return out;

    // Gaps come from the zones adjacent to each cut; the induced tree of a unit-gap
    // division gives exactly that adjacency.
    ValuedJDivision unit;
    for (const JCut& c : cuts) unit.cuts.push_back({c, 1.0});
    std::vector<IsoZone> zones;
    try {
        zones = zones_from_cuts(sg, cuts);
    } catch (const InconsistentZoneError& e) {
        throw TheoremViolationError(std::string("zone with non-constant f: ") + e.what());
    }
    IsoTree shape = [&] {
        try {
            return build_iso_tree_from_division(sg.graph, unit, SiteId{0}, 0.0);
        } catch (const NotATreeError& e) {
            throw TheoremViolationError(std::string("level cuts do not form a free tree: ") + e.what());
        }
    }();
    for (std::size_t i = 0; i < shape.edges().size(); ++i) {
        const IsoEdge& e = shape.edges()[i];
        JCut cut = edge_to_jcut(shape, i);
        const double gap = sg.value(shape.zones()[e.up].representative()) -
                           sg.value(shape.zones()[e.low].representative());
        if (!(gap > 0))
            throw TheoremViolationError("level cut " + format_cut(sg.graph, cut) + " has non-positive gap");
        out.push_back({std::move(cut), gap});
    }
    std::sort(out.begin(), out.end(), [](const LCut& a, const LCut& b) { return a.cut < b.cut; });
    return out;
}

IsoTree brute_force_iso_tree(const ScalarGraph& sg, const OracleOptions& opts) {
    auto cuts = brute_force_lcuts(sg, opts);

    ValuedJDivision d;
    for (const auto& c : cuts) d.cuts.push_back({c.cut, c.value_gap});
    auto report = validate_regular_division(sg.graph, d);
    if (!report.valid) {
        const auto& v = report.violations.front();
        throw TheoremViolationError(std::string(v.axiom == Axiom::nesting ? "nesting" : "tangent") +
                                    " property fails for " + format_cut(sg.graph, d.cuts[v.first].cut) + " and " +
                                    format_cut(sg.graph, d.cuts[v.second].cut));
    }

    IsoTree tree = [&] {
        try {
            return build_iso_tree_from_cuts(sg, cuts);
        } catch (const NotATreeError& e) {
            throw TheoremViolationError(std::string("level cuts do not form a free tree: ") + e.what());
        } catch (const InconsistentZoneError& e) {
            throw TheoremViolationError(std::string("zone with non-constant f: ") + e.what());
        }
    }();
    if (auto problems = check_tree_against(sg, tree); !problems.empty())
        throw TheoremViolationError("zone property fails: " + problems.front());
    return tree;
}

}  // namespace isotree
