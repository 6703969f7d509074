#include "isotree/isotree.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "isotree/contour_tree.hpp"
#include "isotree/errors.hpp"
#include "union_find.hpp"

namespace isotree {

namespace {

bool same_value(double a, double b) {
    if (a == b) return true;
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= 8 * std::numeric_limits<double>::epsilon() * scale;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

struct Signatures {
    std::vector<std::size_t> zone_of;          // site -> class, classes numbered by least site
    std::vector<std::vector<char>> of_class;    // class -> side of each cut (1 = low)
};

Signatures signature_classes(std::size_t n, std::span<const JCut> cuts) {
    std::vector<std::vector<char>> masks;
    masks.reserve(cuts.size());
    for (const JCut& c : cuts) masks.push_back(c.low().mask(n));
    std::map<std::vector<char>, std::size_t> classes;
    Signatures out;
    out.zone_of.resize(n);
    std::vector<char> sig(cuts.size());
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t k = 0; k < cuts.size(); ++k) sig[k] = masks[k][s];
        auto [it, inserted] = classes.emplace(sig, classes.size());
        if (inserted) out.of_class.push_back(sig);
        out.zone_of[s] = it->second;
    }
    return out;
}

struct ZonePair {
    std::size_t low;
    std::size_t up;
};

// For each cut, the pair of zones whose signatures differ at that cut only. Nested
// cuts can share every boundary surfel, so the two zones need not be adjacent.
std::vector<ZonePair> zone_pairs(const Graph& g, std::span<const JCut> cuts, const Signatures& sigs) {
    std::map<std::vector<char>, std::size_t> index;
    for (std::size_t z = 0; z < sigs.of_class.size(); ++z) index.emplace(sigs.of_class[z], z);
    std::vector<std::optional<ZonePair>> found(cuts.size());
    for (std::size_t z = 0; z < sigs.of_class.size(); ++z) {
        auto sig = sigs.of_class[z];
        for (std::size_t i = 0; i < cuts.size(); ++i) {
            if (!sig[i]) continue;
            sig[i] = 0;
            if (auto it = index.find(sig); it != index.end()) {
                if (found[i]) throw NotATreeError("cut " + format_cut(g, cuts[i]) + " joins more than one pair of zones");
                found[i] = ZonePair{z, it->second};
            }
            sig[i] = 1;
        }
    }
    std::vector<ZonePair> out;
    out.reserve(cuts.size());
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (!found[i]) throw NotATreeError("cut " + format_cut(g, cuts[i]) + " joins no pair of zones");
        out.push_back(*found[i]);
    }
    return out;
}

std::vector<IsoZone> group_zones(std::size_t n, const std::vector<std::size_t>& zone_of, std::size_t count) {
    std::vector<std::vector<SiteId>> members(count);
    for (std::size_t s = 0; s < n; ++s) members[zone_of[s]].emplace_back(static_cast<std::uint32_t>(s));
    std::vector<IsoZone> zones;
    zones.reserve(count);
    for (auto& m : members) zones.push_back({Region(std::move(m)), 0.0});
    return zones;
}

void check_edges_match_cuts(const Graph& g, const IsoTree& tree, std::span<const JCut> cuts,
                            const std::vector<ZonePair>& pairs) {
    // All zone indices were assigned in least-site order, so they match the tree's.
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        auto it = std::find_if(tree.edges().begin(), tree.edges().end(), [&](const IsoEdge& e) {
            return e.low == pairs[i].low && e.up == pairs[i].up;
        });
        if (it == tree.edges().end() ||
            edge_to_jcut(tree, static_cast<std::size_t>(it - tree.edges().begin())).low() != cuts[i].low())
            throw NotATreeError("cut " + format_cut(g, cuts[i]) + " is not the split induced by its tree edge");
    }
}

}  // namespace

IsoTree::IsoTree(std::size_t site_count, std::vector<IsoZone> zones, std::vector<IsoEdge> edges,
                 SiteId reference, double reference_value)
    : reference_(reference), reference_value_(reference_value), zone_of_(site_count) {
    if (zones.empty()) throw NotATreeError("tree has no zones");
    for (const auto& z : zones)
        if (z.sites.empty()) throw NotATreeError("empty zone");

    // Canonical zone order by least site.
    std::vector<std::size_t> order(zones.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return zones[a].representative() < zones[b].representative(); });
    std::vector<std::size_t> remap(zones.size());
    zones_.reserve(zones.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        remap[order[i]] = i;
        zones_.push_back(std::move(zones[order[i]]));
    }

    constexpr auto unassigned = std::numeric_limits<std::size_t>::max();
    std::fill(zone_of_.begin(), zone_of_.end(), unassigned);
    for (std::size_t z = 0; z < zones_.size(); ++z) {
        for (SiteId s : zones_[z].sites) {
            if (s.index >= site_count) throw NotATreeError("zone references unknown site");
            if (zone_of_[s.index] != unassigned) throw NotATreeError("zones overlap");
            zone_of_[s.index] = z;
        }
    }
    if (std::find(zone_of_.begin(), zone_of_.end(), unassigned) != zone_of_.end())
        throw NotATreeError("zones do not cover every site");

    if (edges.size() + 1 != zones_.size())
        throw NotATreeError(std::to_string(edges.size()) + " edges for " + std::to_string(zones_.size()) +
                            " zones");
    detail::UnionFind uf(zones_.size());
    for (auto& e : edges) {
        if (e.low >= zones_.size() || e.up >= zones_.size()) throw NotATreeError("edge references unknown zone");
        e.low = remap[e.low];
        e.up = remap[e.up];
        if (e.low == e.up) throw NotATreeError("edge is a loop");
        if (uf.same(e.low, e.up)) throw NotATreeError("edges contain a cycle");
        uf.unite(e.low, e.up);
        if (!(e.gap > 0)) throw NotATreeError("non-positive value gap " + fmt(e.gap));
        if (!same_value(zones_[e.low].value + e.gap, zones_[e.up].value))
            throw NotATreeError("gap " + fmt(e.gap) + " disagrees with zone values " + fmt(zones_[e.low].value) +
                                " -> " + fmt(zones_[e.up].value));
    }
    std::sort(edges.begin(), edges.end(),
              [](const IsoEdge& a, const IsoEdge& b) { return std::tie(a.low, a.up) < std::tie(b.low, b.up); });
    edges_ = std::move(edges);

    incident_.resize(zones_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        incident_[edges_[i].low].push_back(i);
        incident_[edges_[i].up].push_back(i);
    }

    if (reference_.index >= site_count) throw MissingReferenceError("reference site is not in the tree");
    if (!same_value(zones_[zone_of_[reference_.index]].value, reference_value_))
        throw NotATreeError("reference value " + fmt(reference_value_) + " differs from its zone value");
}

bool is_lcut(const ScalarGraph& sg, const JCut& c) {
    const Graph& g = sg.graph;
    double low_max = -std::numeric_limits<double>::infinity();
    double up_min = std::numeric_limits<double>::infinity();
    for (SiteId p : immediate_interior(g, c.low())) low_max = std::max(low_max, sg.value(p));
    for (SiteId q : immediate_interior(g, c.up())) up_min = std::min(up_min, sg.value(q));
    return low_max < up_min;
}

std::vector<IsoZone> zones_from_cuts(const ScalarGraph& sg, std::span<const JCut> cuts) {
    const auto n = sg.graph.site_count();
    const auto sigs = signature_classes(n, cuts);
    auto zones = group_zones(n, sigs.zone_of, sigs.of_class.size());
    for (auto& z : zones) {
        z.value = sg.value(z.representative());
        for (SiteId s : z.sites)
            if (sg.value(s) != z.value)
                throw InconsistentZoneError("f is not constant on zone " + format_region(sg.graph, z.sites));
    }
    return zones;
}

IsoTree build_iso_tree_from_cuts(const ScalarGraph& sg, std::span<const LCut> cuts) {
    const Graph& g = sg.graph;
    std::vector<JCut> jcuts;
    jcuts.reserve(cuts.size());
    for (const auto& c : cuts) jcuts.push_back(c.cut);
    const auto sigs = signature_classes(g.site_count(), jcuts);
    auto zones = zones_from_cuts(sg, jcuts);
    auto pairs = zone_pairs(g, jcuts, sigs);
    std::vector<IsoEdge> edges;
    edges.reserve(cuts.size());
    for (std::size_t i = 0; i < cuts.size(); ++i) edges.push_back({pairs[i].low, pairs[i].up, cuts[i].value_gap});
    const SiteId ref = sg.reference_site();
    IsoTree tree(g.site_count(), std::move(zones), std::move(edges), ref, sg.value(ref));
    check_edges_match_cuts(g, tree, jcuts, pairs);
    return tree;
}

IsoTree build_iso_tree_from_division(const Graph& g, const ValuedJDivision& d, SiteId reference,
                                     double reference_value) {
    const auto n = g.site_count();
    if (reference.index >= n) throw MissingReferenceError("reference site out of range");
    std::vector<JCut> jcuts;
    jcuts.reserve(d.cuts.size());
    for (const auto& e : d.cuts) {
        if (!(e.gap > 0)) throw NotATreeError("non-positive value gap " + fmt(e.gap));
        jcuts.push_back(e.cut);
    }
    const auto sigs = signature_classes(n, jcuts);
    const auto count = sigs.of_class.size();
    const auto& zone_of = sigs.zone_of;
    auto zones = group_zones(n, zone_of, count);
    auto pairs = zone_pairs(g, jcuts, sigs);
    if (pairs.size() + 1 != zones.size())
        throw NotATreeError(std::to_string(pairs.size()) + " cuts for " + std::to_string(zones.size()) + " zones");

    // Propagate values outward from the reference zone.
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(count);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        adj[pairs[i].low].push_back({pairs[i].up, d.cuts[i].gap});
        adj[pairs[i].up].push_back({pairs[i].low, -d.cuts[i].gap});
    }
    std::vector<char> seen(count, 0);
    std::deque<std::size_t> queue{zone_of[reference.index]};
    seen[queue.front()] = 1;
    zones[queue.front()].value = reference_value;
    while (!queue.empty()) {
        auto z = queue.front();
        queue.pop_front();
        for (auto [w, delta] : adj[z]) {
            if (seen[w]) continue;
            seen[w] = 1;
            zones[w].value = zones[z].value + delta;
            queue.push_back(w);
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw NotATreeError("cuts do not connect all zones");

    std::vector<IsoEdge> edges;
    edges.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) edges.push_back({pairs[i].low, pairs[i].up, d.cuts[i].gap});
    IsoTree tree(n, std::move(zones), std::move(edges), reference, reference_value);
    check_edges_match_cuts(g, tree, jcuts, pairs);
    return tree;
}

AxiomReport validate_regular_division(const Graph& g, const ValuedJDivision& d) {
    const auto n = g.site_count();
    std::vector<std::vector<char>> masks;
    masks.reserve(d.cuts.size());
    for (const auto& e : d.cuts) {
        g.check_region(e.cut.low());
        masks.push_back(e.cut.low().mask(n));
    }
    AxiomReport report;
    for (std::size_t i = 0; i < d.cuts.size(); ++i) {
        for (std::size_t j = i + 1; j < d.cuts.size(); ++j) {
            const auto& x = masks[i];
            const auto& y = masks[j];
            // seen[2*x + y]: some site lies in that quadrant.
            bool seen[4] = {false, false, false, false};
            for (std::size_t s = 0; s < n; ++s) seen[2 * x[s] + y[s]] = true;
            if (seen[0] && seen[1] && seen[2] && seen[3]) report.violations.push_back({Axiom::nesting, i, j});

            bool inverse_tangent = false;
            for (auto [a, b] : g.pairs()) {
                for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
                    if (x[p.index] && !x[q.index] && y[q.index] && !y[p.index]) inverse_tangent = true;
                }
                if (inverse_tangent) break;
            }
            if (inverse_tangent) report.violations.push_back({Axiom::tangent, i, j});
        }
    }
    report.valid = report.violations.empty();
    return report;
}

ValuedJDivision division_of(const IsoTree& tree) {
    ValuedJDivision d;
    d.cuts.reserve(tree.edges().size());
    for (std::size_t i = 0; i < tree.edges().size(); ++i) d.cuts.push_back({edge_to_jcut(tree, i), tree.edges()[i].gap});
    return d;
}

ScalarGraph reconstruct_rt(const Graph& g, const IsoTree& tree) {
    if (tree.site_count() != g.site_count())
        throw PreconditionError("tree covers " + std::to_string(tree.site_count()) + " sites, graph has " +
                                std::to_string(g.site_count()));
    const auto& zones = tree.zones();
    const auto& edges = tree.edges();
    std::vector<double> zone_value(zones.size());
    std::vector<char> seen(zones.size(), 0);
    const auto root = tree.zone_of(tree.reference());
    zone_value[root] = tree.reference_value();
    seen[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
        auto z = queue.front();
        queue.pop_front();
        for (auto ei : tree.incident(z)) {
            const IsoEdge& e = edges[ei];
            // Forward (low -> up) adds the gap, backward subtracts it.
            const bool forward = e.low == z;
            const auto w = forward ? e.up : e.low;
            if (seen[w]) continue;
            seen[w] = 1;
            zone_value[w] = forward ? zone_value[z] + e.gap : zone_value[z] - e.gap;
            queue.push_back(w);
        }
    }
    std::vector<double> values(g.site_count());
    for (std::size_t s = 0; s < values.size(); ++s)
        values[s] = zone_value[tree.zone_of(SiteId{static_cast<std::uint32_t>(s)})];
    return ScalarGraph(g, std::move(values), tree.reference());
}

JCut edge_to_jcut(const IsoTree& tree, std::size_t edge) {
    const auto& edges = tree.edges();
    const IsoEdge& cut_edge = edges.at(edge);
    std::vector<char> seen(tree.zones().size(), 0);
    seen[cut_edge.low] = 1;
    std::deque<std::size_t> queue{cut_edge.low};
    std::vector<SiteId> low;
    while (!queue.empty()) {
        auto z = queue.front();
        queue.pop_front();
        const auto& sites = tree.zones()[z].sites.sites();
        low.insert(low.end(), sites.begin(), sites.end());
        for (auto ei : tree.incident(z)) {
            if (ei == edge) continue;
            const auto w = edges[ei].low == z ? edges[ei].up : edges[ei].low;
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    Region low_region(std::move(low));
    std::vector<SiteId> up;
    auto mask = low_region.mask(tree.site_count());
    for (std::uint32_t s = 0; s < tree.site_count(); ++s)
        if (!mask[s]) up.emplace_back(s);
    return JCut::unchecked(std::move(low_region), Region(std::move(up)));
}

double value_gap_of(const ScalarGraph& sg, const JCut& c) {
    if (!is_lcut(sg, c)) throw NotAnLCutError("not a level cut: " + format_cut(sg.graph, c));
    const IsoTree tree = build_iso_tree(sg);
    for (std::size_t i = 0; i < tree.edges().size(); ++i) {
        const IsoEdge& e = tree.edges()[i];
        if (!tree.zones()[e.low].sites.is_subset_of(c.low()) || !tree.zones()[e.up].sites.is_subset_of(c.up()))
            continue;
        if (edge_to_jcut(tree, i).low() == c.low()) return e.gap;
    }
    throw InternalInconsistencyError("level cut " + format_cut(sg.graph, c) + " has no edge in the iso-tree");
}

std::vector<std::string> check_tree_against(const ScalarGraph& sg, const IsoTree& tree) {
    std::vector<std::string> problems;
    const Graph& g = sg.graph;
    if (tree.site_count() != g.site_count()) {
        problems.push_back("tree covers " + std::to_string(tree.site_count()) + " sites, graph has " +
                           std::to_string(g.site_count()));
        return problems;
    }
    std::vector<char> covered(g.site_count(), 0);
    for (const auto& z : tree.zones()) {
        if (z.sites.empty()) {
            problems.push_back("empty zone");
            continue;
        }
        for (SiteId s : z.sites) {
            if (covered[s.index]) problems.push_back("site " + g.name(s) + " in two zones");
            covered[s.index] = 1;
            if (sg.value(s) != z.value)
                problems.push_back("zone " + format_region(g, z.sites) + " has value " + fmt(z.value) + " but f(" +
                                   g.name(s) + ") = " + fmt(sg.value(s)));
        }
    }
    for (std::size_t s = 0; s < covered.size(); ++s)
        if (!covered[s]) problems.push_back("site " + g.names()[s] + " in no zone");
    for (const auto& e : tree.edges())
        if (!(e.gap > 0)) problems.push_back("non-positive gap " + fmt(e.gap));
    return problems;
}

std::optional<std::string> first_difference(const Graph& g, const IsoTree& a, const IsoTree& b) {
    if (a.site_count() != b.site_count()) return "site counts differ";
    if (a.zones().size() != b.zones().size())
        return "zone counts differ: " + std::to_string(a.zones().size()) + " vs " + std::to_string(b.zones().size());
    for (std::size_t i = 0; i < a.zones().size(); ++i) {
        const auto& za = a.zones()[i];
        const auto& zb = b.zones()[i];
        if (za.sites != zb.sites)
            return "zone " + std::to_string(i) + ": " + format_region(g, za.sites) + " vs " + format_region(g, zb.sites);
        if (za.value != zb.value)
            return "zone " + format_region(g, za.sites) + " value " + fmt(za.value) + " vs " + fmt(zb.value);
    }
    if (a.edges().size() != b.edges().size()) return "edge counts differ";
    for (std::size_t i = 0; i < a.edges().size(); ++i) {
        const auto& ea = a.edges()[i];
        const auto& eb = b.edges()[i];
        auto label = [&](const IsoTree& t, const IsoEdge& e) {
            return g.name(t.zones()[e.low].representative()) + "->" + g.name(t.zones()[e.up].representative());
        };
        if (ea.low != eb.low || ea.up != eb.up) return "edge " + label(a, ea) + " vs " + label(b, eb);
        if (ea.gap != eb.gap) return "edge " + label(a, ea) + " gap " + fmt(ea.gap) + " vs " + fmt(eb.gap);
        if (edge_to_jcut(a, i) != edge_to_jcut(b, i))
            return "edge " + label(a, ea) + " cut " + format_cut(g, edge_to_jcut(a, i)) + " vs " +
                   format_cut(g, edge_to_jcut(b, i));
    }
    if (a.reference() != b.reference()) return "reference sites differ";
    if (a.reference_value() != b.reference_value()) return "reference values differ";
    return std::nullopt;
}

}  // namespace isotree
