#include "isotree/contour_tree.hpp"

#include <algorithm>
#include <deque>

#include "isotree/errors.hpp"
#include "union_find.hpp"

namespace isotree {

std::vector<std::vector<SiteId>> MergeTree::children() const {
    std::vector<std::vector<SiteId>> out(parent.size());
    for (std::uint32_t s = 0; s < parent.size(); ++s)
        if (parent[s]) out[parent[s]->index].emplace_back(s);
    return out;
}

std::vector<std::pair<SiteId, SiteId>> MergeTree::arcs() const {
    std::vector<std::pair<SiteId, SiteId>> out;
    for (std::uint32_t s = 0; s < parent.size(); ++s)
        if (parent[s]) out.emplace_back(SiteId{s}, *parent[s]);
    return out;
}

RankPerturbation perturb_rank(const ScalarGraph& sg) {
    const auto n = sg.graph.site_count();
    RankPerturbation rp;
    rp.order.reserve(n);
    for (std::uint32_t s = 0; s < n; ++s) rp.order.emplace_back(s);
    std::stable_sort(rp.order.begin(), rp.order.end(),
                     [&](SiteId a, SiteId b) { return sg.value(a) < sg.value(b); });
    rp.rank.resize(n);
    for (std::size_t i = 0; i < n; ++i) rp.rank[rp.order[i].index] = i;
    return rp;
}

namespace {

// Shared sweep: `order` is the processing order. The most recently added site of
// each component (its top, or bottom for the descending sweep) becomes a child of
// the site that absorbs the component.
MergeTree sweep(const ScalarGraph& sg, const RankPerturbation& rp, MergeFlavor flavor) {
    const Graph& g = sg.graph;
    if (!g.is_connected()) throw PreconditionError("merge tree sweep needs a connected graph");
    const auto n = g.site_count();
    MergeTree tree{flavor, std::vector<std::optional<SiteId>>(n)};
    detail::UnionFind uf(n);
    std::vector<SiteId> last_added(n);
    std::vector<char> processed(n, 0);
    std::vector<std::size_t> roots;

    auto visit = [&](SiteId x) {
        roots.clear();
        for (SiteId y : g.neighbors(x))
            if (processed[y.index]) roots.push_back(uf.find(y.index));
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        for (auto r : roots) {
            tree.parent[last_added[r].index] = x;
            uf.unite(r, x.index);
        }
        processed[x.index] = 1;
        last_added[uf.find(x.index)] = x;
    };
    if (flavor == MergeFlavor::sublevel)
        std::for_each(rp.order.begin(), rp.order.end(), visit);
    else
        std::for_each(rp.order.rbegin(), rp.order.rend(), visit);
    return tree;
}

// Mutable merge tree with explicit child lists, used while pruning.
struct PruneTree {
    std::vector<std::optional<SiteId>> parent;
    std::vector<std::vector<SiteId>> children;

    explicit PruneTree(const MergeTree& t) : parent(t.parent), children(t.children()) {}

    // Removes `x`, reattaching its (at most one, if it is the root) children to its parent.
    void remove(SiteId x) {
        auto p = parent[x.index];
        auto& kids = children[x.index];
        if (!p && kids.size() > 1)
            throw InternalInconsistencyError("cannot remove a root with several children");
        if (p) {
            auto& siblings = children[p->index];
            siblings.erase(std::find(siblings.begin(), siblings.end(), x));
        }
        for (SiteId c : kids) {
            parent[c.index] = p;
            if (p) children[p->index].push_back(c);
        }
        kids.clear();
        parent[x.index].reset();
    }
};

}  // namespace

MergeTree sublevel_merge_tree(const ScalarGraph& sg, const RankPerturbation& rp) {
    return sweep(sg, rp, MergeFlavor::sublevel);
}

MergeTree superlevel_merge_tree(const ScalarGraph& sg, const RankPerturbation& rp) {
    return sweep(sg, rp, MergeFlavor::superlevel);
}

AugmentedContourTree merge_to_augmented_ct(const MergeTree& sublevel, const MergeTree& superlevel) {
    if (sublevel.flavor != MergeFlavor::sublevel || superlevel.flavor != MergeFlavor::superlevel)
        throw PreconditionError("merge expects a sublevel and a superlevel tree");
    const auto n = sublevel.parent.size();
    if (superlevel.parent.size() != n) throw PreconditionError("merge trees cover different site sets");

    PruneTree sub(sublevel);
    PruneTree super(superlevel);
    AugmentedContourTree ct{n, {}};

    enum class Leaf { none, lower, upper };
    auto leaf_kind = [&](SiteId x) {
        const auto sub_kids = sub.children[x.index].size();
        const auto super_kids = super.children[x.index].size();
        if (sub_kids == 0 && super_kids == 1) return Leaf::lower;
        if (super_kids == 0 && sub_kids == 1) return Leaf::upper;
        return Leaf::none;
    };

    std::vector<char> alive(n, 1);
    std::deque<SiteId> queue;
    for (std::uint32_t s = 0; s < n; ++s)
        if (leaf_kind(SiteId{s}) != Leaf::none) queue.emplace_back(s);

    std::size_t remaining = n;
    std::vector<SiteId> touched;
    while (remaining > 1) {
        if (queue.empty())
            throw InternalInconsistencyError("contour tree merge stalled with " + std::to_string(remaining) +
                                             " sites left");
        SiteId x = queue.front();
        queue.pop_front();
        if (!alive[x.index]) continue;
        const Leaf kind = leaf_kind(x);
        if (kind == Leaf::none) continue;

        if (kind == Leaf::lower) {
            auto up = sub.parent[x.index];
            if (!up) throw InternalInconsistencyError("lower leaf without a higher neighbour");
            ct.edges.emplace_back(x, *up);
        } else {
            auto down = super.parent[x.index];
            if (!down) throw InternalInconsistencyError("upper leaf without a lower neighbour");
            ct.edges.emplace_back(*down, x);
        }

        touched.clear();
        for (const PruneTree* t : {&sub, &super}) {
            if (auto p = t->parent[x.index]) touched.push_back(*p);
            for (SiteId c : t->children[x.index]) touched.push_back(c);
        }
        sub.remove(x);
        super.remove(x);
        alive[x.index] = 0;
        --remaining;
        for (SiteId t : touched)
            if (alive[t.index] && leaf_kind(t) != Leaf::none) queue.push_back(t);
    }
    std::sort(ct.edges.begin(), ct.edges.end());
    return ct;
}

IsoTree ct_to_iso_tree(const ScalarGraph& sg, const RankPerturbation& rp, const AugmentedContourTree& ct) {
    const auto n = sg.graph.site_count();
    if (ct.site_count != n) throw PreconditionError("contour tree and graph sizes differ");
    std::vector<IsoZone> zones;
    zones.reserve(n);
    for (std::uint32_t s = 0; s < n; ++s) zones.push_back({Region{SiteId{s}}, static_cast<double>(rp.rank[s])});
    std::vector<IsoEdge> edges;
    edges.reserve(ct.edges.size());
    for (auto [low, up] : ct.edges)
        edges.push_back({low.index, up.index, static_cast<double>(rp(up)) - static_cast<double>(rp(low))});
    const SiteId ref = sg.reference_site();
    return IsoTree(n, std::move(zones), std::move(edges), ref, static_cast<double>(rp(ref)));
}

IsoTree reduce_by_f(const ScalarGraph& sg, const IsoTree& perturbed_tree) {
    const auto& zones_h = perturbed_tree.zones();
    std::vector<double> f(zones_h.size());
    for (std::size_t z = 0; z < zones_h.size(); ++z) {
        f[z] = sg.value(zones_h[z].representative());
        for (SiteId s : zones_h[z].sites)
            if (sg.value(s) != f[z])
                throw InternalInconsistencyError("f is not constant on zone " +
                                                 format_region(sg.graph, zones_h[z].sites));
    }

    detail::UnionFind uf(zones_h.size());
    for (const auto& e : perturbed_tree.edges())
        if (f[e.low] == f[e.up]) uf.unite(e.low, e.up);

    std::vector<std::size_t> group(zones_h.size());
    std::vector<std::size_t> group_index(zones_h.size(), zones_h.size());
    std::vector<std::vector<SiteId>> members;
    std::vector<double> group_value;
    for (std::size_t z = 0; z < zones_h.size(); ++z) {
        auto root = uf.find(z);
        if (group_index[root] == zones_h.size()) {
            group_index[root] = members.size();
            members.emplace_back();
            group_value.push_back(f[z]);
        }
        group[z] = group_index[root];
        const auto& s = zones_h[z].sites.sites();
        members[group[z]].insert(members[group[z]].end(), s.begin(), s.end());
    }

    std::vector<IsoZone> zones;
    zones.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) zones.push_back({Region(std::move(members[i])), group_value[i]});

    std::vector<IsoEdge> edges;
    for (const auto& e : perturbed_tree.edges()) {
        if (f[e.low] == f[e.up]) continue;
        const double gap = f[e.up] - f[e.low];
        if (!(gap > 0))
            throw InternalInconsistencyError("edge " + sg.graph.name(zones_h[e.low].representative()) + "->" +
                                             sg.graph.name(zones_h[e.up].representative()) +
                                             " descends in f");
        edges.push_back({group[e.low], group[e.up], gap});
    }
    const SiteId ref = perturbed_tree.reference();
    try {
        return IsoTree(sg.graph.site_count(), std::move(zones), std::move(edges), ref, sg.value(ref));
    } catch (const NotATreeError& e) {
        throw InternalInconsistencyError(std::string("reduction did not yield a tree: ") + e.what());
    }
}

ScalarGraph perturbed_graph(const ScalarGraph& sg, const RankPerturbation& rp) {
    std::vector<double> h(rp.rank.begin(), rp.rank.end());
    return ScalarGraph(sg.graph, std::move(h), sg.reference);
}

PipelineTrace run_pipeline(const ScalarGraph& sg) {
    auto rank = perturb_rank(sg);
    auto sub = sublevel_merge_tree(sg, rank);
    auto super = superlevel_merge_tree(sg, rank);
    auto ct = merge_to_augmented_ct(sub, super);
    auto tree_h = ct_to_iso_tree(sg, rank, ct);
    auto tree = reduce_by_f(sg, tree_h);
    return {std::move(rank), std::move(sub), std::move(super), std::move(ct), std::move(tree_h), std::move(tree)};
}

IsoTree build_iso_tree(const ScalarGraph& sg) { return run_pipeline(sg).tree; }

}  // namespace isotree
