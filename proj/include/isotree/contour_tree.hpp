#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "isotree/graph.hpp"
#include "isotree/isotree.hpp"

namespace isotree {

/// Symbolic perturbation: rank of each site under (value, site) order.
struct RankPerturbation {
    std::vector<std::size_t> rank;  // indexed by site
    std::vector<SiteId> order;      // sites ascending by rank

    std::size_t operator()(SiteId s) const { return rank[s.index]; }
};

enum class MergeFlavor { sublevel, superlevel };

/// Augmented merge tree over every site. In the sublevel flavour a parent is higher
/// (by rank) than its children; in the superlevel flavour it is lower.
struct MergeTree {
    MergeFlavor flavor = MergeFlavor::sublevel;
    std::vector<std::optional<SiteId>> parent;

    std::vector<std::vector<SiteId>> children() const;
    /// (child, parent) pairs in child order.
    std::vector<std::pair<SiteId, SiteId>> arcs() const;
};

/// Contour tree with a node per site; each edge is (lower, higher) by rank.
struct AugmentedContourTree {
    std::size_t site_count = 0;
    std::vector<std::pair<SiteId, SiteId>> edges;  // sorted
};

RankPerturbation perturb_rank(const ScalarGraph& sg);

/// Ascending sweep: when a site is added, the current top of every processed
/// neighbouring component becomes its child.
MergeTree sublevel_merge_tree(const ScalarGraph& sg, const RankPerturbation& rp);

/// Descending sweep, tracking the current bottom of each component.
MergeTree superlevel_merge_tree(const ScalarGraph& sg, const RankPerturbation& rp);

/// Leaf-pruning merge of the two sweeps into the augmented contour tree.
AugmentedContourTree merge_to_augmented_ct(const MergeTree& sublevel, const MergeTree& superlevel);

/// Iso-tree of the perturbed graph: singleton zones valued by rank, one edge per contour-tree arc.
IsoTree ct_to_iso_tree(const ScalarGraph& sg, const RankPerturbation& rp, const AugmentedContourTree& ct);

/// Contracts every edge whose end zones share the same original value and
/// re-expresses the remaining gaps in units of f.
IsoTree reduce_by_f(const ScalarGraph& sg, const IsoTree& perturbed_tree);

/// Everything the pipeline computes along the way.
struct PipelineTrace {
    RankPerturbation rank;
    MergeTree sublevel;
    MergeTree superlevel;
    AugmentedContourTree contour_tree;
    IsoTree perturbed_tree;
    IsoTree tree;
};

PipelineTrace run_pipeline(const ScalarGraph& sg);

/// Iso-tree of `sg` through the merge-tree pipeline.
IsoTree build_iso_tree(const ScalarGraph& sg);

/// `sg` with every value replaced by its rank.
ScalarGraph perturbed_graph(const ScalarGraph& sg, const RankPerturbation& rp);

}  // namespace isotree
