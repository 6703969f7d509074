#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isotree/graph.hpp"

namespace isotree {

/// A J-cut whose low side's immediate interior lies strictly below its up side's.
struct LCut {
    JCut cut;
    double value_gap;

    auto operator<=>(const LCut&) const = default;
};

/// Maximal region of constant value bounded by the incident level cuts. May be disconnected.
struct IsoZone {
    Region sites;
    double value = 0;

    SiteId representative() const { return sites.sites().front(); }
    bool operator==(const IsoZone&) const = default;
};

/// Directed low -> up edge between two zones, referenced by index into IsoTree::zones().
struct IsoEdge {
    std::size_t low = 0;
    std::size_t up = 0;
    double gap = 0;

    bool operator==(const IsoEdge&) const = default;
};

/// Free tree of iso-zones joined by level cuts.
///
/// Zones are sorted by least site and partition the site set. Edges are sorted by
/// (low, up). The cut carried by an edge is not stored: it is the union of the zones
/// on the low side of the edge, see edge_to_jcut().
class IsoTree {
public:
    /// Validates partition, non-emptiness, the free-tree shape and
    /// value(low) + gap == value(up) for every edge. Throws NotATreeError.
    IsoTree(std::size_t site_count, std::vector<IsoZone> zones, std::vector<IsoEdge> edges,
            SiteId reference, double reference_value);

    std::size_t site_count() const { return zone_of_.size(); }
    const std::vector<IsoZone>& zones() const { return zones_; }
    const std::vector<IsoEdge>& edges() const { return edges_; }
    SiteId reference() const { return reference_; }
    double reference_value() const { return reference_value_; }

    std::size_t zone_of(SiteId s) const { return zone_of_[s.index]; }
    /// Indices of edges incident to a zone.
    const std::vector<std::size_t>& incident(std::size_t zone) const { return incident_[zone]; }

    bool operator==(const IsoTree&) const = default;

private:
    std::vector<IsoZone> zones_;
    std::vector<IsoEdge> edges_;
    SiteId reference_;
    double reference_value_;
    std::vector<std::size_t> zone_of_;
    std::vector<std::vector<std::size_t>> incident_;
};

/// A set of J-cuts each paired with a value gap; regularity is decided separately.
struct ValuedJDivision {
    struct Entry {
        JCut cut;
        double gap;
    };
    std::vector<Entry> cuts;
};

enum class Axiom { nesting, tangent };

struct AxiomViolation {
    Axiom axiom;
    std::size_t first;   // indices into the division
    std::size_t second;
};

struct AxiomReport {
    bool valid = true;
    std::vector<AxiomViolation> violations;
};

bool is_lcut(const ScalarGraph& sg, const JCut& c);

/// Groups sites by which side of every cut they fall on. Throws
/// InconsistentZoneError when f is not constant on a group.
std::vector<IsoZone> zones_from_cuts(const ScalarGraph& sg, std::span<const JCut> cuts);

/// Iso-tree from the complete level cut set of `sg`. Throws NotATreeError if the cuts
/// do not assemble into a tree, or if a cut's gap disagrees with its zone values.
IsoTree build_iso_tree_from_cuts(const ScalarGraph& sg, std::span<const LCut> cuts);

/// Tree induced by a valued J-division: zones are the side-signature classes, values
/// are propagated from `reference` (carrying `reference_value`) through the gaps.
IsoTree build_iso_tree_from_division(const Graph& g, const ValuedJDivision& d, SiteId reference,
                                     double reference_value);

/// Checks every unordered pair of cuts against the nesting and tangent axioms.
AxiomReport validate_regular_division(const Graph& g, const ValuedJDivision& d);

/// Division made of the tree's edges with their cuts and gaps.
ValuedJDivision division_of(const IsoTree& tree);

/// Recovers site values: reference value plus the signed gap sum along the tree path.
ScalarGraph reconstruct_rt(const Graph& g, const IsoTree& tree);

/// Up-zone value minus low-zone value of a level cut of `sg`. Throws NotAnLCutError.
double value_gap_of(const ScalarGraph& sg, const JCut& c);

/// The bipartition an edge induces: zones on its low side versus the rest.
JCut edge_to_jcut(const IsoTree& tree, std::size_t edge);

/// Structural checks of a tree against the scalar graph it claims
/// to describe (constant f per zone, value agreement, positive gaps). Empty when clean.
std::vector<std::string> check_tree_against(const ScalarGraph& sg, const IsoTree& tree);

/// Differences between two trees over the same graph; empty when identical.
/// Compares zone partitions, zone values, oriented edge bipartitions and gaps.
std::optional<std::string> first_difference(const Graph& g, const IsoTree& a, const IsoTree& b);

}  // namespace isotree
