#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace isotree {

/// Dense site index. Sites are ordered by index, which is also declaration order.
struct SiteId {
    std::uint32_t index = 0;

    constexpr SiteId() = default;
    constexpr explicit SiteId(std::uint32_t i) : index(i) {}

    constexpr auto operator<=>(const SiteId&) const = default;
};

/// Oriented edge (from, to).
struct Surfel {
    SiteId from;
    SiteId to;

    constexpr Surfel inverse() const { return {to, from}; }
    constexpr auto operator<=>(const Surfel&) const = default;
};

/// A sorted, duplicate-free set of sites.
class Region {
public:
    Region() = default;
    explicit Region(std::vector<SiteId> sites);
    Region(std::initializer_list<SiteId> sites);

    const std::vector<SiteId>& sites() const { return sites_; }
    std::size_t size() const { return sites_.size(); }
    bool empty() const { return sites_.empty(); }
    bool contains(SiteId s) const;
    bool is_subset_of(const Region& other) const;
    bool intersects(const Region& other) const;

    /// Per-site membership flags for a graph with `site_count` sites.
    std::vector<char> mask(std::size_t site_count) const;

    auto begin() const { return sites_.begin(); }
    auto end() const { return sites_.end(); }

    auto operator<=>(const Region&) const = default;

private:
    std::vector<SiteId> sites_;
};

/// Finite undirected graph without self-loops or repeated pairs. Immutable.
class Graph {
public:
    Graph(std::vector<std::string> names, std::vector<std::pair<SiteId, SiteId>> pairs);

    /// Builds sites named "0", "1", ... .
    static Graph with_anonymous_sites(std::size_t count, std::vector<std::pair<SiteId, SiteId>> pairs);

    std::size_t site_count() const { return names_.size(); }
    const std::string& name(SiteId s) const { return names_[s.index]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<SiteId> find(const std::string& name) const;

    std::span<const SiteId> neighbors(SiteId s) const { return adjacency_[s.index]; }
    bool adjacent(SiteId a, SiteId b) const;

    /// Unordered pairs, each stored with the smaller site first, sorted.
    const std::vector<std::pair<SiteId, SiteId>>& pairs() const { return pairs_; }

    bool is_connected() const;
    Region all_sites() const;
    Region complement(const Region& r) const;

    /// Throws InvalidRegionError unless every site of `r` belongs to this graph.
    void check_region(const Region& r) const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<SiteId>> adjacency_;
    std::vector<std::pair<SiteId, SiteId>> pairs_;
    std::unordered_map<std::string, SiteId> by_name_;
};

/// Graph plus a value per site and an optional reference site.
struct ScalarGraph {
    Graph graph;
    std::vector<double> values;
    std::optional<SiteId> reference;

    ScalarGraph(Graph g, std::vector<double> v, std::optional<SiteId> ref = std::nullopt);

    double value(SiteId s) const { return values[s.index]; }
    /// The explicit reference, or the least site.
    SiteId reference_site() const { return reference.value_or(SiteId{0}); }

    bool operator==(const ScalarGraph&) const = default;
};

/// Oriented bipartition (low, up) with both sides non-empty and connected.
class JCut {
public:
    /// Validates the bipartition against `g`; throws PreconditionError if it is not a J-cut.
    JCut(const Graph& g, Region low);

    /// Skips validation; for callers that have already established both sides are connected.
    static JCut unchecked(Region low, Region up) { return JCut(std::move(low), std::move(up)); }

    const Region& low() const { return low_; }
    const Region& up() const { return up_; }
    JCut flipped() const { return JCut(up_, low_); }

    /// Orientation-free form: the side holding the least site comes first.
    JCut canonical() const;

    auto operator<=>(const JCut&) const = default;

private:
    JCut(Region low, Region up) : low_(std::move(low)), up_(std::move(up)) {}

    Region low_;
    Region up_;
};

/// Connected components of the subgraph induced by `r`, ordered by least site.
std::vector<Region> components_of(const Graph& g, const Region& r);

bool is_connected_region(const Graph& g, const Region& r);

/// Sites of `r` with at least one neighbor outside `r`.
Region immediate_interior(const Graph& g, const Region& r);

bool is_jcut(const Graph& g, const Region& x);

/// Surfels (p, q) with p on the low side and q on the up side, sorted.
std::vector<Surfel> boundary_surfels(const Graph& g, const JCut& c);

std::vector<Surfel> inverse_surfels(std::span<const Surfel> s);

/// "{a,b,c}" using site names.
std::string format_region(const Graph& g, const Region& r);
/// "({a},{b,c})".
std::string format_cut(const Graph& g, const JCut& c);

}  // namespace isotree
