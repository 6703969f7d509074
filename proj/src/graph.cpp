#include "isotree/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "isotree/errors.hpp"

namespace isotree {

Region::Region(std::vector<SiteId> sites) : sites_(std::move(sites)) {
    std::sort(sites_.begin(), sites_.end());
    sites_.erase(std::unique(sites_.begin(), sites_.end()), sites_.end());
}

Region::Region(std::initializer_list<SiteId> sites) : Region(std::vector<SiteId>(sites)) {}

bool Region::contains(SiteId s) const {
    return std::binary_search(sites_.begin(), sites_.end(), s);
}

bool Region::is_subset_of(const Region& other) const {
    return std::includes(other.sites_.begin(), other.sites_.end(), sites_.begin(), sites_.end());
}

bool Region::intersects(const Region& other) const {
    auto a = sites_.begin();
    auto b = other.sites_.begin();
    while (a != sites_.end() && b != other.sites_.end()) {
        if (*a == *b) return true;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return false;
}

std::vector<char> Region::mask(std::size_t site_count) const {
    std::vector<char> m(site_count, 0);
    for (SiteId s : sites_)
        if (s.index < site_count) m[s.index] = 1;
    return m;
}

Graph::Graph(std::vector<std::string> names, std::vector<std::pair<SiteId, SiteId>> pairs)
    : names_(std::move(names)), adjacency_(names_.size()) {
    if (names_.empty()) throw PreconditionError("graph must have at least one site");
    const auto n = names_.size();
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, inserted] = by_name_.emplace(names_[i], SiteId{static_cast<std::uint32_t>(i)});
        if (!inserted) throw PreconditionError("duplicate site name '" + names_[i] + "'");
    }
    pairs_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        if (a.index >= n || b.index >= n)
            throw InvalidRegionError("adjacency pair references unknown site");
        if (a == b) throw PreconditionError("self-pair on site '" + names_[a.index] + "'");
        if (b < a) std::swap(a, b);
        pairs_.emplace_back(a, b);
    }
    std::sort(pairs_.begin(), pairs_.end());
    if (auto dup = std::adjacent_find(pairs_.begin(), pairs_.end()); dup != pairs_.end())
        throw PreconditionError("duplicate pair {" + names_[dup->first.index] + "," +
                                names_[dup->second.index] + "}");
    for (auto [a, b] : pairs_) {
        adjacency_[a.index].push_back(b);
        adjacency_[b.index].push_back(a);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

Graph Graph::with_anonymous_sites(std::size_t count, std::vector<std::pair<SiteId, SiteId>> pairs) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 0; i < count; ++i) names.push_back(std::to_string(i));
    return Graph(std::move(names), std::move(pairs));
}

std::optional<SiteId> Graph::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

bool Graph::adjacent(SiteId a, SiteId b) const {
    const auto& adj = adjacency_[a.index];
    return std::binary_search(adj.begin(), adj.end(), b);
}

bool Graph::is_connected() const { return components_of(*this, all_sites()).size() == 1; }

Region Graph::all_sites() const {
    std::vector<SiteId> all(site_count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = SiteId{static_cast<std::uint32_t>(i)};
    return Region(std::move(all));
}

Region Graph::complement(const Region& r) const {
    check_region(r);
    std::vector<SiteId> out;
    out.reserve(site_count() - r.size());
    auto it = r.begin();
    for (std::uint32_t i = 0; i < site_count(); ++i) {
        if (it != r.end() && it->index == i)
            ++it;
        else
            out.emplace_back(i);
    }
    return Region(std::move(out));
}

void Graph::check_region(const Region& r) const {
    if (!r.empty() && r.sites().back().index >= site_count())
        throw InvalidRegionError("region references unknown site index " +
                                 std::to_string(r.sites().back().index));
}

ScalarGraph::ScalarGraph(Graph g, std::vector<double> v, std::optional<SiteId> ref)
    : graph(std::move(g)), values(std::move(v)), reference(ref) {
    if (values.size() != graph.site_count())
        throw PreconditionError("value count " + std::to_string(values.size()) +
                                " does not match site count " + std::to_string(graph.site_count()));
    if (reference && reference->index >= graph.site_count())
        throw InvalidRegionError("reference site out of range");
}

JCut::JCut(const Graph& g, Region low) : low_(std::move(low)), up_(g.complement(low_)) {
    if (!is_jcut(g, low_)) throw PreconditionError("not a J-cut: " + format_region(g, low_));
}

JCut JCut::canonical() const {
    if (!low_.empty() && (up_.empty() || low_.sites().front() < up_.sites().front())) return *this;
    return flipped();
}

std::vector<Region> components_of(const Graph& g, const Region& r) {
    g.check_region(r);
    const auto n = g.site_count();
    auto inside = r.mask(n);
    std::vector<char> seen(n, 0);
    std::vector<Region> out;
    std::deque<SiteId> queue;
    for (SiteId start : r) {
        if (seen[start.index]) continue;
        std::vector<SiteId> comp;
        seen[start.index] = 1;
        queue.push_back(start);
        while (!queue.empty()) {
            SiteId s = queue.front();
            queue.pop_front();
            comp.push_back(s);
            for (SiteId t : g.neighbors(s)) {
                if (inside[t.index] && !seen[t.index]) {
                    seen[t.index] = 1;
                    queue.push_back(t);
                }
            }
        }
        out.emplace_back(std::move(comp));
    }
    return out;
}

bool is_connected_region(const Graph& g, const Region& r) {
    return !r.empty() && components_of(g, r).size() == 1;
}

Region immediate_interior(const Graph& g, const Region& r) {
    g.check_region(r);
    auto inside = r.mask(g.site_count());
    std::vector<SiteId> out;
    for (SiteId p : r) {
        auto nb = g.neighbors(p);
        if (std::any_of(nb.begin(), nb.end(), [&](SiteId q) { return !inside[q.index]; }))
            out.push_back(p);
    }
    return Region(std::move(out));
}

bool is_jcut(const Graph& g, const Region& x) {
    g.check_region(x);
    if (x.empty() || x.size() == g.site_count()) return false;
    return is_connected_region(g, x) && is_connected_region(g, g.complement(x));
}

std::vector<Surfel> boundary_surfels(const Graph& g, const JCut& c) {
    auto inside = c.low().mask(g.site_count());
    std::vector<Surfel> out;
    for (SiteId p : c.low())
        for (SiteId q : g.neighbors(p))
            if (!inside[q.index]) out.push_back({p, q});
    return out;
}

std::vector<Surfel> inverse_surfels(std::span<const Surfel> s) {
    std::vector<Surfel> out;
    out.reserve(s.size());
    for (const Surfel& e : s) out.push_back(e.inverse());
    std::sort(out.begin(), out.end());
    return out;
}

std::string format_region(const Graph& g, const Region& r) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (SiteId s : r) {
        if (!first) os << ',';
        first = false;
        os << g.name(s);
    }
    os << '}';
    return os.str();
}

std::string format_cut(const Graph& g, const JCut& c) {
    return "(" + format_region(g, c.low()) + "," + format_region(g, c.up()) + ")";
}

}  // namespace isotree
