#include "isotree/mono.hpp"

#include <algorithm>
#include <random>

#include "isotree/errors.hpp"
#include "mask_graph.hpp"

namespace isotree {

namespace {

void check_enumerable(const Graph& g, std::size_t cap) {
    const auto n = g.site_count();
    if (n > cap || n > 63)
        throw SizeLimitError("graph has " + std::to_string(n) + " sites; exhaustive cap is " +
                             std::to_string(std::min<std::size_t>(cap, 63)));
    if (!g.is_connected()) throw PreconditionError("graph is disconnected");
}

// Canonical low sides, i.e. connected subsets holding site 0 whose complement is
// non-empty and connected. Visited in increasing mask order.
template <class Visit>
void for_each_cut_mask(const detail::MaskGraph& mg, Visit&& visit) {
    const std::size_t n = mg.size();
    if (n < 2) return;
    const std::uint64_t full = mg.full();
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    for (std::uint64_t m = 0; m < count; ++m) {
        const std::uint64_t low = 1 | (m << 1);
        if (low == full) continue;
        if (mg.connected(low) && mg.connected(full & ~low)) visit(low);
    }
}

}  // namespace

std::vector<JCut> enumerate_jcuts(const Graph& g, std::size_t cap) {
    check_enumerable(g, cap);
    detail::MaskGraph mg(g);
    std::vector<JCut> cuts;
    for_each_cut_mask(mg, [&](std::uint64_t low) {
        cuts.push_back(JCut::unchecked(detail::MaskGraph::to_region(low),
                                       detail::MaskGraph::to_region(mg.full() & ~low)));
    });
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

MonoWitness is_mono_connected(const Graph& g, std::size_t cap) {
    for (const JCut& cut : enumerate_jcuts(g, cap)) {
        if (!is_connected_region(g, immediate_interior(g, cut.low())))
            return {false, cut, CutSide::low};
        if (!is_connected_region(g, immediate_interior(g, cut.up())))
            return {false, cut, CutSide::up};
    }
    return {};
}

std::vector<double> assign_values(const ValuePolicy& policy, std::size_t count) {
    struct Visitor {
        std::size_t n;
        std::vector<double> operator()(const values::Ramp& r) const {
            std::vector<double> v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = r.start + r.step * static_cast<double>(i);
            return v;
        }
        std::vector<double> operator()(const values::Constant& c) const {
            return std::vector<double>(n, c.value);
        }
        std::vector<double> operator()(const values::SeededRandom& r) const {
            if (r.hi < r.lo) throw PreconditionError("random value range is empty");
            // Reduce the raw engine output directly so the sequence does not depend
            // on the standard library's distribution implementation.
            std::mt19937_64 rng(r.seed);
            const auto span = static_cast<std::uint64_t>(r.hi - r.lo) + 1;
            std::vector<double> v(n);
            for (auto& x : v) x = static_cast<double>(r.lo + static_cast<std::int64_t>(rng() % span));
            return v;
        }
        std::vector<double> operator()(const values::Explicit& e) const {
            if (e.values.size() != n)
                throw PreconditionError("explicit value list has " + std::to_string(e.values.size()) +
                                        " entries, expected " + std::to_string(n));
            return e.values;
        }
    };
    return std::visit(Visitor{count}, policy);
}

ScalarGraph gen_tri_grid(std::size_t width, std::size_t height, const ValuePolicy& policy) {
    if (width == 0 || height == 0) throw PreconditionError("grid dimensions must be positive");
    std::vector<std::string> names;
    names.reserve(width * height);
    for (std::size_t r = 0; r < height; ++r)
        for (std::size_t c = 0; c < width; ++c)
            names.push_back("r" + std::to_string(r) + "c" + std::to_string(c));
    auto id = [width](std::size_t r, std::size_t c) { return SiteId{static_cast<std::uint32_t>(r * width + c)}; };
    std::vector<std::pair<SiteId, SiteId>> pairs;
    for (std::size_t r = 0; r < height; ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            if (c + 1 < width) pairs.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < height) pairs.emplace_back(id(r, c), id(r + 1, c));
            if (c + 1 < width && r + 1 < height) pairs.emplace_back(id(r, c), id(r + 1, c + 1));
        }
    }
    Graph g(std::move(names), std::move(pairs));
    auto vals = assign_values(policy, g.site_count());
    return ScalarGraph(std::move(g), std::move(vals));
}

ScalarGraph gen_path(std::size_t n, const ValuePolicy& policy) {
    if (n == 0) throw PreconditionError("path length must be positive");
    std::vector<std::string> names;
    std::vector<std::pair<SiteId, SiteId>> pairs;
    for (std::uint32_t i = 0; i < n; ++i) {
        names.push_back("p" + std::to_string(i));
        if (i + 1 < n) pairs.emplace_back(SiteId{i}, SiteId{i + 1});
    }
    Graph g(std::move(names), std::move(pairs));
    auto vals = assign_values(policy, n);
    return ScalarGraph(std::move(g), std::move(vals));
}

ScalarGraph gen_cycle(std::size_t n, const ValuePolicy& policy) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 sites");
    std::vector<std::string> names;
    std::vector<std::pair<SiteId, SiteId>> pairs;
    for (std::uint32_t i = 0; i < n; ++i) {
        names.push_back("c" + std::to_string(i));
        pairs.emplace_back(SiteId{i}, SiteId{static_cast<std::uint32_t>((i + 1) % n)});
    }
    Graph g(std::move(names), std::move(pairs));
    auto vals = assign_values(policy, n);
    return ScalarGraph(std::move(g), std::move(vals));
}

}  // namespace isotree
