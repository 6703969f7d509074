#pragma once

// Bitmask view of a small graph (at most 64 sites) for exhaustive subset scans.

#include <bit>
#include <cstdint>
#include <vector>

#include "isotree/graph.hpp"

namespace isotree::detail {

class MaskGraph {
public:
    explicit MaskGraph(const Graph& g) : n_(g.site_count()), adj_(n_, 0) {
        for (auto [a, b] : g.pairs()) {
            adj_[a.index] |= std::uint64_t{1} << b.index;
            adj_[b.index] |= std::uint64_t{1} << a.index;
        }
    }

    std::size_t size() const { return n_; }
    std::uint64_t full() const { return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1; }

    bool connected(std::uint64_t set) const {
        if (set == 0) return false;
        std::uint64_t reached = set & (~set + 1);
        std::uint64_t frontier = reached;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
            next &= set & ~reached;
            reached |= next;
            frontier = next;
        }
        return reached == set;
    }

    /// Members of `set` with a neighbour outside it.
    std::uint64_t interior(std::uint64_t set) const {
        std::uint64_t out = 0;
        const std::uint64_t outside = full() & ~set;
        for (std::uint64_t f = set; f; f &= f - 1) {
            int i = std::countr_zero(f);
            if (adj_[i] & outside) out |= std::uint64_t{1} << i;
        }
        return out;
    }

    static Region to_region(std::uint64_t set) {
        std::vector<SiteId> sites;
        for (; set; set &= set - 1) sites.emplace_back(static_cast<std::uint32_t>(std::countr_zero(set)));
        return Region(std::move(sites));
    }

private:
    std::size_t n_;
    std::vector<std::uint64_t> adj_;
};

}  // namespace isotree::detail
