#pragma once

// Exponential, definition-literal level cut enumeration. Ground truth for the
// merge-tree pipeline on small graphs.

#include <vector>

#include "isotree/isotree.hpp"

namespace isotree {

struct OracleOptions {
    std::size_t max_sites = 14;
    /// Skip the exhaustive mono-connectivity check.
    bool trust_mono_connected = false;
};

/// Every J-cut tried in both orientations against the level cut inequality; gaps
/// read from the zone values on either side.
std::vector<LCut> brute_force_lcuts(const ScalarGraph& sg, const OracleOptions& opts = {});

/// Iso-tree assembled from brute_force_lcuts. Nesting, tangency, the free-tree shape
/// and the zone properties are all asserted; failures raise TheoremViolationError.
IsoTree brute_force_iso_tree(const ScalarGraph& sg, const OracleOptions& opts = {});

}  // namespace isotree
