#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "isotree/graph.hpp"

namespace isotree {

inline constexpr std::size_t kDefaultEnumerationCap = 16;

enum class CutSide { low, up };

/// Verdict of the exhaustive mono-connectivity check.
struct MonoWitness {
    bool verdict = true;
    std::optional<JCut> counterexample;
    std::optional<CutSide> failing_side;
};

/// All J-cuts of a connected graph, one per unordered bipartition, in canonical
/// orientation (side with the least site low), sorted by low side.
std::vector<JCut> enumerate_jcuts(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

/// Throws PreconditionError on disconnected graphs and SizeLimitError above `cap`.
MonoWitness is_mono_connected(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

namespace values {

/// start, start + step, start + 2 step, ... in site order.
struct Ramp {
    double start = 0;
    double step = 1;
};

struct Constant {
    double value = 0;
};

/// Integers drawn uniformly from [lo, hi] with a 64-bit Mersenne twister.
struct SeededRandom {
    std::uint64_t seed = 0;
    std::int64_t lo = 0;
    std::int64_t hi = 5;
};

struct Explicit {
    std::vector<double> values;
};

}  // namespace values

using ValuePolicy = std::variant<values::Ramp, values::Constant, values::SeededRandom, values::Explicit>;

std::vector<double> assign_values(const ValuePolicy& policy, std::size_t count);

/// Triangulated width x height grid. Sites "r{row}c{col}" in row-major order;
/// axis neighbours plus the NW-SE diagonal of every unit square.
ScalarGraph gen_tri_grid(std::size_t width, std::size_t height, const ValuePolicy& policy);

/// Path p0 - p1 - ... - p{n-1}.
ScalarGraph gen_path(std::size_t n, const ValuePolicy& policy);

/// Cycle c0 - ... - c{n-1} - c0 (n >= 3). Never mono-connected for n >= 4.
ScalarGraph gen_cycle(std::size_t n, const ValuePolicy& policy);

}  // namespace isotree
