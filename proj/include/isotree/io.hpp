#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "isotree/contour_tree.hpp"
#include "isotree/graph.hpp"
#include "isotree/isotree.hpp"

namespace isotree::io {

/// Graph document:
///   {"sites": [{"id": "a", "value": 1}, ...], "adjacency": [["a", "b"], ...], "reference": "a"}
/// `reference` is optional. Throws ParseError (syntax, with line and column) or
/// ValidationError (content, with the offending field path).
ScalarGraph load_graph_json(std::string_view text);
std::string graph_to_json(const ScalarGraph& sg);

/// Plain (P2) or raw (P5) greymap as a triangulated grid, one site per pixel.
/// Throws ParseError with the byte offset of the problem.
ScalarGraph load_pgm(std::string_view bytes);

/// Tree document:
///   {"reference": id, "referenceValue": v,
///    "zones": [{"id": z, "sites": [...], "value": v}, ...],
///    "edges": [{"low": z, "up": z, "gap": g, "cut": [low-side sites]}, ...]}
/// Zone ids are the name of the zone's least site.
std::string export_tree_json(const Graph& g, const IsoTree& tree);
IsoTree parse_tree_json(const Graph& g, std::string_view text);

/// Accepts either a tree document (its edges become the division) or
///   {"cuts": [{"low": [site ids], "gap": g}, ...]}
ValuedJDivision parse_division_json(const Graph& g, std::string_view text);
std::string division_to_json(const Graph& g, const ValuedJDivision& d);

/// Graphviz digraph, edges pointing low -> up.
std::string export_dot(const Graph& g, const IsoTree& tree);

/// Merge trees, contour tree and perturbed tree of a pipeline run as one JSON document.
std::string intermediate_json(const Graph& g, const PipelineTrace& trace);

/// Integral values without a fraction, everything else in shortest round-trip form.
std::string format_number(double v);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace isotree::io
