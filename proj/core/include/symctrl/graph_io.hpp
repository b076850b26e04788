#pragma once

#include <symctrl/graph.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace symctrl {

enum class GraphFormat { EdgeList, AdjacencyCsv, MatrixMarket };

std::optional<GraphFormat> parse_format_name(std::string_view name);
std::string_view format_name(GraphFormat format);

/// Guesses the format from a file name extension and, failing that, from
/// the leading bytes of the content.
GraphFormat detect_format(std::string_view path, std::string_view content);

struct IngestResult {
    GraphSpec graph;
    /// Present only when the source carries weights.
    std::optional<WeightAssignment> weights;
};

/// Parses a graph in one of the supported text formats.
///
/// Edge list: lines "i j [w]", 0-based, '#' starts a comment, w an exact
/// decimal or "p/q" (default 1). A comment of the form "# Nodes: N" fixes
/// the vertex count; otherwise it is one past the largest index seen.
/// Weights are reported when at least one line carries one.
///
/// Adjacency CSV: n rows of n comma-separated exact values, symmetric with
/// zero diagonal. Nonzero entries become edges.
///
/// Matrix Market: "coordinate" with field real, integer or pattern and
/// symmetry symmetric or general; 1-based indices are shifted to 0-based.
/// Explicit zeros are dropped.
///
/// Throws ParseError, AsymmetricMatrix, SelfLoop, IndexOutOfRange or DuplicateEdge.
IngestResult ingest(std::string_view text, GraphFormat format);

/// Canonical emitter. Edges are written in lexicographic order; weights are
/// written when given. ingest(emit(g, w, f), f) reproduces (g, w) whenever
/// the format can represent them (adjacency CSV cannot hold zero weights).
std::string emit(const GraphSpec& graph, const WeightAssignment* weights, GraphFormat format);

}  // namespace symctrl
