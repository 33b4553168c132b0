#pragma once

#include <filesystem>
#include <string>

#include "wlbound/graph.hpp"

namespace wlb {

/// Loads a dataset directory in the common benchmark layout:
///   <DS>_A.txt               comma-separated edge list, 1-indexed node ids
///   <DS>_graph_indicator.txt graph id (1-indexed) per node
///   <DS>_node_labels.txt     optional, one integer per node
///   <DS>_graph_labels.txt    optional, one value per graph
/// Node labels become 1-dimensional attributes. Graph labels are mapped
/// onto {-1, +1} when at most two distinct values occur (smaller value to
/// -1); with more distinct values the labels are dropped and
/// labels_dropped is set instead of failing.
GraphSample parse_tu_dataset(const std::filesystem::path& directory);

/// Loads a sample stored as one JSON object per line:
///   {"n": 3, "edges": [[0,1],[1,2]], "attrs": [[...],...], "label": 1}
/// "attrs" and "label" are optional, but label presence must be consistent
/// across lines. Errors carry file and line number.
GraphSample parse_jsonl(const std::filesystem::path& file);

/// Serializes a sample in the parse_jsonl line format. Edges come out
/// normalized; attribute values round-trip exactly.
std::string to_jsonl(const GraphSample& sample);

/// to_jsonl straight to a file.
void write_jsonl(const GraphSample& sample, const std::filesystem::path& file);

} // namespace wlb
