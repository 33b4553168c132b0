#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace wlb {

using NodeId = std::uint32_t;

/// Undirected edge stored with first < second.
using Edge = std::pair<NodeId, NodeId>;

using AttributeVector = std::vector<double>;

/// Finite simple undirected graph, optionally carrying one real-valued
/// attribute vector per node (all of the same dimension).
struct AttributedGraph {
    NodeId node_count = 0;
    std::vector<Edge> edges;  // normalized: endpoints ordered, sorted, unique
    std::optional<std::vector<AttributeVector>> attributes;

    std::size_t edge_count() const noexcept { return edges.size(); }
    bool has_attributes() const noexcept { return attributes.has_value(); }

    /// 0 when attributes are absent or the graph is empty.
    std::size_t attribute_dimension() const noexcept;

    std::vector<NodeId> degrees() const;

    bool operator==(const AttributedGraph&) const = default;
};

/// Builds a graph from raw edge pairs: orders endpoints, sorts, then checks
/// every invariant. Throws ValidationError on self-loops, duplicate edges,
/// out-of-range endpoints, or malformed attributes.
AttributedGraph make_graph(NodeId node_count, std::vector<Edge> edges,
                           std::optional<std::vector<AttributeVector>> attributes = std::nullopt);

/// Throws ValidationError unless all AttributedGraph invariants hold.
void validate_graph(const AttributedGraph& graph);

/// Ordered sample of graphs with optional binary labels in {-1, +1}.
/// Either every graph carries attributes (same dimension throughout) or
/// none does.
struct GraphSample {
    std::vector<AttributedGraph> graphs;
    std::optional<std::vector<int>> labels;
    bool labels_dropped = false;  // set by loaders that discard unusable labels

    std::size_t size() const noexcept { return graphs.size(); }
    bool has_labels() const noexcept { return labels.has_value(); }
};

/// Validating constructor for GraphSample. The sample must be non-empty.
GraphSample make_sample(std::vector<AttributedGraph> graphs,
                        std::optional<std::vector<int>> labels = std::nullopt);

/// Throws ValidationError unless all GraphSample invariants hold.
void validate_sample(const GraphSample& sample);

/// Relabels nodes: node v of the input becomes node permutation[v] of the
/// output, and attribute vectors move with their nodes. The permutation
/// must be a bijection on [0, node_count).
AttributedGraph permute_nodes(const AttributedGraph& graph,
                              const std::vector<NodeId>& permutation);

/// Concatenates two samples. Labels survive only when both inputs have
/// them; attribute presence and dimension must be compatible.
GraphSample concatenate_samples(const GraphSample& a, const GraphSample& b);

} // namespace wlb
