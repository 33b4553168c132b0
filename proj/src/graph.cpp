#include "wlbound/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wlbound/errors.hpp"

namespace wlb {

namespace {

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
}

} // namespace

std::size_t AttributedGraph::attribute_dimension() const noexcept {
    if (!attributes || attributes->empty()) return 0;
    return attributes->front().size();
}

std::vector<NodeId> AttributedGraph::degrees() const {
    std::vector<NodeId> deg(node_count, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

void validate_graph(const AttributedGraph& graph) {
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        const Edge& e = graph.edges[i];
        if (e.first == e.second)
            throw ValidationError("self-loop at node " + std::to_string(e.first));
        if (e.first > e.second)
            throw ValidationError("edge endpoints not ordered: " + edge_str(e));
        if (e.second >= graph.node_count)
            throw ValidationError("edge endpoint out of range: " + edge_str(e) + " with " +
                                  std::to_string(graph.node_count) + " nodes");
        if (i > 0) {
            if (graph.edges[i - 1] == e) throw ValidationError("duplicate edge " + edge_str(e));
            if (e < graph.edges[i - 1]) throw ValidationError("edge list not sorted");
        }
    }
    if (graph.attributes) {
        if (graph.attributes->size() != graph.node_count)
            throw ValidationError("attribute list has " + std::to_string(graph.attributes->size()) +
                                  " entries for " + std::to_string(graph.node_count) + " nodes");
        const std::size_t dim = graph.attribute_dimension();
        for (const AttributeVector& a : *graph.attributes) {
            if (a.size() != dim)
                throw ValidationError("attribute vectors must share one dimension");
            for (double x : a)
                if (!std::isfinite(x)) throw ValidationError("non-finite attribute value");
        }
    }
}

AttributedGraph make_graph(NodeId node_count, std::vector<Edge> edges,
                           std::optional<std::vector<AttributeVector>> attributes) {
    for (Edge& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    AttributedGraph graph{node_count, std::move(edges), std::move(attributes)};
    validate_graph(graph);
    return graph;
}

void validate_sample(const GraphSample& sample) {
    if (sample.graphs.empty()) throw ValidationError("sample must contain at least one graph");
    for (const AttributedGraph& g : sample.graphs) validate_graph(g);

    const bool with_attrs = sample.graphs.front().has_attributes();
    std::size_t dim = 0;
    bool dim_known = false;
    for (std::size_t i = 0; i < sample.graphs.size(); ++i) {
        const AttributedGraph& g = sample.graphs[i];
        if (g.has_attributes() != with_attrs)
            throw ValidationError("graph " + std::to_string(i) +
                                  " disagrees with the rest of the sample on attribute presence");
        if (!with_attrs || g.node_count == 0) continue;
        if (!dim_known) {
            dim = g.attribute_dimension();
            dim_known = true;
        } else if (g.attribute_dimension() != dim) {
            throw ValidationError("graph " + std::to_string(i) + " has attribute dimension " +
                                  std::to_string(g.attribute_dimension()) + ", expected " +
                                  std::to_string(dim));
        }
    }

    if (sample.labels) {
        if (sample.labels->size() != sample.graphs.size())
            throw ValidationError("label count " + std::to_string(sample.labels->size()) +
                                  " does not match sample size " +
                                  std::to_string(sample.graphs.size()));
        for (int y : *sample.labels)
            if (y != -1 && y != 1)
                throw ValidationError("labels must be -1 or +1, got " + std::to_string(y));
    }
}

GraphSample make_sample(std::vector<AttributedGraph> graphs, std::optional<std::vector<int>> labels) {
    GraphSample sample{std::move(graphs), std::move(labels), false};
    validate_sample(sample);
    return sample;
}

AttributedGraph permute_nodes(const AttributedGraph& graph, const std::vector<NodeId>& permutation) {
    validate_graph(graph);
    if (permutation.size() != graph.node_count)
        throw ValidationError("permutation has " + std::to_string(permutation.size()) +
                              " entries for " + std::to_string(graph.node_count) + " nodes");
    std::vector<bool> seen(graph.node_count, false);
    for (NodeId target : permutation) {
        if (target >= graph.node_count || seen[target])
            throw ValidationError("permutation is not a bijection on the node set");
        seen[target] = true;
    }

    std::vector<Edge> edges;
    edges.reserve(graph.edges.size());
    for (const auto& [u, v] : graph.edges) edges.emplace_back(permutation[u], permutation[v]);

    std::optional<std::vector<AttributeVector>> attributes;
    if (graph.attributes) {
        attributes.emplace(graph.node_count);
        for (NodeId v = 0; v < graph.node_count; ++v)
            (*attributes)[permutation[v]] = (*graph.attributes)[v];
    }
    return make_graph(graph.node_count, std::move(edges), std::move(attributes));
}

GraphSample concatenate_samples(const GraphSample& a, const GraphSample& b) {
    validate_sample(a);
    validate_sample(b);
    std::vector<AttributedGraph> graphs = a.graphs;
    graphs.insert(graphs.end(), b.graphs.begin(), b.graphs.end());

    std::optional<std::vector<int>> labels;
    if (a.labels && b.labels) {
        labels = *a.labels;
        labels->insert(labels->end(), b.labels->begin(), b.labels->end());
    }
    GraphSample joined = make_sample(std::move(graphs), std::move(labels));
    joined.labels_dropped = a.labels_dropped || b.labels_dropped;
    return joined;
}

} // namespace wlb
