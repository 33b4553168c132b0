#include "wlbound/dataset.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "wlbound/errors.hpp"

namespace wlb {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> read_lines(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError(file.string(), "cannot open file");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

long long parse_integer(const std::string& text, const std::filesystem::path& file,
                        std::size_t line_no) {
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw ParseError(file.string(), line_no, "expected an integer, got '" + text + "'");
    }
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos != text.size())
        throw ParseError(file.string(), line_no, "trailing characters after integer in '" + text + "'");
    return value;
}

// "u, v" with 1-indexed node ids
std::pair<long long, long long> parse_edge_line(const std::string& text,
                                                const std::filesystem::path& file,
                                                std::size_t line_no) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw ParseError(file.string(), line_no, "expected 'u, v', got '" + text + "'");
    const long long u = parse_integer(text.substr(0, comma), file, line_no);
    const long long v = parse_integer(text.substr(comma + 1), file, line_no);
    return {u, v};
}

std::filesystem::path dataset_file(const std::filesystem::path& directory, const std::string& name,
                                   const std::string& suffix) {
    return directory / (name + suffix);
}

} // namespace

GraphSample parse_tu_dataset(const std::filesystem::path& directory) {
    if (!std::filesystem::is_directory(directory))
        throw ParseError(directory.string(), "not a directory");

    // the dataset name is whatever prefixes _A.txt
    std::string name;
    for (const auto& entry : std::filesystem::directory_iterator(directory)) {
        const std::string fname = entry.path().filename().string();
        if (fname.size() > 6 && fname.ends_with("_A.txt")) {
            name = fname.substr(0, fname.size() - 6);
            break;
        }
    }
    if (name.empty())
        throw ParseError(directory.string(), "no <name>_A.txt file found");

    const auto indicator_path = dataset_file(directory, name, "_graph_indicator.txt");
    if (!std::filesystem::exists(indicator_path))
        throw ParseError(indicator_path.string(), "missing required file");
    const std::vector<std::string> indicator_lines = read_lines(indicator_path);
    const std::size_t node_count = indicator_lines.size();

    std::vector<std::size_t> graph_of_node(node_count);
    std::size_t max_graph_id = 0;
    for (std::size_t i = 0; i < node_count; ++i) {
        const long long id = parse_integer(indicator_lines[i], indicator_path, i + 1);
        if (id < 1)
            throw ParseError(indicator_path.string(), i + 1,
                             "graph ids are 1-indexed, got " + std::to_string(id));
        graph_of_node[i] = static_cast<std::size_t>(id);
        max_graph_id = std::max(max_graph_id, graph_of_node[i]);
    }

    // graph labels, when present, also declare the graph count
    std::optional<std::vector<long long>> raw_labels;
    const auto graph_labels_path = dataset_file(directory, name, "_graph_labels.txt");
    if (std::filesystem::exists(graph_labels_path)) {
        const std::vector<std::string> label_lines = read_lines(graph_labels_path);
        raw_labels.emplace();
        raw_labels->reserve(label_lines.size());
        for (std::size_t i = 0; i < label_lines.size(); ++i)
            raw_labels->push_back(parse_integer(label_lines[i], graph_labels_path, i + 1));
    }

    std::size_t graph_count = raw_labels ? raw_labels->size() : max_graph_id;
    if (graph_count == 0) throw ParseError(directory.string(), "dataset declares no graphs");
    if (max_graph_id > graph_count)
        throw ParseError(indicator_path.string(),
                         "graph indicator references graph " + std::to_string(max_graph_id) +
                             " but only " + std::to_string(graph_count) + " graphs are declared");

    // translate global 1-indexed node ids to (graph, local node)
    std::vector<NodeId> local_index(node_count);
    std::vector<NodeId> nodes_per_graph(graph_count, 0);
    for (std::size_t i = 0; i < node_count; ++i) {
        const std::size_t g = graph_of_node[i] - 1;
        local_index[i] = nodes_per_graph[g]++;
    }

    std::optional<std::vector<long long>> node_labels;
    const auto node_labels_path = dataset_file(directory, name, "_node_labels.txt");
    if (std::filesystem::exists(node_labels_path)) {
        const std::vector<std::string> label_lines = read_lines(node_labels_path);
        if (label_lines.size() != node_count)
            throw ParseError(node_labels_path.string(),
                             "expected " + std::to_string(node_count) + " node labels, got " +
                                 std::to_string(label_lines.size()));
        node_labels.emplace();
        node_labels->reserve(node_count);
        for (std::size_t i = 0; i < node_count; ++i)
            node_labels->push_back(parse_integer(label_lines[i], node_labels_path, i + 1));
    }

    const auto edges_path = dataset_file(directory, name, "_A.txt");
    std::vector<std::set<Edge>> edge_sets(graph_count);
    const std::vector<std::string> edge_lines = read_lines(edges_path);
    for (std::size_t i = 0; i < edge_lines.size(); ++i) {
        if (edge_lines[i].empty()) continue;
        const auto [raw_u, raw_v] = parse_edge_line(edge_lines[i], edges_path, i + 1);
        if (raw_u < 1 || raw_v < 1 || raw_u > static_cast<long long>(node_count) ||
            raw_v > static_cast<long long>(node_count))
            throw ParseError(edges_path.string(), i + 1,
                             "node id out of range for " + std::to_string(node_count) + " nodes");
        const std::size_t u = static_cast<std::size_t>(raw_u) - 1;
        const std::size_t v = static_cast<std::size_t>(raw_v) - 1;
        if (graph_of_node[u] != graph_of_node[v])
            throw ParseError(edges_path.string(), i + 1, "edge endpoints lie in different graphs");
        if (u == v)
            throw ParseError(edges_path.string(), i + 1, "self-loop at node " + std::to_string(raw_u));
        NodeId a = local_index[u];
        NodeId b = local_index[v];
        if (a > b) std::swap(a, b);
        // adjacency files list each edge in both directions; keep one copy
        edge_sets[graph_of_node[u] - 1].insert({a, b});
    }

    std::vector<std::vector<AttributeVector>> attrs;
    if (node_labels) {
        attrs.resize(graph_count);
        for (std::size_t g = 0; g < graph_count; ++g) attrs[g].resize(nodes_per_graph[g]);
        for (std::size_t i = 0; i < node_count; ++i)
            attrs[graph_of_node[i] - 1][local_index[i]] = {static_cast<double>((*node_labels)[i])};
    }

    std::vector<AttributedGraph> graphs;
    graphs.reserve(graph_count);
    for (std::size_t g = 0; g < graph_count; ++g) {
        std::vector<Edge> edges(edge_sets[g].begin(), edge_sets[g].end());
        std::optional<std::vector<AttributeVector>> graph_attrs;
        if (node_labels) graph_attrs = std::move(attrs[g]);
        graphs.push_back(make_graph(nodes_per_graph[g], std::move(edges), std::move(graph_attrs)));
    }

    std::optional<std::vector<int>> labels;
    bool labels_dropped = false;
    if (raw_labels) {
        std::set<long long> distinct(raw_labels->begin(), raw_labels->end());
        if (distinct.size() <= 2) {
            labels.emplace();
            labels->reserve(graph_count);
            const long long low = *distinct.begin();
            for (long long raw : *raw_labels) labels->push_back(raw == low ? -1 : 1);
            if (distinct.size() == 1) {
                // a single class carries no signal either way; call it +1
                std::fill(labels->begin(), labels->end(), 1);
            }
        } else {
            labels_dropped = true;
        }
    }

    GraphSample sample;
    try {
        sample = make_sample(std::move(graphs), std::move(labels));
    } catch (const ValidationError& e) {
        throw ParseError(directory.string(), e.what());
    }
    sample.labels_dropped = labels_dropped;
    return sample;
}

GraphSample parse_jsonl(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError(file.string(), "cannot open file");

    std::vector<AttributedGraph> graphs;
    std::vector<int> labels;
    std::size_t labeled_lines = 0;
    std::size_t first_unlabeled_line = 0;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

        Json obj;
        try {
            obj = Json::parse(line);
        } catch (const Json::exception& e) {
            throw ParseError(file.string(), line_no, e.what());
        }
        if (!obj.is_object())
            throw ParseError(file.string(), line_no, "expected a JSON object");

        if (!obj.contains("n") || !obj["n"].is_number_integer() || obj["n"].get<long long>() < 0)
            throw ParseError(file.string(), line_no, "'n' must be a nonnegative integer");
        const NodeId n = obj["n"].get<NodeId>();

        std::vector<Edge> edges;
        if (obj.contains("edges")) {
            if (!obj["edges"].is_array())
                throw ParseError(file.string(), line_no, "'edges' must be an array");
            for (const Json& e : obj["edges"]) {
                if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                    !e[1].is_number_integer() || e[0].get<long long>() < 0 ||
                    e[1].get<long long>() < 0)
                    throw ParseError(file.string(), line_no,
                                     "each edge must be a pair of nonnegative integers");
                edges.emplace_back(e[0].get<NodeId>(), e[1].get<NodeId>());
            }
        }

        std::optional<std::vector<AttributeVector>> attrs;
        if (obj.contains("attrs")) {
            if (!obj["attrs"].is_array())
                throw ParseError(file.string(), line_no, "'attrs' must be an array");
            attrs.emplace();
            for (const Json& row : obj["attrs"]) {
                if (!row.is_array())
                    throw ParseError(file.string(), line_no, "'attrs' entries must be arrays");
                AttributeVector values;
                for (const Json& x : row) {
                    if (!x.is_number())
                        throw ParseError(file.string(), line_no, "attribute values must be numbers");
                    values.push_back(x.get<double>());
                }
                attrs->push_back(std::move(values));
            }
        }

        if (obj.contains("label")) {
            if (!obj["label"].is_number_integer())
                throw ParseError(file.string(), line_no, "'label' must be -1 or 1");
            const long long y = obj["label"].get<long long>();
            if (y != -1 && y != 1)
                throw ParseError(file.string(), line_no,
                                 "'label' must be -1 or 1, got " + std::to_string(y));
            labels.push_back(static_cast<int>(y));
            ++labeled_lines;
        } else if (first_unlabeled_line == 0) {
            first_unlabeled_line = line_no;
        }

        try {
            graphs.push_back(make_graph(n, std::move(edges), std::move(attrs)));
        } catch (const ValidationError& e) {
            throw ParseError(file.string(), line_no, e.what());
        }
    }

    if (graphs.empty()) throw ParseError(file.string(), "empty dataset");
    if (labeled_lines != 0 && labeled_lines != graphs.size())
        throw ParseError(file.string(), first_unlabeled_line,
                         "label missing on this line but present on others");

    std::optional<std::vector<int>> sample_labels;
    if (labeled_lines == graphs.size()) sample_labels = std::move(labels);
    try {
        return make_sample(std::move(graphs), std::move(sample_labels));
    } catch (const ValidationError& e) {
        throw ParseError(file.string(), e.what());
    }
}

std::string to_jsonl(const GraphSample& sample) {
    validate_sample(sample);
    std::string out;
    for (std::size_t i = 0; i < sample.graphs.size(); ++i) {
        const AttributedGraph& g = sample.graphs[i];
        Json obj;
        obj["n"] = g.node_count;
        Json edges = Json::array();
        for (const auto& [u, v] : g.edges) edges.push_back(Json::array({u, v}));
        obj["edges"] = std::move(edges);
        if (g.attributes) obj["attrs"] = *g.attributes;
        if (sample.labels) obj["label"] = (*sample.labels)[i];
        out += obj.dump();
        out += '\n';
    }
    return out;
}

void write_jsonl(const GraphSample& sample, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw ParseError(file.string(), "cannot open file for writing");
    out << to_jsonl(sample);
    if (!out) throw ParseError(file.string(), "write failed");
}

} // namespace wlb
