#include "wlbound/synth.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "wlbound/errors.hpp"
#include "wlbound/rng.hpp"

namespace wlb {

namespace {

constexpr std::size_t kPairingAttempts = 10000;

AttributedGraph gen_erdos_renyi(NodeId n, double p, SplitMix64& rng) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (rng.next_double() < p) edges.emplace_back(u, v);
    return make_graph(n, std::move(edges));
}

AttributedGraph gen_d_regular(NodeId n, NodeId d, SplitMix64& rng) {
    if (d == 0) return make_graph(n, {});

    // configuration model: shuffle node stubs, pair them off, retry on
    // self-loops or duplicates
    std::vector<NodeId> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (NodeId v = 0; v < n; ++v)
        for (NodeId k = 0; k < d; ++k) stubs.push_back(v);

    for (std::size_t attempt = 0; attempt < kPairingAttempts; ++attempt) {
        for (std::size_t i = stubs.size() - 1; i > 0; --i) {
            const std::size_t j = rng.next_below(i + 1);
            std::swap(stubs[i], stubs[j]);
        }
        std::set<Edge> edges;
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            NodeId a = stubs[i];
            NodeId b = stubs[i + 1];
            if (a == b) {
                ok = false;
                break;
            }
            if (a > b) std::swap(a, b);
            if (!edges.insert({a, b}).second) {
                ok = false;
                break;
            }
        }
        if (ok) return make_graph(n, {edges.begin(), edges.end()});
    }
    throw InfeasibleError("d-regular pairing failed " + std::to_string(kPairingAttempts) +
                          " times for nodes=" + std::to_string(n) +
                          " degree=" + std::to_string(d));
}

AttributedGraph gen_cycle(NodeId n) {
    std::vector<Edge> edges;
    edges.reserve(n);
    for (NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return make_graph(n, std::move(edges));
}

AttributedGraph gen_disjoint_cycles(const std::vector<NodeId>& lengths) {
    std::vector<Edge> edges;
    NodeId base = 0;
    for (NodeId len : lengths) {
        for (NodeId v = 0; v + 1 < len; ++v) edges.emplace_back(base + v, base + v + 1);
        edges.emplace_back(base, base + len - 1);
        base += len;
    }
    return make_graph(base, std::move(edges));
}

void validate_spec(const RandomSampleSpec& spec) {
    if (spec.count < 1) throw ValidationError("count must be at least 1");
    switch (spec.family) {
        case RandomSampleSpec::Family::erdos_renyi:
            if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0))
                throw ValidationError("edge_probability must lie in [0, 1]");
            break;
        case RandomSampleSpec::Family::d_regular:
            if (spec.nodes == 0 || spec.degree >= spec.nodes)
                throw InfeasibleError("d-regular graphs need degree < nodes");
            if ((static_cast<std::uint64_t>(spec.nodes) * spec.degree) % 2 != 0)
                throw InfeasibleError("d-regular graphs need an even nodes*degree");
            break;
        case RandomSampleSpec::Family::cycle:
            if (spec.nodes < 3) throw InfeasibleError("cycles need at least 3 nodes");
            break;
        case RandomSampleSpec::Family::disjoint_cycles:
            if (spec.cycle_lengths.empty())
                throw ValidationError("disjoint_cycles needs at least one length");
            for (NodeId len : spec.cycle_lengths)
                if (len < 3) throw InfeasibleError("cycles need at least 3 nodes");
            break;
    }
}

} // namespace

std::string_view to_string(RandomSampleSpec::Family family) {
    switch (family) {
        case RandomSampleSpec::Family::erdos_renyi: return "erdos_renyi";
        case RandomSampleSpec::Family::d_regular: return "d_regular";
        case RandomSampleSpec::Family::cycle: return "cycle";
        case RandomSampleSpec::Family::disjoint_cycles: return "disjoint_cycles";
    }
    return "unknown";
}

std::optional<RandomSampleSpec::Family> family_from_string(std::string_view name) {
    if (name == "erdos_renyi") return RandomSampleSpec::Family::erdos_renyi;
    if (name == "d_regular") return RandomSampleSpec::Family::d_regular;
    if (name == "cycle") return RandomSampleSpec::Family::cycle;
    if (name == "disjoint_cycles") return RandomSampleSpec::Family::disjoint_cycles;
    return std::nullopt;
}

GraphSample generate_sample(const RandomSampleSpec& spec) {
    validate_spec(spec);
    std::vector<AttributedGraph> graphs;
    graphs.reserve(spec.count);
    for (std::size_t i = 0; i < spec.count; ++i) {
        SplitMix64 rng = SplitMix64::derive(spec.seed, i);
        switch (spec.family) {
            case RandomSampleSpec::Family::erdos_renyi:
                graphs.push_back(gen_erdos_renyi(spec.nodes, spec.edge_probability, rng));
                break;
            case RandomSampleSpec::Family::d_regular:
                graphs.push_back(gen_d_regular(spec.nodes, spec.degree, rng));
                break;
            case RandomSampleSpec::Family::cycle:
                graphs.push_back(gen_cycle(spec.nodes));
                break;
            case RandomSampleSpec::Family::disjoint_cycles:
                graphs.push_back(gen_disjoint_cycles(spec.cycle_lengths));
                break;
        }
    }
    return make_sample(std::move(graphs));
}

} // namespace wlb
