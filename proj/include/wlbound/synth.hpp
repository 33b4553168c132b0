#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wlbound/graph.hpp"

namespace wlb {

/// Description of a synthetic sample. Which fields matter depends on the
/// family:
///   erdos_renyi     nodes, edge_probability
///   d_regular       nodes, degree (nodes * degree must be even, degree < nodes)
///   cycle           nodes (>= 3)
///   disjoint_cycles cycle_lengths (each >= 3)
struct RandomSampleSpec {
    enum class Family { erdos_renyi, d_regular, cycle, disjoint_cycles };

    Family family = Family::erdos_renyi;
    NodeId nodes = 0;
    double edge_probability = 0.0;
    NodeId degree = 0;
    std::vector<NodeId> cycle_lengths;
    std::size_t count = 1;
    std::uint64_t seed = 0;
};

std::string_view to_string(RandomSampleSpec::Family family);
std::optional<RandomSampleSpec::Family> family_from_string(std::string_view name);

/// Draws `count` graphs deterministically from the seed. Graph i is driven
/// by stream i of the seed, so a sample prefix never changes when count
/// grows. Throws InfeasibleError for unrealizable specs (odd d-regular
/// parity, degree >= nodes, cycles shorter than 3, a d-regular pairing that
/// keeps colliding) and ValidationError for out-of-range inputs.
GraphSample generate_sample(const RandomSampleSpec& spec);

} // namespace wlb
