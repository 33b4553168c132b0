#pragma once

#include <cstddef>
#include <vector>

#include "wlbound/coloring.hpp"

namespace wlb {

/// Grouping of sample indices by equal color histogram. Classes are ordered
/// by their (lexicographically sorted) keys, member lists ascend, and the
/// multiplicities sum to m.
struct SamplePartition {
    std::size_t m = 0;
    std::size_t p = 0;
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> multiplicities;
    std::vector<ColorHistogram> class_keys;  // aligned with classes
};

/// Groups indices 0..m-1 of `histograms` by histogram equality.
SamplePartition partition_sample(const std::vector<ColorHistogram>& histograms);

/// Partition with the given class sizes and pairwise-distinct synthetic
/// keys; class j holds multiplicities[j] consecutive indices. Useful when
/// only the shape matters.
SamplePartition partition_from_multiplicities(const std::vector<std::size_t>& multiplicities);

/// True when every class of `a` lies inside one class of `b`. Throws
/// SizeMismatchError when the partitions cover samples of different sizes.
bool is_finer(const SamplePartition& a, const SamplePartition& b);

/// Per-key multiplicity comparison of two partitions of equally sized
/// samples. Keys missing from one side count as multiplicity 0 there.
struct MultiplicityDiff {
    struct Entry {
        ColorHistogram key;
        std::size_t mu_a = 0;
        std::size_t mu_b = 0;
        std::size_t epsilon = 0;  // |mu_a - mu_b|
    };

    std::vector<Entry> entries;  // ordered by key

    std::size_t total_epsilon() const noexcept;
};

MultiplicityDiff multiplicity_diff(const SamplePartition& a, const SamplePartition& b);

} // namespace wlb
