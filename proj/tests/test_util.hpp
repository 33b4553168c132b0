#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <numeric>
#include <string>
#include <vector>

#include "wlbound/graph.hpp"
#include "wlbound/rng.hpp"

namespace wlbtest {

inline wlb::AttributedGraph path_graph(wlb::NodeId n) {
    std::vector<wlb::Edge> edges;
    for (wlb::NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return wlb::make_graph(n, std::move(edges));
}

inline wlb::AttributedGraph cycle_graph(wlb::NodeId n) {
    std::vector<wlb::Edge> edges;
    for (wlb::NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return wlb::make_graph(n, std::move(edges));
}

inline wlb::AttributedGraph star_graph(wlb::NodeId leaves) {
    std::vector<wlb::Edge> edges;
    for (wlb::NodeId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return wlb::make_graph(leaves + 1, std::move(edges));
}

inline wlb::AttributedGraph disjoint_cycles_graph(const std::vector<wlb::NodeId>& lengths) {
    std::vector<wlb::Edge> edges;
    wlb::NodeId base = 0;
    for (wlb::NodeId len : lengths) {
        for (wlb::NodeId v = 0; v + 1 < len; ++v) edges.emplace_back(base + v, base + v + 1);
        edges.emplace_back(base, base + len - 1);
        base += len;
    }
    return wlb::make_graph(base, std::move(edges));
}

inline std::vector<wlb::NodeId> random_permutation(wlb::SplitMix64& rng, wlb::NodeId n) {
    std::vector<wlb::NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (wlb::NodeId i = n; i > 1; --i) {
        const auto j = static_cast<wlb::NodeId>(rng.next_below(i));
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

inline wlb::AttributedGraph random_graph(wlb::SplitMix64& rng, wlb::NodeId max_nodes) {
    const auto n = static_cast<wlb::NodeId>(rng.next_below(max_nodes + 1));
    const double p = 0.15 + 0.7 * rng.next_double();
    std::vector<wlb::Edge> edges;
    for (wlb::NodeId u = 0; u < n; ++u)
        for (wlb::NodeId v = u + 1; v < n; ++v)
            if (rng.next_double() < p) edges.emplace_back(u, v);
    return wlb::make_graph(n, std::move(edges));
}

/// Random attribute-free sample. Some graphs are fresh draws, some are
/// permuted copies of earlier graphs so nontrivial classes show up.
inline wlb::GraphSample random_sample(wlb::SplitMix64& rng, std::size_t max_graphs,
                                      wlb::NodeId max_nodes) {
    const std::size_t m = 1 + rng.next_below(max_graphs);
    std::vector<wlb::AttributedGraph> graphs;
    graphs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!graphs.empty() && rng.next_double() < 0.3) {
            const wlb::AttributedGraph& base = graphs[rng.next_below(graphs.size())];
            auto perm = random_permutation(rng, base.node_count);
            graphs.push_back(wlb::permute_nodes(base, perm));
        } else {
            graphs.push_back(random_graph(rng, max_nodes));
        }
    }
    return wlb::make_sample(std::move(graphs));
}

/// Random positive multiplicities summing to m.
inline std::vector<std::size_t> random_multiplicities(wlb::SplitMix64& rng, std::size_t m) {
    std::vector<std::size_t> mults;
    std::size_t left = m;
    while (left > 0) {
        const std::size_t take = 1 + rng.next_below(left);
        mults.push_back(take);
        left -= take;
    }
    return mults;
}

/// E|sum of n random signs| by full enumeration. Test oracle, n <= 20.
inline double enumerated_abs_sign_sum(unsigned n) {
    if (n == 0) return 0.0;
    std::uint64_t total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const int plus = __builtin_popcountll(mask);
        total += static_cast<std::uint64_t>(std::llabs(2 * plus - static_cast<long long>(n)));
    }
    return static_cast<double>(total) / static_cast<double>(std::uint64_t{1} << n);
}

/// Unique scratch directory, removed on destruction.
class TempDir {
public:
    TempDir() {
        auto base = std::filesystem::temp_directory_path();
        // the address salt keeps concurrently running test binaries apart
        const auto salt = reinterpret_cast<std::uintptr_t>(&counter_) % 100000;
        for (int i = 0; i < 10000; ++i) {
            auto candidate = base / ("wlbound_test_" + std::to_string(salt) + "_" +
                                     std::to_string(counter_++));
            std::error_code ec;
            if (std::filesystem::create_directory(candidate, ec)) {
                path_ = candidate;
                return;
            }
        }
        std::abort();
    }

    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }

    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

} // namespace wlbtest
