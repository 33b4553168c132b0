#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wlbound/graph.hpp"

namespace wlb {

/// Dense color index. Ids are assigned per refinement run by sorting the
/// distinct color signatures, so equal inputs always get equal ids and the
/// ids carry no meaning across runs.
using ColorId = std::uint32_t;

/// Multiset of node colors of one graph, stored as (color, count) bins with
/// positive counts, sorted by color. Comparisons are lexicographic on the
/// bins, which makes equal histograms compare equal regardless of how they
/// were produced within one run.
struct ColorHistogram {
    std::vector<std::pair<ColorId, std::uint32_t>> bins;

    std::uint64_t total() const noexcept;

    friend bool operator==(const ColorHistogram&, const ColorHistogram&) = default;
    friend auto operator<=>(const ColorHistogram&, const ColorHistogram&) = default;
};

/// Per-node colors for every graph of a sample, plus the number of
/// refinement rounds that were run (0 for samples without nodes).
struct NodeColoring {
    std::vector<std::vector<ColorId>> colors;  // aligned with sample graphs
    std::size_t iteration_count = 0;
};

struct WlRefinement {
    NodeColoring coloring;
    std::vector<ColorHistogram> histograms;  // one per graph
};

/// Color refinement run jointly on the disjoint union of the sample, so
/// colors are comparable across graphs. Round 0 interns attribute vectors
/// by exact byte equality (one shared color when attributes are absent).
/// Each later round replaces a node's color with an interned signature
/// (own color, sorted multiset of neighbor colors) and stops once the
/// union partition no longer changes. Terminates within total-node-count
/// rounds. The signature pass is parallelized.
WlRefinement wl_refine(const GraphSample& sample);

/// Same contract as wl_refine, implemented with plain ordered maps and no
/// parallelism. Kept as the reference the fast path is tested against.
WlRefinement wl_refine_serial(const GraphSample& sample);

/// One color for every node. Histograms distinguish graphs by order only.
std::vector<ColorHistogram> trivial_coloring(const GraphSample& sample);

/// Colors nodes by (attribute color, degree). Equivalent to stopping the
/// refinement after its first round.
std::vector<ColorHistogram> degree_coloring(const GraphSample& sample);

/// Largest node count exact_iso_coloring accepts per graph.
inline constexpr NodeId kExactIsoNodeLimit = 8;

/// Canonical-form coloring: two graphs share a color exactly when they are
/// isomorphic as attributed graphs. The canonical form minimizes over all
/// node orders, so every graph must have at most kExactIsoNodeLimit nodes;
/// otherwise InfeasibleError names the offending graph.
std::vector<ColorHistogram> exact_iso_coloring(const GraphSample& sample);

enum class ColoringKind { trivial, order, degree, wl, exact_iso };

std::string_view to_string(ColoringKind kind);
std::optional<ColoringKind> coloring_from_string(std::string_view name);

/// Dispatches to the coloring named by `kind`. `order` is an alias of
/// `trivial`: with one shared color the histogram already reduces to the
/// node count.
std::vector<ColorHistogram> color_sample(const GraphSample& sample, ColoringKind kind);

} // namespace wlb
