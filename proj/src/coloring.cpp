#include "wlbound/coloring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wlbound/errors.hpp"

namespace wlb {

namespace {

// Disjoint union of a sample in CSR form. Node v of graph g gets the
// global index graph_offset[g] + v.
struct UnionGraph {
    std::size_t total_nodes = 0;
    std::vector<std::size_t> graph_offset;  // size m + 1
    std::vector<std::size_t> row_offset;    // size total_nodes + 1
    std::vector<std::uint32_t> neighbors;
};

UnionGraph build_union(const GraphSample& sample) {
    UnionGraph u;
    u.graph_offset.reserve(sample.size() + 1);
    u.graph_offset.push_back(0);
    std::size_t total_edges = 0;
    for (const AttributedGraph& g : sample.graphs) {
        u.graph_offset.push_back(u.graph_offset.back() + g.node_count);
        total_edges += g.edge_count();
    }
    u.total_nodes = u.graph_offset.back();

    u.row_offset.assign(u.total_nodes + 1, 0);
    for (std::size_t g = 0; g < sample.size(); ++g) {
        const std::size_t base = u.graph_offset[g];
        for (const auto& [a, b] : sample.graphs[g].edges) {
            ++u.row_offset[base + a + 1];
            ++u.row_offset[base + b + 1];
        }
    }
    for (std::size_t v = 0; v < u.total_nodes; ++v) u.row_offset[v + 1] += u.row_offset[v];

    u.neighbors.resize(2 * total_edges);
    std::vector<std::size_t> cursor(u.row_offset.begin(), u.row_offset.end() - 1);
    for (std::size_t g = 0; g < sample.size(); ++g) {
        const std::size_t base = u.graph_offset[g];
        for (const auto& [a, b] : sample.graphs[g].edges) {
            u.neighbors[cursor[base + a]++] = static_cast<std::uint32_t>(base + b);
            u.neighbors[cursor[base + b]++] = static_cast<std::uint32_t>(base + a);
        }
    }
    return u;
}

// Round-0 colors: attribute vectors interned by exact byte equality, dense
// ids in bit-pattern order. Without attributes every node gets color 0.
std::pair<std::vector<ColorId>, std::size_t> attribute_colors(const GraphSample& sample,
                                                              const UnionGraph& u) {
    if (u.total_nodes == 0) return {{}, 0};
    if (!sample.graphs.front().has_attributes())
        return {std::vector<ColorId>(u.total_nodes, 0), 1};

    std::map<std::vector<std::uint64_t>, ColorId> table;
    std::vector<ColorId> colors(u.total_nodes);
    for (std::size_t g = 0; g < sample.size(); ++g) {
        const auto& attrs = *sample.graphs[g].attributes;
        for (NodeId v = 0; v < sample.graphs[g].node_count; ++v) {
            std::vector<std::uint64_t> key;
            key.reserve(attrs[v].size());
            for (double x : attrs[v]) key.push_back(std::bit_cast<std::uint64_t>(x));
            table.emplace(std::move(key), 0);
        }
    }
    ColorId next = 0;
    for (auto& [key, id] : table) id = next++;
    for (std::size_t g = 0; g < sample.size(); ++g) {
        const auto& attrs = *sample.graphs[g].attributes;
        const std::size_t base = u.graph_offset[g];
        for (NodeId v = 0; v < sample.graphs[g].node_count; ++v) {
            std::vector<std::uint64_t> key;
            key.reserve(attrs[v].size());
            for (double x : attrs[v]) key.push_back(std::bit_cast<std::uint64_t>(x));
            colors[base + v] = table.at(key);
        }
    }
    return {std::move(colors), table.size()};
}

// View into the shared signature buffer; hashing and equality are over the
// raw color words.
struct SigView {
    const ColorId* data;
    std::uint32_t size;
};

struct SigHash {
    std::size_t operator()(const SigView& s) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::uint32_t i = 0; i < s.size; ++i) {
            h ^= s.data[i];
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

struct SigEq {
    bool operator()(const SigView& a, const SigView& b) const noexcept {
        return a.size == b.size &&
               std::memcmp(a.data, b.data, a.size * sizeof(ColorId)) == 0;
    }
};

bool sig_less(const SigView& a, const SigView& b) {
    return std::lexicographical_compare(a.data, a.data + a.size, b.data, b.data + b.size);
}

// One refinement pass over the union. Builds every node's signature in a
// flat buffer (parallel), interns the distinct signatures, and assigns new
// dense ids in signature order. Returns the new color count.
std::size_t refinement_round(const UnionGraph& u, const std::vector<std::size_t>& sig_offset,
                             std::vector<ColorId>& colors, std::vector<ColorId>& next_colors,
                             std::vector<ColorId>& sig_buffer) {
    const std::size_t n = u.total_nodes;

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t vi = 0; vi < static_cast<std::ptrdiff_t>(n); ++vi) {
        const std::size_t v = static_cast<std::size_t>(vi);
        ColorId* sig = sig_buffer.data() + sig_offset[v];
        sig[0] = colors[v];
        ColorId* out = sig + 1;
        for (std::size_t e = u.row_offset[v]; e < u.row_offset[v + 1]; ++e)
            *out++ = colors[u.neighbors[e]];
        std::sort(sig + 1, out);
    }

    std::unordered_map<SigView, ColorId, SigHash, SigEq> table;
    table.reserve(n);
    std::vector<SigView> distinct;
    std::vector<ColorId> provisional(n);
    for (std::size_t v = 0; v < n; ++v) {
        const SigView sig{sig_buffer.data() + sig_offset[v],
                          static_cast<std::uint32_t>(sig_offset[v + 1] - sig_offset[v])};
        const auto [it, inserted] = table.emplace(sig, static_cast<ColorId>(distinct.size()));
        if (inserted) distinct.push_back(sig);
        provisional[v] = it->second;
    }

    std::vector<ColorId> order(distinct.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](ColorId a, ColorId b) { return sig_less(distinct[a], distinct[b]); });
    std::vector<ColorId> rank(distinct.size());
    for (ColorId k = 0; k < distinct.size(); ++k) rank[order[k]] = k;

    for (std::size_t v = 0; v < n; ++v) next_colors[v] = rank[provisional[v]];
    colors.swap(next_colors);
    return distinct.size();
}

WlRefinement assemble_refinement(const GraphSample& sample, const UnionGraph& u,
                                 const std::vector<ColorId>& colors, std::size_t iterations) {
    WlRefinement result;
    result.coloring.iteration_count = iterations;
    result.coloring.colors.reserve(sample.size());
    result.histograms.reserve(sample.size());
    for (std::size_t g = 0; g < sample.size(); ++g) {
        const std::size_t base = u.graph_offset[g];
        const std::size_t n = sample.graphs[g].node_count;
        std::vector<ColorId> own(colors.begin() + base, colors.begin() + base + n);
        std::vector<ColorId> sorted = own;
        std::sort(sorted.begin(), sorted.end());
        ColorHistogram hist;
        for (std::size_t i = 0; i < sorted.size();) {
            std::size_t j = i;
            while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
            hist.bins.emplace_back(sorted[i], static_cast<std::uint32_t>(j - i));
            i = j;
        }
        result.coloring.colors.push_back(std::move(own));
        result.histograms.push_back(std::move(hist));
    }
    return result;
}

std::vector<ColorId> per_node_attribute_colors(const GraphSample& sample, const UnionGraph& u) {
    return attribute_colors(sample, u).first;
}

} // namespace

std::uint64_t ColorHistogram::total() const noexcept {
    std::uint64_t sum = 0;
    for (const auto& [color, count] : bins) sum += count;
    return sum;
}

WlRefinement wl_refine(const GraphSample& sample) {
    validate_sample(sample);
    const UnionGraph u = build_union(sample);
    auto [colors, color_count] = attribute_colors(sample, u);

    std::size_t iterations = 0;
    if (u.total_nodes > 0) {
        std::vector<std::size_t> sig_offset(u.total_nodes + 1, 0);
        for (std::size_t v = 0; v < u.total_nodes; ++v)
            sig_offset[v + 1] = sig_offset[v] + 1 + (u.row_offset[v + 1] - u.row_offset[v]);
        std::vector<ColorId> sig_buffer(sig_offset.back());
        std::vector<ColorId> next_colors(u.total_nodes);

        for (;;) {
            ++iterations;
            if (iterations > u.total_nodes + 1)
                throw InvariantViolation("refinement failed to stabilize");
            const std::size_t next_count =
                refinement_round(u, sig_offset, colors, next_colors, sig_buffer);
            const bool stable = next_count == color_count;
            color_count = next_count;
            if (stable) break;
        }
    }
    return assemble_refinement(sample, u, colors, iterations);
}

WlRefinement wl_refine_serial(const GraphSample& sample) {
    validate_sample(sample);
    const UnionGraph u = build_union(sample);
    auto [colors, color_count] = attribute_colors(sample, u);

    std::size_t iterations = 0;
    if (u.total_nodes > 0) {
        for (;;) {
            ++iterations;
            if (iterations > u.total_nodes + 1)
                throw InvariantViolation("refinement failed to stabilize");

            std::vector<std::vector<ColorId>> sigs(u.total_nodes);
            std::map<std::vector<ColorId>, ColorId> table;
            for (std::size_t v = 0; v < u.total_nodes; ++v) {
                std::vector<ColorId> sig;
                sig.reserve(1 + u.row_offset[v + 1] - u.row_offset[v]);
                sig.push_back(colors[v]);
                for (std::size_t e = u.row_offset[v]; e < u.row_offset[v + 1]; ++e)
                    sig.push_back(colors[u.neighbors[e]]);
                std::sort(sig.begin() + 1, sig.end());
                table.emplace(sig, 0);
                sigs[v] = std::move(sig);
            }
            ColorId next = 0;
            for (auto& [sig, id] : table) id = next++;
            for (std::size_t v = 0; v < u.total_nodes; ++v) colors[v] = table.at(sigs[v]);

            const bool stable = table.size() == color_count;
            color_count = table.size();
            if (stable) break;
        }
    }
    return assemble_refinement(sample, u, colors, iterations);
}

std::vector<ColorHistogram> trivial_coloring(const GraphSample& sample) {
    validate_sample(sample);
    std::vector<ColorHistogram> hists;
    hists.reserve(sample.size());
    for (const AttributedGraph& g : sample.graphs) {
        ColorHistogram h;
        if (g.node_count > 0) h.bins.emplace_back(0, g.node_count);
        hists.push_back(std::move(h));
    }
    return hists;
}

std::vector<ColorHistogram> degree_coloring(const GraphSample& sample) {
    validate_sample(sample);
    const UnionGraph u = build_union(sample);
    const std::vector<ColorId> attr = per_node_attribute_colors(sample, u);

    // intern (attribute color, degree) pairs; dense ids in pair order
    std::map<std::pair<ColorId, std::size_t>, ColorId> table;
    for (std::size_t v = 0; v < u.total_nodes; ++v)
        table.emplace(std::pair{attr[v], u.row_offset[v + 1] - u.row_offset[v]}, 0);
    ColorId next = 0;
    for (auto& [key, id] : table) id = next++;

    std::vector<ColorHistogram> hists;
    hists.reserve(sample.size());
    for (std::size_t g = 0; g < sample.size(); ++g) {
        std::vector<ColorId> colors;
        colors.reserve(sample.graphs[g].node_count);
        for (std::size_t v = u.graph_offset[g]; v < u.graph_offset[g + 1]; ++v)
            colors.push_back(table.at({attr[v], u.row_offset[v + 1] - u.row_offset[v]}));
        std::sort(colors.begin(), colors.end());
        ColorHistogram h;
        for (std::size_t i = 0; i < colors.size();) {
            std::size_t j = i;
            while (j < colors.size() && colors[j] == colors[i]) ++j;
            h.bins.emplace_back(colors[i], static_cast<std::uint32_t>(j - i));
            i = j;
        }
        hists.push_back(std::move(h));
    }
    return hists;
}

namespace {

// Canonical form of a graph with at most kExactIsoNodeLimit nodes: the
// minimum, over all node orders, of (adjacency bitmask, attribute color
// sequence). Equal forms mean isomorphic attributed graphs.
struct CanonicalForm {
    NodeId n = 0;
    std::uint32_t adjacency = 0;
    std::vector<ColorId> attrs;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const AttributedGraph& g, const ColorId* attr_colors) {
    const NodeId n = g.node_count;
    std::array<std::uint8_t, kExactIsoNodeLimit> rows{};
    for (const auto& [a, b] : g.edges) {
        rows[a] |= static_cast<std::uint8_t>(1u << b);
        rows[b] |= static_cast<std::uint8_t>(1u << a);
    }

    CanonicalForm best;
    best.n = n;
    bool have_best = false;

    std::array<NodeId, kExactIsoNodeLimit> perm{};
    for (NodeId v = 0; v < n; ++v) perm[v] = v;

    std::array<ColorId, kExactIsoNodeLimit> attrs{};
    do {
        std::uint32_t adjacency = 0;
        int bit = 0;
        for (NodeId i = 0; i < n; ++i)
            for (NodeId j = i + 1; j < n; ++j) {
                adjacency |= static_cast<std::uint32_t>((rows[perm[i]] >> perm[j]) & 1u) << bit;
                ++bit;
            }
        if (have_best && adjacency > best.adjacency) continue;

        for (NodeId i = 0; i < n; ++i) attrs[i] = attr_colors[perm[i]];
        if (!have_best || adjacency < best.adjacency ||
            std::lexicographical_compare(attrs.begin(), attrs.begin() + n, best.attrs.begin(),
                                         best.attrs.end())) {
            best.adjacency = adjacency;
            best.attrs.assign(attrs.begin(), attrs.begin() + n);
            have_best = true;
        }
    } while (std::next_permutation(perm.begin(), perm.begin() + n));

    return best;
}

} // namespace

std::vector<ColorHistogram> exact_iso_coloring(const GraphSample& sample) {
    validate_sample(sample);
    for (std::size_t g = 0; g < sample.size(); ++g)
        if (sample.graphs[g].node_count > kExactIsoNodeLimit)
            throw InfeasibleError("canonical form infeasible: graph " + std::to_string(g) +
                                  " has " + std::to_string(sample.graphs[g].node_count) +
                                  " nodes, limit is " + std::to_string(kExactIsoNodeLimit));

    const UnionGraph u = build_union(sample);
    const std::vector<ColorId> attr = per_node_attribute_colors(sample, u);

    std::vector<CanonicalForm> forms;
    forms.reserve(sample.size());
    for (std::size_t g = 0; g < sample.size(); ++g)
        forms.push_back(canonical_form(sample.graphs[g], attr.data() + u.graph_offset[g]));

    std::map<CanonicalForm, ColorId> table;
    for (const CanonicalForm& f : forms) table.emplace(f, 0);
    ColorId next = 0;
    for (auto& [form, id] : table) id = next++;

    std::vector<ColorHistogram> hists;
    hists.reserve(sample.size());
    for (std::size_t g = 0; g < sample.size(); ++g) {
        ColorHistogram h;
        if (sample.graphs[g].node_count > 0)
            h.bins.emplace_back(table.at(forms[g]), sample.graphs[g].node_count);
        hists.push_back(std::move(h));
    }
    return hists;
}

std::string_view to_string(ColoringKind kind) {
    switch (kind) {
        case ColoringKind::trivial: return "trivial";
        case ColoringKind::order: return "order";
        case ColoringKind::degree: return "degree";
        case ColoringKind::wl: return "wl";
        case ColoringKind::exact_iso: return "exact_iso";
    }
    return "unknown";
}

std::optional<ColoringKind> coloring_from_string(std::string_view name) {
    if (name == "trivial") return ColoringKind::trivial;
    if (name == "order") return ColoringKind::order;
    if (name == "degree") return ColoringKind::degree;
    if (name == "wl") return ColoringKind::wl;
    if (name == "exact_iso") return ColoringKind::exact_iso;
    return std::nullopt;
}

std::vector<ColorHistogram> color_sample(const GraphSample& sample, ColoringKind kind) {
    switch (kind) {
        case ColoringKind::trivial:
        case ColoringKind::order: return trivial_coloring(sample);
        case ColoringKind::degree: return degree_coloring(sample);
        case ColoringKind::wl: return wl_refine(sample).histograms;
        case ColoringKind::exact_iso: return exact_iso_coloring(sample);
    }
    throw ValidationError("unknown coloring kind");
}

} // namespace wlb
