#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"
#include "wlbound/errors.hpp"
#include "wlbound/graph.hpp"
#include "wlbound/rng.hpp"

using namespace wlb;

TEST_CASE("make_graph normalizes edge order") {
    const AttributedGraph g = make_graph(4, {{3, 1}, {0, 2}, {1, 0}});
    const std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 3}};
    CHECK(g.edges == expected);
}

TEST_CASE("make_graph rejects bad edges") {
    CHECK_THROWS_AS(make_graph(3, {{1, 1}}), ValidationError);
    CHECK_THROWS_AS(make_graph(3, {{0, 3}}), ValidationError);
    CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), ValidationError);  // same edge twice
    CHECK_THROWS_AS(make_graph(0, {{0, 0}}), ValidationError);
}

TEST_CASE("make_graph rejects bad attributes") {
    CHECK_THROWS_AS(make_graph(2, {}, std::vector<AttributeVector>{{1.0}}), ValidationError);
    CHECK_THROWS_AS(make_graph(2, {}, std::vector<AttributeVector>{{1.0}, {1.0, 2.0}}),
                    ValidationError);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(make_graph(1, {}, std::vector<AttributeVector>{{inf}}), ValidationError);
    CHECK_NOTHROW(make_graph(2, {{0, 1}}, std::vector<AttributeVector>{{1.0}, {2.0}}));
}

TEST_CASE("degree sum equals twice the edge count") {
    SplitMix64 rng(42);
    for (int round = 0; round < 50; ++round) {
        const AttributedGraph g = wlbtest::random_graph(rng, 12);
        const std::vector<NodeId> deg = g.degrees();
        std::size_t sum = 0;
        for (NodeId d : deg) sum += d;
        CHECK(sum == 2 * g.edge_count());
    }
}

TEST_CASE("permute_nodes by the identity is a no-op") {
    const AttributedGraph g = wlbtest::cycle_graph(5);
    std::vector<NodeId> identity{0, 1, 2, 3, 4};
    CHECK(permute_nodes(g, identity) == g);
}

TEST_CASE("permute_nodes keeps the degree multiset") {
    SplitMix64 rng(7);
    for (int round = 0; round < 50; ++round) {
        const AttributedGraph g = wlbtest::random_graph(rng, 10);
        const auto perm = wlbtest::random_permutation(rng, g.node_count);
        const AttributedGraph h = permute_nodes(g, perm);
        REQUIRE(h.node_count == g.node_count);
        CHECK(h.edge_count() == g.edge_count());
        std::vector<NodeId> dg = g.degrees(), dh = h.degrees();
        std::sort(dg.begin(), dg.end());
        std::sort(dh.begin(), dh.end());
        CHECK(dg == dh);
    }
}

TEST_CASE("permute_nodes moves attributes with their nodes") {
    const AttributedGraph g =
        make_graph(3, {{0, 1}}, std::vector<AttributeVector>{{1.0}, {2.0}, {3.0}});
    const AttributedGraph h = permute_nodes(g, {2, 0, 1});
    REQUIRE(h.attributes.has_value());
    CHECK((*h.attributes)[2] == AttributeVector{1.0});
    CHECK((*h.attributes)[0] == AttributeVector{2.0});
    CHECK((*h.attributes)[1] == AttributeVector{3.0});
    const std::vector<Edge> expected{{0, 2}};
    CHECK(h.edges == expected);
}

TEST_CASE("permute_nodes rejects non-bijections") {
    const AttributedGraph g = wlbtest::path_graph(3);
    CHECK_THROWS_AS(permute_nodes(g, {0, 0, 1}), ValidationError);
    CHECK_THROWS_AS(permute_nodes(g, {0, 1}), ValidationError);
    CHECK_THROWS_AS(permute_nodes(g, {0, 1, 3}), ValidationError);
}

TEST_CASE("make_sample validates labels") {
    std::vector<AttributedGraph> graphs{wlbtest::path_graph(2), wlbtest::path_graph(3)};
    CHECK_THROWS_AS(make_sample({}), ValidationError);
    CHECK_THROWS_AS(make_sample(graphs, std::vector<int>{1}), ValidationError);
    CHECK_THROWS_AS(make_sample(graphs, std::vector<int>{1, 0}), ValidationError);
    const GraphSample s = make_sample(graphs, std::vector<int>{1, -1});
    CHECK(s.has_labels());
    CHECK(s.size() == 2);
}

TEST_CASE("make_sample requires consistent attributes") {
    const AttributedGraph plain = wlbtest::path_graph(2);
    const AttributedGraph tagged =
        make_graph(2, {{0, 1}}, std::vector<AttributeVector>{{1.0}, {2.0}});
    const AttributedGraph tagged_2d =
        make_graph(1, {}, std::vector<AttributeVector>{{1.0, 2.0}});
    CHECK_THROWS_AS(make_sample({plain, tagged}), ValidationError);
    CHECK_THROWS_AS(make_sample({tagged, tagged_2d}), ValidationError);
    CHECK_NOTHROW(make_sample({tagged, tagged}));
}

TEST_CASE("concatenate_samples keeps labels only when both sides have them") {
    const GraphSample a = make_sample({wlbtest::path_graph(2)}, std::vector<int>{1});
    const GraphSample b = make_sample({wlbtest::path_graph(3)}, std::vector<int>{-1});
    const GraphSample c = make_sample({wlbtest::cycle_graph(3)});

    const GraphSample ab = concatenate_samples(a, b);
    REQUIRE(ab.has_labels());
    CHECK(*ab.labels == std::vector<int>{1, -1});
    CHECK(ab.size() == 2);

    const GraphSample ac = concatenate_samples(a, c);
    CHECK_FALSE(ac.has_labels());
}
