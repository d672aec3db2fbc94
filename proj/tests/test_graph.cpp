#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "centra/edge_list.hpp"
#include "centra/generate.hpp"
#include "centra/graph.hpp"
#include "oracles.hpp"

using namespace centra;

namespace {

std::vector<Edge> edge_vector(const Graph& g) {
    return {g.edges().begin(), g.edges().end()};
}

std::vector<NodeId> sorted_degrees(const Graph& g) {
    std::vector<NodeId> d;
    for (NodeId v = 0; v < g.node_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

TEST_CASE("edge list parsing") {
    SUBCASE("star without explicit n") {
        const Graph g = from_edge_list("0 1\n0 2\n0 3");
        CHECK(g.node_count() == 4);
        CHECK(g.edge_count() == 3);
        CHECK(classify(g).is_star);
    }
    SUBCASE("empty text with explicit n") {
        const Graph g = from_edge_list("", NodeId{5});
        CHECK(g.node_count() == 5);
        CHECK(g.edge_count() == 0);
    }
    SUBCASE("duplicates collapse, orientation ignored") {
        const Graph g = from_edge_list("0 1\n1 0\n0 1");
        CHECK(g.node_count() == 2);
        CHECK(g.edge_count() == 1);
    }
    SUBCASE("comments and blank lines") {
        const Graph g = from_edge_list("# header\n\n0 1\n  # indented comment\n1 2\n");
        CHECK(g.node_count() == 3);
        CHECK(g.edge_count() == 2);
    }
    SUBCASE("self-loop rejected with line number") {
        try {
            from_edge_list("0 1\n2 2\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("id above explicit n rejected") {
        CHECK_THROWS_AS(from_edge_list("0 7\n", NodeId{5}), ParseError);
    }
    SUBCASE("malformed tokens rejected") {
        CHECK_THROWS_AS(from_edge_list("0 x\n"), ParseError);
        CHECK_THROWS_AS(from_edge_list("0 -1\n"), ParseError);
        CHECK_THROWS_AS(from_edge_list("0 1 2\n"), ParseError);
        CHECK_THROWS_AS(from_edge_list("0\n"), ParseError);
    }
    SUBCASE("round-trip is identity up to edge order") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            const Graph g = oracle::random_graph(9, 14, rng);
            const Graph back = from_edge_list(to_edge_list(g), g.node_count());
            CHECK(back == g);
        }
    }
}

TEST_CASE("generators") {
    SUBCASE("star") {
        const Graph g = generate(Topology::Star, 5);
        CHECK(edge_vector(g) == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    }
    SUBCASE("complete-perturbed") {
        const Graph g = generate(Topology::CompletePerturbed, 4);
        CHECK(g.edge_count() == 5);
        CHECK_FALSE(g.has_edge(0, 1));
    }
    SUBCASE("ring-perturbed keeps m and the pendant degree profile") {
        const Graph g = generate(Topology::RingPerturbed, 6);
        CHECK(edge_vector(g) == std::vector<Edge>{{0, 1}, {1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}});
        CHECK(sorted_degrees(g) == std::vector<NodeId>{1, 2, 2, 2, 2, 3});
    }
    SUBCASE("star-perturbed rewires one spoke") {
        const Graph g = generate(Topology::StarPerturbed, 6);
        CHECK(g.edge_count() == 5);
        CHECK_FALSE(g.has_edge(0, 5));
        CHECK(g.has_edge(1, 5));
    }
    SUBCASE("classify agrees with the kind") {
        for (NodeId n : {3, 5, 8, 13}) {
            CHECK(classify(generate(Topology::Star, n)).is_star);
            CHECK(classify(generate(Topology::Complete, n)).is_complete);
            const auto ring_facts = classify(generate(Topology::Ring, n));
            CHECK(ring_facts.is_regular);
            CHECK(ring_facts.degree_sequence[0] == 2);
        }
    }
    SUBCASE("minimum n enforced") {
        CHECK_THROWS_AS(generate(Topology::Ring, 2), std::invalid_argument);
        CHECK_THROWS_AS(generate(Topology::RingPerturbed, 2), std::invalid_argument);
        CHECK(generate(Topology::Star, 1).node_count() == 1);
    }
}

TEST_CASE("saturate") {
    SUBCASE("path endpoint") {
        const Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
        const Graph result = saturate(path, 0);
        CHECK(edge_vector(result) == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    }
    SUBCASE("documented six-node case adds exactly the listed edges") {
        const Graph g(6, {{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 2}});
        const Graph result = saturate(g, 3);
        for (const Edge e : {Edge{1, 3}, Edge{2, 3}, Edge{3, 4}, Edge{3, 5}})
            CHECK(result.has_edge(e.u, e.v));
        CHECK(result.edge_count() == g.edge_count() + 4);
        CHECK(g.edge_count() == 5);  // input untouched
    }
    SUBCASE("empty graph becomes a star") {
        const Graph result = saturate(Graph(3, {}), 0);
        CHECK(classify(result).is_star);
    }
    SUBCASE("saturated node rejected") {
        const Graph star = generate(Topology::Star, 4);
        CHECK_THROWS_AS(saturate(star, 0), std::invalid_argument);
    }
    SUBCASE("adds exactly the missing edges and nothing else") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 30; ++trial) {
            const Graph g = oracle::random_graph(7, 9, rng);
            const NodeId v = static_cast<NodeId>(rng() % 7);
            if (g.degree(v) == g.node_count() - 1) continue;
            const Graph result = saturate(g, v);
            CHECK(result.degree(v) == g.node_count() - 1);
            CHECK(result.edge_count() == g.edge_count() + (g.node_count() - 1 - g.degree(v)));
            for (const auto& e : g.edges()) CHECK(result.has_edge(e.u, e.v));
            for (const auto& e : result.edges())
                if (!g.has_edge(e.u, e.v)) CHECK((e.u == v || e.v == v));
        }
    }
}

TEST_CASE("classify") {
    SUBCASE("star facts") {
        const auto facts = classify(generate(Topology::Star, 5));
        CHECK(facts.is_star);
        CHECK(facts.saturated_nodes == std::vector<NodeId>{0});
        CHECK(facts.component_count == 1);
    }
    SUBCASE("complete facts") {
        const auto facts = classify(generate(Topology::Complete, 4));
        CHECK(facts.is_complete);
        CHECK(facts.is_regular);
        CHECK(facts.saturated_nodes == std::vector<NodeId>{0, 1, 2, 3});
    }
    SUBCASE("single edge with isolates") {
        const auto facts = classify(Graph(5, {{0, 1}}));
        CHECK(facts.component_count == 4);
        CHECK_FALSE(facts.is_regular);
        CHECK(facts.saturated_nodes.empty());
    }
    SUBCASE("degree sum is 2m") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            const Graph g = oracle::random_graph(8, 11, rng);
            const auto facts = classify(g);
            NodeId sum = 0;
            for (NodeId d : facts.degree_sequence) sum += d;
            CHECK(sum == 2 * g.edge_count());
        }
    }
}

TEST_CASE("largest_component") {
    SUBCASE("tie breaks toward the smallest node id") {
        const Graph g(7, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
        const Graph lcc = largest_component(g);
        CHECK(lcc.node_count() == 3);
        CHECK(lcc.edge_count() == 3);
        CHECK(classify(lcc).is_complete);  // the triangle on original {0,1,2}
    }
    SUBCASE("connected graph maps to itself") {
        const Graph ring = generate(Topology::Ring, 6);
        CHECK(largest_component(ring) == ring);
    }
    SUBCASE("path component wins") {
        const Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
        const Graph lcc = largest_component(g);
        CHECK(lcc.node_count() == 3);
        CHECK(sorted_degrees(lcc) == std::vector<NodeId>{1, 1, 2});
    }
    SUBCASE("empty graph rejected") {
        CHECK_THROWS_AS(largest_component(Graph(0, {})), std::invalid_argument);
    }
}

TEST_CASE("permute") {
    SUBCASE("star recentered") {
        const Graph star = generate(Topology::Star, 4);
        const std::vector<NodeId> p{3, 1, 2, 0};
        const Graph h = permute(star, p);
        CHECK(h.degree(3) == 3);
        CHECK(classify(h).is_star);
    }
    SUBCASE("identity") {
        const Graph g = generate(Topology::RingPerturbed, 7);
        std::vector<NodeId> identity(7);
        for (NodeId i = 0; i < 7; ++i) identity[static_cast<std::size_t>(i)] = i;
        CHECK(permute(g, identity) == g);
    }
    SUBCASE("ring rotation fixes the edge set") {
        const Graph ring = generate(Topology::Ring, 5);
        const std::vector<NodeId> rotation{1, 2, 3, 4, 0};
        CHECK(permute(ring, rotation) == ring);
    }
    SUBCASE("non-bijection rejected") {
        const Graph g = generate(Topology::Star, 3);
        CHECK_THROWS_AS(permute(g, std::vector<NodeId>{0, 0, 2}), std::invalid_argument);
        CHECK_THROWS_AS(permute(g, std::vector<NodeId>{0, 1}), std::invalid_argument);
    }
    SUBCASE("degree multiset and component count preserved") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 30; ++trial) {
            const Graph g = oracle::random_graph(8, 9, rng);
            const auto p = oracle::random_permutation(8, rng);
            const Graph h = permute(g, p);
            CHECK(sorted_degrees(h) == sorted_degrees(g));
            CHECK(classify(h).component_count == classify(g).component_count);
        }
    }
}

TEST_CASE("enumerate_graphs") {
    SUBCASE("counts") {
        std::size_t all3 = 0, connected3 = 0, all4 = 0;
        enumerate_graphs(3, false, [&](const Graph&) { ++all3; });
        enumerate_graphs(3, true, [&](const Graph&) { ++connected3; });
        enumerate_graphs(4, false, [&](const Graph&) { ++all4; });
        CHECK(all3 == 8);
        CHECK(connected3 == 4);  // three labeled paths plus the triangle
        CHECK(all4 == 64);
    }
    SUBCASE("graphs are distinct and the scope guard holds") {
        std::set<std::vector<Edge>> seen;
        enumerate_graphs(4, false, [&](const Graph& g) { seen.insert(edge_vector(g)); });
        CHECK(seen.size() == 64);
        CHECK_THROWS_AS(enumerate_graphs(8, false, [](const Graph&) {}), std::invalid_argument);
    }
}
