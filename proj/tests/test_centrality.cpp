#include <doctest.h>

#include <cmath>
#include <random>

#include "centra/centrality.hpp"
#include "centra/generate.hpp"
#include "oracles.hpp"

using namespace centra;

namespace {

const Graph kPath4(4, {{0, 1}, {1, 2}, {2, 3}});

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    REQUIRE(a.size() == b.size());
    double out = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) out = std::max(out, std::fabs(a[i] - b[i]));
    return out;
}

}  // namespace

TEST_CASE("degree_sequence") {
    CHECK(degree_sequence(generate(Topology::Star, 5)) == std::vector<NodeId>{4, 1, 1, 1, 1});
    CHECK(degree_sequence(generate(Topology::Complete, 4)) == std::vector<NodeId>{3, 3, 3, 3});
    CHECK(degree_sequence(kPath4) == std::vector<NodeId>{1, 2, 2, 1});
}

TEST_CASE("betweenness_normalized") {
    SUBCASE("star hub scores exactly 1") {
        const auto values = betweenness_normalized(generate(Topology::Star, 5));
        CHECK(values[0] == 1.0);
        for (std::size_t i = 1; i < values.size(); ++i) CHECK(values[i] == 0.0);
    }
    SUBCASE("ring is vertex-transitive") {
        for (NodeId n : {5, 6, 9}) {
            const auto values = betweenness_normalized(generate(Topology::Ring, n));
            for (double v : values) CHECK(v == values[0]);
        }
    }
    SUBCASE("path P4 interior nodes carry 2/3") {
        const auto values = betweenness_normalized(kPath4);
        CHECK(values[0] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(values[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        CHECK(values[2] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        CHECK(values[3] == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("n < 3 rejected") {
        CHECK_THROWS_AS(betweenness_normalized(Graph(2, {{0, 1}})), std::invalid_argument);
    }
    SUBCASE("matches the path-enumeration oracle on small connected graphs") {
        for (NodeId n : {4, 5}) {
            enumerate_graphs(n, true, [&](const Graph& g) {
                CHECK(max_abs_diff(betweenness_normalized(g), oracle::betweenness(g)) < 1e-9);
            });
        }
    }
    SUBCASE("disconnected graphs accumulate within components") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 25; ++trial) {
            const Graph g = oracle::random_graph(7, 5, rng);
            CHECK(max_abs_diff(betweenness_normalized(g), oracle::betweenness(g)) < 1e-9);
        }
    }
}

TEST_CASE("closeness_normalized") {
    SUBCASE("star") {
        const auto values = closeness_normalized(generate(Topology::Star, 5));
        CHECK(values[0] == 1.0);
        for (std::size_t i = 1; i < values.size(); ++i)
            CHECK(values[i] == doctest::Approx(4.0 / 7.0).epsilon(1e-12));
    }
    SUBCASE("path P4") {
        const auto values = closeness_normalized(kPath4);
        CHECK(values[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(values[1] == doctest::Approx(0.75).epsilon(1e-12));
        CHECK(values[2] == doctest::Approx(0.75).epsilon(1e-12));
        CHECK(values[3] == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("empty graph nodes are isolated") {
        const auto values = closeness_normalized(Graph(4, {}));
        for (double v : values) CHECK(v == 0.0);
    }
    SUBCASE("connected graphs agree with (n-1)/sum-of-distances exactly") {
        enumerate_graphs(5, true, [&](const Graph& g) {
            const auto dist = oracle::all_pairs_distances(g);
            const auto values = closeness_normalized(g);
            for (NodeId i = 0; i < 5; ++i) {
                std::int64_t total = 0;
                for (NodeId j = 0; j < 5; ++j)
                    if (j != i) total += dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                CHECK(values[static_cast<std::size_t>(i)] == 4.0 / static_cast<double>(total));
            }
        });
    }
    SUBCASE("matches the Floyd-Warshall oracle on disconnected graphs") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 25; ++trial) {
            const Graph g = oracle::random_graph(7, 5, rng);
            CHECK(max_abs_diff(closeness_normalized(g), oracle::closeness(g)) < 1e-12);
        }
    }
}

TEST_CASE("eigenvector_l2") {
    SUBCASE("triangle is uniform") {
        const auto values = eigenvector_l2(generate(Topology::Complete, 3));
        for (double v : values) CHECK(v == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    }
    SUBCASE("three-node star") {
        const Graph s3(3, {{0, 1}, {1, 2}});  // hub at node 1
        const auto values = eigenvector_l2(s3);
        CHECK(values[0] == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(values[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
        CHECK(values[2] == doctest::Approx(0.5).epsilon(1e-10));
    }
    SUBCASE("empty graph convention") {
        const auto values = eigenvector_l2(Graph(3, {}));
        for (double v : values) CHECK(v == 0.0);
    }
    SUBCASE("residual bound against the spectrum top eigenvalue") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 15; ++trial) {
            const NodeId n = 5 + static_cast<NodeId>(rng() % 80);
            Graph g = oracle::random_graph(n, 3 * n, rng);
            if (!is_connected(g)) continue;
            const auto v = eigenvector_l2(g);
            const double lambda = adjacency_spectrum(g).eigenvalues[0];
            double norm = 0.0, residual = 0.0;
            for (NodeId i = 0; i < n; ++i) {
                double av = 0.0;
                for (NodeId w : g.neighbors(i)) av += v[static_cast<std::size_t>(w)];
                const double r = av - lambda * v[static_cast<std::size_t>(i)];
                residual += r * r;
                norm += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
            }
            CHECK(std::sqrt(residual) <= 1e-8);
            CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
    SUBCASE("nonnegative entries") {
        std::mt19937_64 rng(37);
        for (int trial = 0; trial < 20; ++trial) {
            const Graph g = oracle::random_graph(9, 8, rng);
            for (double x : eigenvector_l2(g)) CHECK(x >= 0.0);
        }
    }
    SUBCASE("agrees with the Jacobi-projection oracle") {
        enumerate_graphs(5, true, [&](const Graph& g) {
            CHECK(max_abs_diff(eigenvector_l2(g), oracle::eigenvector(g)) < 1e-8);
        });
    }
}

TEST_CASE("adjacency_spectrum") {
    SUBCASE("complete graph") {
        const auto s = adjacency_spectrum(generate(Topology::Complete, 4)).eigenvalues;
        CHECK(s[0] == doctest::Approx(3.0).epsilon(1e-12));
        for (std::size_t i = 1; i < 4; ++i) CHECK(s[i] == doctest::Approx(-1.0).epsilon(1e-12));
    }
    SUBCASE("star spectrum is +-sqrt(n-1) and zeros") {
        const auto s = adjacency_spectrum(generate(Topology::Star, 5)).eigenvalues;
        CHECK(s[0] == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(s[4] == doctest::Approx(-2.0).epsilon(1e-12));
        for (std::size_t i = 1; i < 4; ++i) CHECK(s[i] == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("4-ring eigenvalues 2cos(2 pi k / n)") {
        const auto s = adjacency_spectrum(generate(Topology::Ring, 4)).eigenvalues;
        CHECK(s[0] == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(s[1] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(s[2] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(s[3] == doctest::Approx(-2.0).epsilon(1e-12));
    }
    SUBCASE("trace identities on random graphs") {
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 25; ++trial) {
            const NodeId n = 10 + static_cast<NodeId>(rng() % 190);
            const Graph g = oracle::random_graph(n, 4 * n, rng);
            const auto s = adjacency_spectrum(g).eigenvalues;
            double sum = 0.0, sum_sq = 0.0;
            for (double x : s) {
                sum += x;
                sum_sq += x * x;
            }
            CHECK(std::fabs(sum) < 1e-6);
            CHECK(std::fabs(sum_sq - 2.0 * static_cast<double>(g.edge_count())) < 1e-6);
        }
    }
    SUBCASE("agrees with the Jacobi oracle") {
        enumerate_graphs(5, false, [&](const Graph& g) {
            CHECK(max_abs_diff(adjacency_spectrum(g).eigenvalues, oracle::spectrum(g)) < 1e-9);
        });
    }
}

TEST_CASE("degree_assortativity") {
    SUBCASE("stars are exactly -1") {
        for (NodeId n : {3, 4, 10, 60}) CHECK(degree_assortativity(generate(Topology::Star, n)) == -1.0);
    }
    SUBCASE("regular graphs take the +1 convention") {
        CHECK(degree_assortativity(generate(Topology::Ring, 8)) == 1.0);
        CHECK(degree_assortativity(generate(Topology::Complete, 5)) == 1.0);
    }
    SUBCASE("path P4 endpoint-degree Pearson is -1/2") {
        CHECK(degree_assortativity(kPath4) == doctest::Approx(-0.5).epsilon(1e-12));
    }
    SUBCASE("m = 0 rejected") {
        CHECK_THROWS_AS(degree_assortativity(Graph(3, {})), std::invalid_argument);
    }
    SUBCASE("matches the double-arithmetic oracle") {
        std::mt19937_64 rng(43);
        for (int trial = 0; trial < 40; ++trial) {
            const Graph g = oracle::random_graph(8, 2 + static_cast<std::int64_t>(rng() % 16), rng);
            if (g.edge_count() == 0) continue;
            CHECK(degree_assortativity(g) == doctest::Approx(oracle::assortativity(g)).epsilon(1e-9));
        }
    }
}

TEST_CASE("centrality vectors are permutation-equivariant") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 15; ++trial) {
        const Graph g = oracle::random_graph(7, 8, rng);
        const auto p = oracle::random_permutation(7, rng);
        const Graph h = permute(g, p);
        const auto bc_g = betweenness_normalized(g);
        const auto bc_h = betweenness_normalized(h);
        const auto cc_g = closeness_normalized(g);
        const auto cc_h = closeness_normalized(h);
        const auto ev_g = eigenvector_l2(g);
        const auto ev_h = eigenvector_l2(h);
        for (NodeId v = 0; v < 7; ++v) {
            const auto mapped = static_cast<std::size_t>(p[static_cast<std::size_t>(v)]);
            CHECK(bc_h[mapped] == doctest::Approx(bc_g[static_cast<std::size_t>(v)]).epsilon(1e-9));
            CHECK(cc_h[mapped] == doctest::Approx(cc_g[static_cast<std::size_t>(v)]).epsilon(1e-9));
            CHECK(ev_h[mapped] == doctest::Approx(ev_g[static_cast<std::size_t>(v)]).epsilon(1e-8));
        }
    }
}
