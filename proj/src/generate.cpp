#include "centra/generate.hpp"

#include <array>
#include <string>

namespace centra {

std::string_view topology_name(Topology t) {
    switch (t) {
        case Topology::Star: return "star";
        case Topology::Ring: return "ring";
        case Topology::Complete: return "complete";
        case Topology::StarPerturbed: return "star-perturbed";
        case Topology::RingPerturbed: return "ring-perturbed";
        case Topology::CompletePerturbed: return "complete-perturbed";
    }
    throw std::invalid_argument("unknown topology");
}

Topology parse_topology(std::string_view name) {
    for (Topology t : kAllTopologies)
        if (topology_name(t) == name) return t;
    throw std::invalid_argument("unknown topology '" + std::string(name) + "'");
}

namespace {

std::vector<Edge> star_edges(NodeId n) {
    std::vector<Edge> edges;
    for (NodeId v = 1; v < n; ++v) edges.push_back({0, v});
    return edges;
}

std::vector<Edge> ring_edges(NodeId n) {
    std::vector<Edge> edges;
    for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    edges.push_back({0, n - 1});
    return edges;
}

std::vector<Edge> complete_edges(NodeId n) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
    return edges;
}

}  // namespace

Graph generate(Topology t, NodeId n, std::uint64_t /*seed*/) {
    const NodeId min_n = (t == Topology::Star || t == Topology::Complete) ? 1 : 3;
    if (n < min_n)
        throw std::invalid_argument(std::string(topology_name(t)) + " requires n >= " +
                                    std::to_string(min_n));
    switch (t) {
        case Topology::Star:
            return Graph(n, star_edges(n));
        case Topology::Ring:
            return Graph(n, ring_edges(n));
        case Topology::Complete:
            return Graph(n, complete_edges(n));
        case Topology::StarPerturbed: {
            auto edges = star_edges(n);
            edges.back() = {1, n - 1};  // reattach the last spoke to leaf 1
            return Graph(n, std::move(edges));
        }
        case Topology::RingPerturbed: {
            auto edges = ring_edges(n);
            edges.back() = {1, n - 1};  // closing edge moves off node 0
            return Graph(n, std::move(edges));
        }
        case Topology::CompletePerturbed: {
            auto edges = complete_edges(n);
            edges.erase(edges.begin());  // drop {0, 1}
            return Graph(n, std::move(edges));
        }
    }
    throw std::invalid_argument("unknown topology");
}

void enumerate_graphs(NodeId n, bool connected_only, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("enumeration supports 1 <= n <= 7, got " + std::to_string(n));

    std::array<Edge, 21> pairs{};
    std::size_t pair_count = 0;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) pairs[pair_count++] = {u, v};

    std::vector<Edge> edges;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count); ++mask) {
        edges.clear();
        for (std::size_t k = 0; k < pair_count; ++k)
            if (mask & (std::uint64_t{1} << k)) edges.push_back(pairs[k]);
        Graph g(n, edges);
        if (connected_only && !is_connected(g)) continue;
        fn(g);
    }
}

}  // namespace centra
