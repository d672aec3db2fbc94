#include "centra/graph.hpp"

#include <algorithm>
#include <numeric>

namespace centra {

Graph::Graph(NodeId n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("node count must be nonnegative");
    for (auto& e : edges) {
        if (e.u == e.v)
            throw std::invalid_argument("self-loop at node " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) +
                                        " " + std::to_string(e.v));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    // CSR adjacency with sorted neighbor lists.
    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& e : edges_) {
        ++offsets_[static_cast<std::size_t>(e.u) + 1];
        ++offsets_[static_cast<std::size_t>(e.v) + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    adjacency_.resize(edges_.size() * 2);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
        adjacency_[cursor[static_cast<std::size_t>(e.u)]++] = e.v;
        adjacency_[cursor[static_cast<std::size_t>(e.v)]++] = e.u;
    }
    for (NodeId v = 0; v < n_; ++v) {
        auto begin = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[static_cast<std::size_t>(v)]);
        auto end = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[static_cast<std::size_t>(v) + 1]);
        std::sort(begin, end);
    }
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("node index out of range");
    const auto b = offsets_[static_cast<std::size_t>(v)];
    const auto e = offsets_[static_cast<std::size_t>(v) + 1];
    return {adjacency_.data() + b, e - b};
}

NodeId Graph::degree(NodeId v) const {
    return static_cast<NodeId>(neighbors(v).size());
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u == v) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

ComponentMap connected_components(const Graph& g) {
    const NodeId n = g.node_count();
    ComponentMap map;
    map.component_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<NodeId> stack;
    for (NodeId start = 0; start < n; ++start) {
        if (map.component_of[static_cast<std::size_t>(start)] != -1) continue;
        const NodeId id = map.count++;
        stack.push_back(start);
        map.component_of[static_cast<std::size_t>(start)] = id;
        while (!stack.empty()) {
            const NodeId v = stack.back();
            stack.pop_back();
            for (NodeId w : g.neighbors(v)) {
                if (map.component_of[static_cast<std::size_t>(w)] == -1) {
                    map.component_of[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return map;
}

bool is_connected(const Graph& g) {
    return connected_components(g).count <= 1;
}

StructuralFacts classify(const Graph& g) {
    const NodeId n = g.node_count();
    StructuralFacts facts;
    facts.degree_sequence.reserve(static_cast<std::size_t>(n));
    for (NodeId v = 0; v < n; ++v) facts.degree_sequence.push_back(g.degree(v));

    for (NodeId v = 0; v < n; ++v)
        if (facts.degree_sequence[static_cast<std::size_t>(v)] == n - 1)
            facts.saturated_nodes.push_back(v);

    facts.is_complete = n >= 1 && static_cast<NodeId>(facts.saturated_nodes.size()) == n;
    facts.is_regular =
        n == 0 || std::all_of(facts.degree_sequence.begin(), facts.degree_sequence.end(),
                              [&](NodeId d) { return d == facts.degree_sequence[0]; });

    if (n >= 3 && g.edge_count() == n - 1 && facts.saturated_nodes.size() == 1) {
        facts.is_star = std::all_of(facts.degree_sequence.begin(), facts.degree_sequence.end(),
                                    [&](NodeId d) { return d == 1 || d == n - 1; });
    }

    facts.component_count = connected_components(g).count;
    return facts;
}

Graph saturate(const Graph& g, NodeId v) {
    const NodeId n = g.node_count();
    if (v < 0 || v >= n) throw std::invalid_argument("node index out of range");
    if (g.degree(v) == n - 1)
        throw std::invalid_argument("node " + std::to_string(v) + " is already saturated");
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (NodeId u = 0; u < n; ++u) {
        if (u == v || g.has_edge(u, v)) continue;
        edges.push_back({std::min(u, v), std::max(u, v)});
    }
    return Graph(n, std::move(edges));
}

Graph permute(const Graph& g, std::span<const NodeId> p) {
    const NodeId n = g.node_count();
    if (static_cast<NodeId>(p.size()) != n)
        throw std::invalid_argument("permutation length must equal node count");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (NodeId x : p) {
        if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("not a permutation of 0..n-1");
        seen[static_cast<std::size_t>(x)] = true;
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const auto& e : g.edges())
        edges.push_back({p[static_cast<std::size_t>(e.u)], p[static_cast<std::size_t>(e.v)]});
    return Graph(n, std::move(edges));
}

Graph largest_component(const Graph& g) {
    const NodeId n = g.node_count();
    if (n == 0) throw std::invalid_argument("largest_component of an empty graph");
    const ComponentMap map = connected_components(g);

    std::vector<std::int64_t> sizes(static_cast<std::size_t>(map.count), 0);
    for (NodeId v = 0; v < n; ++v) ++sizes[static_cast<std::size_t>(map.component_of[static_cast<std::size_t>(v)])];
    // Component ids are assigned by smallest contained node, so the first
    // maximal-size id also realizes the tie rule.
    NodeId best = 0;
    for (NodeId c = 1; c < map.count; ++c)
        if (sizes[static_cast<std::size_t>(c)] > sizes[static_cast<std::size_t>(best)]) best = c;

    std::vector<NodeId> relabel(static_cast<std::size_t>(n), -1);
    NodeId next = 0;
    for (NodeId v = 0; v < n; ++v)
        if (map.component_of[static_cast<std::size_t>(v)] == best) relabel[static_cast<std::size_t>(v)] = next++;

    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        const NodeId u = relabel[static_cast<std::size_t>(e.u)];
        const NodeId v = relabel[static_cast<std::size_t>(e.v)];
        if (u != -1 && v != -1) edges.push_back({u, v});
    }
    return Graph(next, std::move(edges));
}

}  // namespace centra
