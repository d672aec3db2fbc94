#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace centra {

using NodeId = std::int64_t;

/// Unordered node pair, stored normalized (u < v).
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected labeled graph. Immutable after construction; all
/// operations on it are pure functions, so instances can be shared freely
/// across threads.
///
/// Invariants enforced at construction: no self-loops, no duplicate edges,
/// every endpoint index in [0, n).
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on a self-loop, an out-of-range
    /// endpoint, or negative n. Duplicate edges collapse to one.
    Graph(NodeId n, std::vector<Edge> edges);

    NodeId node_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

    /// Edges sorted lexicographically with u < v.
    std::span<const Edge> edges() const { return edges_; }

    /// Neighbors of v in ascending order.
    std::span<const NodeId> neighbors(NodeId v) const;

    NodeId degree(NodeId v) const;
    bool has_edge(NodeId u, NodeId v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    NodeId n_ = 0;
    std::vector<Edge> edges_;
    std::vector<NodeId> adjacency_;
    std::vector<std::size_t> offsets_;
};

/// Structural facts computed by classify().
struct StructuralFacts {
    bool is_complete = false;
    bool is_star = false;
    bool is_regular = false;
    std::vector<NodeId> saturated_nodes;  // nodes of degree n-1, ascending
    std::int64_t component_count = 0;     // 0 for the empty (n = 0) graph
    std::vector<NodeId> degree_sequence;  // indexed by node
};

StructuralFacts classify(const Graph& g);

/// Component id per node (ids assigned in order of smallest contained node)
/// plus the number of components.
struct ComponentMap {
    std::vector<NodeId> component_of;
    std::int64_t count = 0;
};

ComponentMap connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Returns g plus all missing edges at v, leaving g untouched.
/// Rejects nodes that are already saturated (degree n-1).
Graph saturate(const Graph& g, NodeId v);

/// Relabels nodes through the permutation p (p[i] = new label of node i).
/// Rejects non-bijections.
Graph permute(const Graph& g, std::span<const NodeId> p);

/// Induced subgraph on the largest connected component, nodes relabeled
/// 0..k-1 preserving relative order. Ties break toward the component
/// containing the smallest original node id. Rejects the n = 0 graph.
Graph largest_component(const Graph& g);

}  // namespace centra
