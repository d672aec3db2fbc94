#pragma once

#include <cstdint>
#include <functional>
#include <string_view>

#include "centra/graph.hpp"

namespace centra {

/// The six canonical sweep topologies.
enum class Topology {
    Star,
    Ring,
    Complete,
    StarPerturbed,
    RingPerturbed,
    CompletePerturbed,
};

inline constexpr Topology kAllTopologies[] = {
    Topology::Star,          Topology::Ring,          Topology::Complete,
    Topology::StarPerturbed, Topology::RingPerturbed, Topology::CompletePerturbed,
};

std::string_view topology_name(Topology t);
Topology parse_topology(std::string_view name);

/// Deterministic canonical generators. The perturbed variants apply one
/// pinned edit:
///   star-perturbed:     star minus {0, n-1} plus {1, n-1}
///   ring-perturbed:     ring minus {n-1, 0} plus {n-1, 1}  (node 0 pendant)
///   complete-perturbed: complete minus {0, 1}
/// n >= 3 for ring and all perturbed kinds, n >= 1 otherwise. The seed is
/// reserved for future randomized variants and does not affect the output.
Graph generate(Topology t, NodeId n, std::uint64_t seed = 0);

/// Calls fn with every labeled simple graph on n nodes exactly once, in
/// ascending edge-subset bitmask order (bit k is the k-th pair (u,v), u < v,
/// lexicographic). Optionally filtered to connected graphs. 1 <= n <= 7.
void enumerate_graphs(NodeId n, bool connected_only, const std::function<void(const Graph&)>& fn);

}  // namespace centra
