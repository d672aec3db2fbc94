#pragma once

#include <vector>

#include "centra/graph.hpp"

namespace centra {

/// All adjacency eigenvalues, descending. Trace sums to 0 and the sum of
/// squares to 2m, up to eigensolver accuracy.
struct Spectrum {
    std::vector<double> eigenvalues;
};

std::vector<NodeId> degree_sequence(const Graph& g);

/// Brandes pair-dependency betweenness over unweighted shortest paths,
/// computed within components, divided by (n-1)(n-2)/2 so a star hub scores
/// exactly 1. Rejects n < 3 (callers own the degenerate convention). The
/// source loop runs block-parallel with a fixed merge order, so results are
/// bit-stable regardless of worker count.
std::vector<double> betweenness_normalized(const Graph& g);

/// Both path-based vectors from one BFS sweep; bitwise identical to calling
/// betweenness_normalized and closeness_normalized separately.
struct PathCentrality {
    std::vector<double> betweenness;
    std::vector<double> closeness;
};

PathCentrality betweenness_closeness_normalized(const Graph& g);

/// Closeness with the component-scaled convention: a node reaching r-1
/// others at total distance D scores (n-1)/D when r = n and
/// ((r-1)/(n-1)) * ((r-1)/D) otherwise; isolated nodes score 0.
/// Rejects n < 3.
std::vector<double> closeness_normalized(const Graph& g);

/// Nonnegative principal adjacency eigenvector, unit L2 norm, all zeros for
/// m = 0. Regular graphs return the exact uniform vector; other graphs use
/// the projection of the all-ones vector onto the top eigenspace (dense
/// solve for small n, otherwise shifted power iteration with tolerance
/// 1e-12, at most 1e5 iterations, and a dense fallback on non-convergence).
std::vector<double> eigenvector_l2(const Graph& g);

Spectrum adjacency_spectrum(const Graph& g);

/// Pearson correlation of endpoint degrees over the 2m directed edge
/// occurrences; +1 by convention when the endpoint-degree variance
/// vanishes. Rejects m = 0.
double degree_assortativity(const Graph& g);

}  // namespace centra
