// Independent naive implementations used as oracles: explicit shortest-path
// enumeration for betweenness, Floyd-Warshall closeness, a Jacobi
// eigensolver (distinct from the core's Householder+QL path), and direct
// transcriptions of every measure formula in plain double arithmetic.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "centra/graph.hpp"

namespace oracle {

using centra::Graph;
using centra::NodeId;

std::vector<std::vector<std::int64_t>> all_pairs_distances(const Graph& g);

/// Normalized betweenness by enumerating every shortest path explicitly.
std::vector<double> betweenness(const Graph& g);

/// Component-scaled closeness from Floyd-Warshall distances.
std::vector<double> closeness(const Graph& g);

/// Jacobi rotations; eigenvalues descending.
std::vector<double> spectrum(const Graph& g);

/// Projection of the all-ones vector onto the Jacobi top eigenspace.
std::vector<double> eigenvector(const Graph& g);

double assortativity(const Graph& g);

// Direct formula transcriptions (shared degenerate conventions).
double abh(const Graph& g);
double ecd(const Graph& g);
double nbc(const Graph& g);
double ncc(const Graph& g);
double ndc(const Graph& g);
double nde(const Graph& g);
double ndv(const Graph& g);
double ngc(const Graph& g);
double nhd(const Graph& g);
double nht(const Graph& g);
double nnc(const Graph& g);

double measure_by_index(const Graph& g, std::size_t index);

/// Seeded Erdos-Renyi-style graph with exactly the requested edge count
/// (capped at the simple-graph maximum).
Graph random_graph(NodeId n, std::int64_t edges, std::mt19937_64& rng);

std::vector<NodeId> random_permutation(NodeId n, std::mt19937_64& rng);

}  // namespace oracle
