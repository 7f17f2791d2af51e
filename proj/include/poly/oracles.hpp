#pragma once

#include <map>
#include <vector>

#include "poly/embedding.hpp"
#include "poly/graph.hpp"

namespace poly {

/// All-pairs shortest paths by Floyd-Warshall; independent of the BFS
/// route used everywhere else. Order <= 16.
std::vector<std::vector<int>> floyd_warshall_distances(const Graph& g);

int oracle_radius(const Graph& g);

/// Exact nonplanarity for order <= 6: K5 subdivision with at most one
/// subdivision vertex, or spanning K3,3.
bool small_graph_nonplanar(const Graph& g);

/// Independent enumeration route: every labeled simple graph on 4..max_order
/// vertices, filtered by minimum degree, exhaustive separator search and the
/// planarity oracle, then deduplicated by canonical code. Keyed by size.
/// max_order <= 7.
std::map<int, std::vector<Code>> brute_force_polyhedral_census(int max_order);

}  // namespace poly
