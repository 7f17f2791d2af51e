#pragma once

#include <utility>
#include <vector>

#include "poly/graph.hpp"

namespace poly {

/// BFS layers from a root: layers[i] holds the vertices at distance
/// exactly i, for i = 0..ecc.
struct LayerDecomposition {
    int root = -1;
    std::vector<std::vector<int>> layers;
    std::vector<int> layer_of;  // per-vertex layer index
    int ecc = 0;

    std::vector<int> layer_sizes() const;
};

/// Throws std::invalid_argument on a disconnected graph, naming an
/// unreached vertex.
LayerDecomposition bfs_layers(const Graph& g, int root);

int eccentricity(const Graph& g, int v);

/// (radius, vertices attaining it). Connected graphs only.
std::pair<int, std::vector<int>> radius_and_center(const Graph& g);

int diameter(const Graph& g);

bool is_k_regular(const Graph& g, int k);

/// dist[u][v] by repeated BFS.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

}  // namespace poly
