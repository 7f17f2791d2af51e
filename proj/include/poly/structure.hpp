#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "poly/embedding.hpp"
#include "poly/graph.hpp"
#include "poly/invariants.hpp"

namespace poly {

/// k internally vertex-disjoint source-sink paths (Menger witness).
/// Each path lists its vertices from source to sink inclusive.
struct PathSystem {
    int source = -1;
    int sink = -1;
    std::vector<std::vector<int>> paths;
};

/// Interior vertex i of every path lies in layer i of the decomposition.
bool paths_layer_aligned(const PathSystem& ps, const LayerDecomposition& ld);

struct DisjointPathsResult {
    std::optional<PathSystem> paths;
    std::vector<int> separator;  // on failure: a vertex cut smaller than k
    bool ok() const { return paths.has_value(); }
};

/// Unit-vertex-capacity max-flow between source and sink; on success the
/// integral flow is decomposed into paths, ties broken by lowest vertex
/// index. `vertex_order`, when given, relabels the flow network first
/// (alternative Menger triples for the same pair).
DisjointPathsResult disjoint_paths(const Graph& g, int source, int sink, int k);
DisjointPathsResult disjoint_paths(const Graph& g, int source, int sink, int k,
                                   const std::vector<int>& vertex_order);

/// True iff no vertex separator of size < k exists. Requires order >= k+1.
bool vertex_connectivity_at_least(const Graph& g, int k);

/// Exhaustive separator search; cross-check for order <= 10.
bool brute_force_connectivity_at_least(const Graph& g, int k);

struct KuratowskiWitness {
    enum class Kind { K5, K33 };
    Kind kind;
    std::vector<std::pair<int, int>> edges;  // a subdivision inside the input
};

struct PlanarityResult {
    bool planar = false;
    std::optional<EmbeddedGraph> embedding;       // on success
    std::optional<KuratowskiWitness> witness;     // on failure, for order <= 16
};

/// Planarity oracle (connected inputs). On success returns a rotation
/// system whose face tracing satisfies Euler's relation; on failure a
/// witness subgraph homeomorphic to K5 or K3,3 for order <= 16.
PlanarityResult is_planar(const Graph& g);

/// Boolean-only test; accepts disconnected graphs.
bool planarity_test(const Graph& g);

}  // namespace poly
