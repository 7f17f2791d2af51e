#pragma once

#include <string>
#include <utility>
#include <vector>

namespace poly {

/// Undirected simple graph with dense 0-based vertex indices.
/// Adjacency lists are kept sorted. Values are immutable after construction;
/// "adding an edge" produces a new Graph.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on loops, duplicate edges or
    /// out-of-range endpoints, naming the offending pair.
    Graph(int order, const std::vector<std::pair<int, int>>& edge_list);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return size_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    /// New graph with one extra edge.
    Graph with_edge(int u, int v) const;

    bool operator==(const Graph& other) const = default;

private:
    std::vector<std::vector<int>> adj_;
    int size_ = 0;
};

Graph make_graph(int order, const std::vector<std::pair<int, int>>& edge_list);

/// Cartesian product: (u1,u2)~(v1,v2) iff u1==v1 and u2v2 is an edge,
/// or u2==v2 and u1v1 is an edge. Vertex (u1,u2) gets index u1*order2+u2.
Graph cartesian_product(const Graph& g1, const Graph& g2);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);

}  // namespace poly
