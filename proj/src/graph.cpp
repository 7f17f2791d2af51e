#include "poly/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace poly {

namespace {

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int order, const std::vector<std::pair<int, int>>& edge_list) {
    if (order < 0) throw std::invalid_argument("graph: negative order");
    adj_.assign(order, {});
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw std::invalid_argument("graph: endpoint out of range in edge " + pair_str(u, v));
        if (u == v)
            throw std::invalid_argument("graph: loop edge " + pair_str(u, v));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (int v = 0; v < order; ++v) {
        auto& nb = adj_[v];
        std::sort(nb.begin(), nb.end());
        auto dup = std::adjacent_find(nb.begin(), nb.end());
        if (dup != nb.end())
            throw std::invalid_argument("graph: duplicate edge " + pair_str(v, *dup));
    }
    size_ = static_cast<int>(edge_list.size());
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(size_);
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    auto e = edges();
    e.emplace_back(std::min(u, v), std::max(u, v));
    return Graph(order(), e);
}

Graph make_graph(int order, const std::vector<std::pair<int, int>>& edge_list) {
    return Graph(order, edge_list);
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
    if (g1.order() == 0 || g2.order() == 0)
        throw std::invalid_argument("cartesian_product: empty factor");
    const int n2 = g2.order();
    std::vector<std::pair<int, int>> edges;
    for (int u1 = 0; u1 < g1.order(); ++u1)
        for (int u2 = 0; u2 < n2; ++u2) {
            // u1 fixed, edge in second factor
            for (int v2 : g2.neighbors(u2))
                if (u2 < v2) edges.emplace_back(u1 * n2 + u2, u1 * n2 + v2);
            // u2 fixed, edge in first factor
            for (int v1 : g1.neighbors(u1))
                if (u1 < v1) edges.emplace_back(u1 * n2 + u2, v1 * n2 + u2);
        }
    return Graph(g1.order() * n2, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return Graph(n, edges);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, edges);
}

}  // namespace poly
