#include "poly/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace poly {

std::vector<int> LayerDecomposition::layer_sizes() const {
    std::vector<int> out;
    out.reserve(layers.size());
    for (const auto& layer : layers) out.push_back(static_cast<int>(layer.size()));
    return out;
}

LayerDecomposition bfs_layers(const Graph& g, int root) {
    const int n = g.order();
    if (root < 0 || root >= n) throw std::invalid_argument("bfs_layers: root out of range");
    LayerDecomposition ld;
    ld.root = root;
    ld.layer_of.assign(n, -1);
    ld.layer_of[root] = 0;
    ld.layers.push_back({root});
    while (true) {
        std::vector<int> next;
        for (int v : ld.layers.back())
            for (int w : g.neighbors(v))
                if (ld.layer_of[w] < 0) {
                    ld.layer_of[w] = static_cast<int>(ld.layers.size());
                    next.push_back(w);
                }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        ld.layers.push_back(std::move(next));
    }
    ld.ecc = static_cast<int>(ld.layers.size()) - 1;
    for (int v = 0; v < n; ++v)
        if (ld.layer_of[v] < 0)
            throw std::invalid_argument("bfs_layers: vertex " + std::to_string(v) +
                                        " unreachable from root " + std::to_string(root));
    return ld;
}

int eccentricity(const Graph& g, int v) {
    return bfs_layers(g, v).ecc;
}

std::pair<int, std::vector<int>> radius_and_center(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("radius_and_center: empty graph");
    std::vector<int> ecc(g.order());
    for (int v = 0; v < g.order(); ++v) ecc[v] = eccentricity(g, v);
    int rad = *std::min_element(ecc.begin(), ecc.end());
    std::vector<int> center;
    for (int v = 0; v < g.order(); ++v)
        if (ecc[v] == rad) center.push_back(v);
    return {rad, center};
}

int diameter(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("diameter: empty graph");
    int d = 0;
    for (int v = 0; v < g.order(); ++v) d = std::max(d, eccentricity(g, v));
    return d;
}

bool is_k_regular(const Graph& g, int k) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != k) return false;
    return true;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    std::vector<std::vector<int>> dist;
    dist.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) {
        auto ld = bfs_layers(g, v);
        dist.push_back(std::move(ld.layer_of));
    }
    return dist;
}

}  // namespace poly
