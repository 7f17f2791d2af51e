#include "poly/oracles.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "poly/structure.hpp"

namespace poly {

std::vector<std::vector<int>> floyd_warshall_distances(const Graph& g) {
    const int n = g.order();
    if (n > 16) throw std::invalid_argument("floyd_warshall_distances: order must be <= 16");
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

int oracle_radius(const Graph& g) {
    auto d = floyd_warshall_distances(g);
    const int inf = 1 << 20;
    int radius = inf;
    for (int v = 0; v < g.order(); ++v) {
        int ecc = 0;
        for (int w = 0; w < g.order(); ++w) ecc = std::max(ecc, d[v][w]);
        radius = std::min(radius, ecc);
    }
    if (radius >= inf) throw std::invalid_argument("oracle_radius: disconnected graph");
    return radius;
}

bool small_graph_nonplanar(const Graph& g) {
    const int n = g.order();
    if (n > 6) throw std::invalid_argument("small_graph_nonplanar: order must be <= 6");
    if (n < 5) return false;

    // K5 subdivision: 5 branch vertices, at most one subdivision vertex
    std::vector<char> sel(n, 0);
    std::fill(sel.begin(), sel.begin() + 5, 1);
    std::sort(sel.begin(), sel.end());
    do {
        std::vector<int> s;
        int spare = -1;
        for (int i = 0; i < n; ++i) {
            if (sel[i])
                s.push_back(i);
            else
                spare = i;
        }
        std::vector<std::pair<int, int>> missing;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                if (!g.has_edge(s[i], s[j])) missing.emplace_back(s[i], s[j]);
        if (missing.empty()) return true;  // K5 itself
        if (spare >= 0 && missing.size() == 1) {
            auto [a, b] = missing.front();
            if (g.has_edge(a, spare) && g.has_edge(b, spare)) return true;
        }
    } while (std::next_permutation(sel.begin(), sel.end()));

    if (n == 6) {
        // spanning K3,3: all 9 cross edges for some 3+3 partition
        std::vector<char> side(6, 0);
        std::fill(side.begin(), side.begin() + 3, 1);
        std::sort(side.begin(), side.end());
        do {
            bool complete = true;
            for (int i = 0; i < 6 && complete; ++i)
                for (int j = i + 1; j < 6 && complete; ++j)
                    if (side[i] != side[j] && !g.has_edge(i, j)) complete = false;
            if (complete) return true;
        } while (std::next_permutation(side.begin(), side.end()));
    }
    return false;
}

namespace {

// G - S connected, over bitmask adjacency rows.
bool mask_connected_without(const std::uint8_t adj[8], int p, std::uint8_t removed) {
    std::uint8_t all = static_cast<std::uint8_t>((1u << p) - 1) & static_cast<std::uint8_t>(~removed);
    if (all == 0) return true;
    std::uint8_t reach = all & static_cast<std::uint8_t>(-all);  // lowest kept vertex
    while (true) {
        std::uint8_t next = reach;
        for (int v = 0; v < p; ++v)
            if (reach & (1u << v)) next |= adj[v];
        next &= all;
        if (next == reach) break;
        reach = next;
    }
    return reach == all;
}

}  // namespace

std::map<int, std::vector<Code>> brute_force_polyhedral_census(int max_order) {
    if (max_order > 7) throw std::invalid_argument("brute_force_polyhedral_census: order must be <= 7");
    std::map<int, std::set<Code>> found;
    for (int p = 4; p <= max_order; ++p) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j) pairs.emplace_back(i, j);
        const int nbits = static_cast<int>(pairs.size());
        for (std::uint32_t mask = 0; mask < (1u << nbits); ++mask) {
            std::uint8_t adj[8] = {};
            for (int b = 0; b < nbits; ++b)
                if (mask & (1u << b)) {
                    adj[pairs[b].first] |= static_cast<std::uint8_t>(1u << pairs[b].second);
                    adj[pairs[b].second] |= static_cast<std::uint8_t>(1u << pairs[b].first);
                }
            bool degree_ok = true;
            for (int v = 0; v < p; ++v)
                if (std::popcount(adj[v]) < 3) degree_ok = false;
            if (!degree_ok) continue;

            // exhaustive separator search in the bit domain
            bool three_connected = mask_connected_without(adj, p, 0);
            for (int a = 0; a < p && three_connected; ++a)
                for (int b = a; b < p && three_connected; ++b) {
                    std::uint8_t s = static_cast<std::uint8_t>((1u << a) | (1u << b));
                    if (!mask_connected_without(adj, p, s)) three_connected = false;
                }
            if (!three_connected) continue;

            std::vector<std::pair<int, int>> edges;
            for (int b = 0; b < nbits; ++b)
                if (mask & (1u << b)) edges.push_back(pairs[b]);
            if (3 * p - 6 < static_cast<int>(edges.size())) continue;
            Graph g(p, edges);
            if (!planarity_test(g)) continue;  // skip witness extraction on the common reject path
            PlanarityResult pr = is_planar(g);
            found[g.size()].insert(canonical_code(*pr.embedding));
        }
    }
    std::map<int, std::vector<Code>> out;
    for (auto& [size, codes] : found) out[size].assign(codes.begin(), codes.end());
    return out;
}

}  // namespace poly
