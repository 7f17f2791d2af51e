#include "poly/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace poly {

EmbeddedGraph::EmbeddedGraph(Graph g, std::vector<std::vector<int>> rotation)
    : graph_(std::move(g)), rotation_(std::move(rotation)) {
    if (static_cast<int>(rotation_.size()) != graph_.order())
        throw std::invalid_argument("embedding: rotation size != order");
    for (int v = 0; v < graph_.order(); ++v) {
        auto sorted = rotation_[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != graph_.neighbors(v))
            throw std::invalid_argument("embedding: rotation at vertex " + std::to_string(v) +
                                        " is not a permutation of its neighbors");
    }
}

EmbeddedGraph EmbeddedGraph::mirrored() const {
    auto rot = rotation_;
    for (auto& r : rot) std::reverse(r.begin(), r.end());
    return EmbeddedGraph(graph_, std::move(rot));
}

namespace {

// Position of u in the rotation list at v.
int rot_index(const std::vector<int>& rot, int u) {
    for (int i = 0; i < static_cast<int>(rot.size()); ++i)
        if (rot[i] == u) return i;
    throw std::logic_error("embedding: neighbor missing from rotation");
}

}  // namespace

std::vector<std::vector<int>> faces(const EmbeddedGraph& eg) {
    const int n = eg.order();
    const auto& rot = eg.rotation();
    // visited[v][i]: directed edge (rot[v][i] -> ... no: (v -> rot[v][i]).
    std::vector<std::vector<char>> visited(n);
    for (int v = 0; v < n; ++v) visited[v].assign(rot[v].size(), 0);

    std::vector<std::vector<int>> walks;
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) {
            if (visited[v][i]) continue;
            std::vector<int> walk;
            int cu = v, ci = i;
            while (!visited[cu][ci]) {
                visited[cu][ci] = 1;
                int cw = rot[cu][ci];
                walk.push_back(cu);
                // next directed edge: (cw, successor of cu in rotation at cw)
                int j = rot_index(rot[cw], cu);
                ci = (j + 1) % static_cast<int>(rot[cw].size());
                cu = cw;
            }
            walks.push_back(std::move(walk));
        }
    }
    return walks;
}

int face_count(const EmbeddedGraph& eg) {
    return static_cast<int>(faces(eg).size());
}

bool euler_holds(const EmbeddedGraph& eg) {
    return eg.order() - eg.size() + face_count(eg) == 2;
}

EmbeddedGraph dual(const EmbeddedGraph& eg) {
    const int n = eg.order();
    auto walks = faces(eg);
    const int f = static_cast<int>(walks.size());

    // face_of[u*n+v] = face containing directed edge (u,v)
    std::vector<int> face_of(static_cast<std::size_t>(n) * n, -1);
    for (int fi = 0; fi < f; ++fi) {
        const auto& w = walks[fi];
        const int len = static_cast<int>(w.size());
        for (int k = 0; k < len; ++k)
            face_of[static_cast<std::size_t>(w[k]) * n + w[(k + 1) % len]] = fi;
    }

    std::vector<std::vector<int>> rot(f);
    std::vector<std::pair<int, int>> edges;
    for (int fi = 0; fi < f; ++fi) {
        const auto& w = walks[fi];
        const int len = static_cast<int>(w.size());
        for (int k = 0; k < len; ++k) {
            int u = w[k], v = w[(k + 1) % len];
            int gi = face_of[static_cast<std::size_t>(v) * n + u];
            if (gi == fi)
                throw std::invalid_argument("dual: loop (face adjacent to itself); input not 3-connected");
            rot[fi].push_back(gi);
            if (fi < gi) edges.emplace_back(fi, gi);
        }
        auto dup = rot[fi];
        std::sort(dup.begin(), dup.end());
        if (std::adjacent_find(dup.begin(), dup.end()) != dup.end())
            throw std::invalid_argument("dual: multi-edge (faces share two edges); input not 3-connected");
    }
    Graph dg(f, edges);
    if (dg.size() != eg.size()) throw std::logic_error("dual: size mismatch");
    return EmbeddedGraph(std::move(dg), std::move(rot));
}

namespace {

// Breadth-first code of the rotation system from one directed start edge.
// Bytes: order, then for each vertex in discovery order the labels of its
// neighbors starting at the entry edge, terminated by 0. Labels are 1-based.
// Compares against `best` while generating; returns true (and fills `out`)
// iff strictly smaller or best is empty.
bool encode_from(const Graph& g, const std::vector<std::vector<int>>& rot, int u0, int v0,
                 const Code& best, Code& out) {
    const int n = g.order();
    out.clear();
    out.reserve(1 + n + 2 * g.size());
    bool smaller = best.empty();

    auto emit = [&](std::uint8_t b) -> bool {
        // returns false when the candidate is already worse than best
        if (!smaller) {
            std::uint8_t ref = best[out.size()];
            if (b > ref) return false;
            if (b < ref) smaller = true;
        }
        out.push_back(b);
        return true;
    };

    if (!emit(static_cast<std::uint8_t>(n))) return false;

    std::vector<int> label(n, 0);
    std::vector<int> order_of_visit;
    std::vector<int> entry(n, -1);
    order_of_visit.reserve(n);
    label[u0] = 1;
    order_of_visit.push_back(u0);
    entry[u0] = v0;
    int next_label = 2;

    for (std::size_t idx = 0; idx < order_of_visit.size(); ++idx) {
        int v = order_of_visit[idx];
        const auto& rv = rot[v];
        const int deg = static_cast<int>(rv.size());
        int start = rot_index(rv, entry[v]);
        for (int t = 0; t < deg; ++t) {
            int w = rv[(start + t) % deg];
            if (label[w] == 0) {
                label[w] = next_label++;
                order_of_visit.push_back(w);
                entry[w] = v;
            }
            if (!emit(static_cast<std::uint8_t>(label[w]))) return false;
        }
        if (!emit(0)) return false;
    }
    if (static_cast<int>(order_of_visit.size()) != n)
        throw std::invalid_argument("canonical_code: graph not connected");
    return smaller || best.empty();
}

}  // namespace

Code canonical_code(const EmbeddedGraph& eg) {
    const Graph& g = eg.graph();
    const int n = g.order();
    if (n < 1 || n > 255) throw std::invalid_argument("canonical_code: order must be in 1..255");
    if (g.size() == 0) return Code{static_cast<std::uint8_t>(n)};

    Code best, cand;
    const std::vector<std::vector<int>>* rots[2];
    auto mirror = eg.mirrored();
    rots[0] = &eg.rotation();
    rots[1] = &mirror.rotation();
    for (const auto* rot : rots) {
        for (int u = 0; u < n; ++u)
            for (int v : (*rot)[u])
                if (encode_from(g, *rot, u, v, best, cand)) best = cand;
    }
    return best;
}

EmbeddedGraph canonical_representative(const Code& code) {
    if (code.empty()) throw std::invalid_argument("canonical_representative: empty code");
    const int n = code[0];
    std::vector<std::vector<int>> rot(n);
    std::size_t pos = 1;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        while (pos < code.size() && code[pos] != 0) {
            int w = code[pos] - 1;
            if (w < 0 || w >= n) throw std::invalid_argument("canonical_representative: label out of range");
            rot[v].push_back(w);
            if (v < w) edges.emplace_back(v, w);
            ++pos;
        }
        if (pos >= code.size()) throw std::invalid_argument("canonical_representative: truncated code");
        ++pos;  // terminator
    }
    if (pos != code.size()) throw std::invalid_argument("canonical_representative: trailing bytes");
    return EmbeddedGraph(Graph(n, edges), std::move(rot));
}

bool is_isomorphic(const EmbeddedGraph& g, const EmbeddedGraph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    return canonical_code(g) == canonical_code(h);
}

namespace {

bool extend_mapping(const Graph& g, const Graph& h, std::vector<int>& map, std::vector<char>& used, int v) {
    const int n = g.order();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w] || g.degree(v) != h.degree(w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.has_edge(u, v) != h.has_edge(map[u], w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = 1;
        if (extend_mapping(g, h, map, used, v + 1)) return true;
        used[w] = 0;
    }
    return false;
}

}  // namespace

bool brute_force_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() > 10 || h.order() > 10)
        throw std::invalid_argument("brute_force_isomorphic: order must be <= 10");
    if (g.order() != h.order() || g.size() != h.size()) return false;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.order(); ++v) dg.push_back(g.degree(v));
    for (int v = 0; v < h.order(); ++v) dh.push_back(h.degree(v));
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    std::vector<int> map(g.order(), -1);
    std::vector<char> used(g.order(), 0);
    return extend_mapping(g, h, map, used, 0);
}

EmbeddedGraph embed_from_points(const Graph& g, const std::vector<std::pair<double, double>>& pos) {
    if (static_cast<int>(pos.size()) != g.order())
        throw std::invalid_argument("embed_from_points: position count != order");
    std::vector<std::vector<int>> rot(g.order());
    for (int v = 0; v < g.order(); ++v) {
        rot[v] = g.neighbors(v);
        auto angle = [&](int w) {
            return std::atan2(pos[w].second - pos[v].second, pos[w].first - pos[v].first);
        };
        std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) { return angle(a) < angle(b); });
    }
    return EmbeddedGraph(g, std::move(rot));
}

EmbeddedGraph circular_prism(int m) {
    if (m < 3) throw std::invalid_argument("circular_prism: need m >= 3");
    // outer ring 0..m-1, inner ring m..2m-1, rung i -- m+i
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        edges.emplace_back(i, (i + 1) % m);
        edges.emplace_back(m + i, m + (i + 1) % m);
        edges.emplace_back(i, m + i);
    }
    Graph g(2 * m, edges);
    std::vector<std::pair<double, double>> pos(2 * m);
    for (int i = 0; i < m; ++i) {
        double a = 2.0 * std::numbers::pi * i / m;
        pos[i] = {2.0 * std::cos(a), 2.0 * std::sin(a)};
        pos[m + i] = {std::cos(a), std::sin(a)};
    }
    return embed_from_points(g, pos);
}

EmbeddedGraph prism(int r) {
    if (r < 3) throw std::invalid_argument("prism: need r >= 3");
    return circular_prism(2 * (r - 1));
}

}  // namespace poly
