#include "poly/structure.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace poly {

bool paths_layer_aligned(const PathSystem& ps, const LayerDecomposition& ld) {
    for (const auto& path : ps.paths)
        for (int i = 0; i < static_cast<int>(path.size()); ++i)
            if (ld.layer_of[path[i]] != i) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Vertex-capacity max-flow (vertex splitting: v_in = 2v, v_out = 2v+1).
// ---------------------------------------------------------------------------

namespace {

struct Arc {
    int to;
    int cap;
    int rev;   // index of the paired arc in arcs[to]
    bool fwd;  // real arc vs residual counterpart
};

struct FlowNet {
    std::vector<std::vector<Arc>> arcs;
    int s = -1, t = -1;

    void add_arc(int from, int to, int cap) {
        arcs[from].push_back({to, cap, static_cast<int>(arcs[to].size()), true});
        arcs[to].push_back({from, 0, static_cast<int>(arcs[from].size()) - 1, false});
    }

    int arc_flow(int from, int i) const {
        const Arc& a = arcs[from][i];
        return a.fwd ? arcs[a.to][a.rev].cap : 0;
    }

    void push_back_unit(int from, int i) {  // remove one unit of flow
        Arc& a = arcs[from][i];
        arcs[a.to][a.rev].cap -= 1;
        a.cap += 1;
    }
};

FlowNet build_net(const Graph& g, int source, int sink) {
    FlowNet net;
    const int n = g.order();
    net.arcs.assign(2 * n, {});
    net.s = 2 * source + 1;  // source out-node
    net.t = 2 * sink;        // sink in-node
    for (int v = 0; v < n; ++v)
        if (v != source && v != sink) net.add_arc(2 * v, 2 * v + 1, 1);
    // edge arcs never bottleneck a min cut, so cuts cross only vertex arcs;
    // a direct source-sink edge keeps capacity 1 (it is one whole path)
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            int cap = (u == source && v == sink) ? 1 : n;
            net.add_arc(2 * u + 1, 2 * v, cap);
        }
    return net;
}

// One BFS augmentation; arcs explored in insertion order for determinism.
bool augment(FlowNet& net) {
    std::vector<int> prev_node(net.arcs.size(), -1);
    std::vector<int> prev_arc(net.arcs.size(), -1);
    std::deque<int> queue{net.s};
    prev_node[net.s] = net.s;
    while (!queue.empty() && prev_node[net.t] < 0) {
        int u = queue.front();
        queue.pop_front();
        for (int i = 0; i < static_cast<int>(net.arcs[u].size()); ++i) {
            const Arc& a = net.arcs[u][i];
            if (a.cap <= 0 || prev_node[a.to] >= 0) continue;
            prev_node[a.to] = u;
            prev_arc[a.to] = i;
            queue.push_back(a.to);
        }
    }
    if (prev_node[net.t] < 0) return false;
    for (int v = net.t; v != net.s; v = prev_node[v]) {
        Arc& a = net.arcs[prev_node[v]][prev_arc[v]];
        a.cap -= 1;
        net.arcs[a.to][a.rev].cap += 1;
    }
    return true;
}

int max_flow(FlowNet& net, int limit) {
    int flow = 0;
    while (flow < limit && augment(net)) ++flow;
    return flow;
}

// Vertices whose internal arc crosses the residual min cut.
std::vector<int> min_vertex_cut(const FlowNet& net, const Graph& g, int source, int sink) {
    std::vector<char> reach(net.arcs.size(), 0);
    std::deque<int> queue{net.s};
    reach[net.s] = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const Arc& a : net.arcs[u])
            if (a.cap > 0 && !reach[a.to]) {
                reach[a.to] = 1;
                queue.push_back(a.to);
            }
    }
    std::vector<int> cut;
    for (int v = 0; v < g.order(); ++v) {
        if (v == source || v == sink) continue;
        if (reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
    }
    return cut;
}

std::vector<std::vector<int>> decompose_paths(FlowNet& net, const Graph& g, int source, int sink,
                                              int flow) {
    // cancel opposite flows on the two directions of the same edge
    for (auto [u, v] : g.edges()) {
        int iu = -1, iv = -1;
        for (int i = 0; i < static_cast<int>(net.arcs[2 * u + 1].size()); ++i)
            if (net.arcs[2 * u + 1][i].fwd && net.arcs[2 * u + 1][i].to == 2 * v) iu = i;
        for (int i = 0; i < static_cast<int>(net.arcs[2 * v + 1].size()); ++i)
            if (net.arcs[2 * v + 1][i].fwd && net.arcs[2 * v + 1][i].to == 2 * u) iv = i;
        while (iu >= 0 && iv >= 0 && net.arc_flow(2 * u + 1, iu) > 0 && net.arc_flow(2 * v + 1, iv) > 0) {
            net.push_back_unit(2 * u + 1, iu);
            net.push_back_unit(2 * v + 1, iv);
        }
    }
    std::vector<std::vector<int>> paths;
    for (int p = 0; p < flow; ++p) {
        std::vector<int> path{source};
        int node = net.s;
        while (node != net.t) {
            int chosen = -1;
            for (int i = 0; i < static_cast<int>(net.arcs[node].size()); ++i)
                if (net.arc_flow(node, i) > 0) {
                    chosen = i;
                    break;
                }
            if (chosen < 0) throw std::logic_error("disjoint_paths: flow decomposition stuck");
            net.push_back_unit(node, chosen);
            node = net.arcs[node][chosen].to;
            if (node % 2 == 1) path.push_back(node / 2);
        }
        path.push_back(sink);
        paths.push_back(std::move(path));
    }
    return paths;
}

Graph relabel_graph(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges);
}

}  // namespace

DisjointPathsResult disjoint_paths(const Graph& g, int source, int sink, int k) {
    if (source == sink) throw std::invalid_argument("disjoint_paths: source == sink");
    FlowNet net = build_net(g, source, sink);
    int flow = max_flow(net, k);
    DisjointPathsResult res;
    if (flow < k) {
        res.separator = min_vertex_cut(net, g, source, sink);
        return res;
    }
    PathSystem ps;
    ps.source = source;
    ps.sink = sink;
    ps.paths = decompose_paths(net, g, source, sink, flow);
    res.paths = std::move(ps);
    return res;
}

DisjointPathsResult disjoint_paths(const Graph& g, int source, int sink, int k,
                                   const std::vector<int>& vertex_order) {
    if (static_cast<int>(vertex_order.size()) != g.order())
        throw std::invalid_argument("disjoint_paths: bad vertex order");
    // run on the relabeled graph, then translate back
    std::vector<int> inv(vertex_order.size());
    for (int i = 0; i < static_cast<int>(vertex_order.size()); ++i) inv[vertex_order[i]] = i;
    Graph h = relabel_graph(g, vertex_order);
    DisjointPathsResult r = disjoint_paths(h, vertex_order[source], vertex_order[sink], k);
    DisjointPathsResult out;
    if (r.ok()) {
        PathSystem ps;
        ps.source = source;
        ps.sink = sink;
        for (auto& path : r.paths->paths) {
            std::vector<int> orig;
            for (int v : path) orig.push_back(inv[v]);
            ps.paths.push_back(std::move(orig));
        }
        out.paths = std::move(ps);
    } else {
        for (int v : r.separator) out.separator.push_back(inv[v]);
        std::sort(out.separator.begin(), out.separator.end());
    }
    return out;
}

namespace {

int flow_between(const Graph& g, int s, int t, int limit) {
    FlowNet net = build_net(g, s, t);
    return max_flow(net, limit);
}

}  // namespace

bool vertex_connectivity_at_least(const Graph& g, int k) {
    const int n = g.order();
    if (n <= k) throw std::invalid_argument("vertex_connectivity_at_least: order must exceed k");
    if (k <= 0) return true;
    // min-degree vertex gives a cheap upper bound and the pivot
    int a = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(a)) a = v;
    if (g.degree(a) < k) return false;
    for (int w = 0; w < n; ++w) {
        if (w == a || g.has_edge(a, w)) continue;
        if (flow_between(g, a, w, k) < k) return false;
    }
    // a minimum cut may contain the pivot: check its non-adjacent neighbor pairs
    const auto& na = g.neighbors(a);
    for (std::size_t i = 0; i < na.size(); ++i)
        for (std::size_t j = i + 1; j < na.size(); ++j) {
            int x = na[i], y = na[j];
            if (g.has_edge(x, y)) continue;
            if (flow_between(g, x, y, k) < k) return false;
        }
    return true;
}

namespace {

bool connected_without(const Graph& g, const std::vector<int>& removed) {
    const int n = g.order();
    std::vector<char> out(n, 0);
    for (int v : removed) out[v] = 1;
    int start = -1, kept = 0;
    for (int v = 0; v < n; ++v)
        if (!out[v]) {
            if (start < 0) start = v;
            ++kept;
        }
    if (kept == 0) return true;
    std::vector<char> seen(n, 0);
    std::deque<int> queue{start};
    seen[start] = 1;
    int count = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u))
            if (!out[w] && !seen[w]) {
                seen[w] = 1;
                ++count;
                queue.push_back(w);
            }
    }
    return count == kept;
}

bool subsets_connected(const Graph& g, std::vector<int>& sel, int next, int remaining) {
    if (remaining == 0) return connected_without(g, sel);
    for (int v = next; v < g.order(); ++v) {
        sel.push_back(v);
        if (!subsets_connected(g, sel, v + 1, remaining - 1)) return false;
        sel.pop_back();
    }
    return true;
}

}  // namespace

bool brute_force_connectivity_at_least(const Graph& g, int k) {
    if (g.order() > 10) throw std::invalid_argument("brute_force_connectivity_at_least: order must be <= 10");
    if (g.order() <= k) throw std::invalid_argument("brute_force_connectivity_at_least: order must exceed k");
    for (int s = 0; s < k; ++s) {
        std::vector<int> sel;
        if (!subsets_connected(g, sel, 0, s)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Planarity: face embedding per biconnected block (Demoucron-style).
// ---------------------------------------------------------------------------

namespace {

// Biconnected components as edge lists, in DFS discovery order.
std::vector<std::vector<std::pair<int, int>>> blocks_of(const Graph& g) {
    const int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int timer = 0;

    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<std::pair<int, int>> call_stack{{root, 0}};
        disc[root] = low[root] = timer++;
        while (!call_stack.empty()) {
            auto& [v, idx] = call_stack.back();
            if (idx < static_cast<int>(g.neighbors(v).size())) {
                int w = g.neighbors(v)[idx++];
                if (disc[w] < 0) {
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    edge_stack.emplace_back(v, w);
                    call_stack.emplace_back(w, 0);
                } else if (w != parent[v] && disc[w] < disc[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                call_stack.pop_back();
                if (!call_stack.empty()) {
                    int u = call_stack.back().first;
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= disc[u]) {
                        std::vector<std::pair<int, int>> block;
                        while (!edge_stack.empty()) {
                            auto e = edge_stack.back();
                            edge_stack.pop_back();
                            block.push_back(e);
                            if (e == std::make_pair(u, v)) break;
                        }
                        blocks.push_back(std::move(block));
                    }
                }
            }
        }
    }
    return blocks;
}

struct BlockEmbedder {
    int n = 0;
    std::vector<std::vector<int>> adj;

    std::vector<char> in_h;
    std::set<std::pair<int, int>> h_edges;     // embedded edges (u<v)
    std::vector<std::vector<int>> face_walks;  // directed vertex cycles

    bool edge_embedded(int u, int v) const {
        return h_edges.count({std::min(u, v), std::max(u, v)}) > 0;
    }

    struct Fragment {
        std::vector<int> attachments;
        std::vector<int> admissible_faces;
        std::vector<int> path;  // attachment .. attachment, interior outside H
    };

    std::optional<std::vector<std::vector<int>>> embed() {
        std::vector<int> cycle = find_cycle();
        if (cycle.empty()) throw std::logic_error("planarity: acyclic block with >1 edge");
        in_h.assign(n, 0);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            in_h[cycle[i]] = 1;
            int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
            h_edges.insert({std::min(u, v), std::max(u, v)});
        }
        face_walks.push_back(cycle);
        face_walks.emplace_back(cycle.rbegin(), cycle.rend());

        const int total_edges = count_edges();
        while (static_cast<int>(h_edges.size()) < total_edges) {
            std::vector<Fragment> frags = fragments();
            if (frags.empty()) throw std::logic_error("planarity: no fragments but edges remain");
            int pick = -1;
            for (int i = 0; i < static_cast<int>(frags.size()); ++i) {
                if (frags[i].admissible_faces.empty()) return std::nullopt;  // nonplanar
                if (pick < 0 || frags[i].admissible_faces.size() < frags[pick].admissible_faces.size())
                    pick = i;
            }
            embed_path(frags[pick].path, frags[pick].admissible_faces.front());
        }
        return build_rotations();
    }

    int count_edges() const {
        int q = 0;
        for (int v = 0; v < n; ++v) q += static_cast<int>(adj[v].size());
        return q / 2;
    }

    // Any cycle via DFS back edge (undirected DFS: non-tree edges go to
    // ancestors, so the parent chain closes the cycle).
    std::vector<int> find_cycle() const {
        std::vector<int> disc(n, -1), parent(n, -1);
        int timer = 0;
        std::vector<std::pair<int, int>> call{{0, 0}};
        disc[0] = timer++;
        while (!call.empty()) {
            auto& [v, idx] = call.back();
            if (idx < static_cast<int>(adj[v].size())) {
                int w = adj[v][idx++];
                if (disc[w] < 0) {
                    parent[w] = v;
                    disc[w] = timer++;
                    call.emplace_back(w, 0);
                } else if (w != parent[v] && disc[w] < disc[v]) {
                    std::vector<int> cyc{v};
                    int u = v;
                    while (u != w) {
                        u = parent[u];
                        cyc.push_back(u);
                    }
                    return cyc;
                }
            } else {
                call.pop_back();
            }
        }
        return {};
    }

    std::vector<Fragment> fragments() {
        std::vector<Fragment> out;
        // chords: unembedded edges between H-vertices
        for (int u = 0; u < n; ++u) {
            if (!in_h[u]) continue;
            for (int v : adj[u]) {
                if (v < u || !in_h[v] || edge_embedded(u, v)) continue;
                Fragment f;
                f.attachments = {u, v};
                f.path = {u, v};
                out.push_back(std::move(f));
            }
        }
        // components of G - V(H) with their attachment edges
        std::vector<int> comp(n, -1);
        int nc = 0;
        for (int v = 0; v < n; ++v) {
            if (in_h[v] || comp[v] >= 0) continue;
            std::deque<int> queue{v};
            comp[v] = nc;
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                for (int w : adj[u])
                    if (!in_h[w] && comp[w] < 0) {
                        comp[w] = nc;
                        queue.push_back(w);
                    }
            }
            ++nc;
        }
        for (int c = 0; c < nc; ++c) {
            Fragment f;
            std::set<int> attach;
            for (int v = 0; v < n; ++v) {
                if (comp[v] != c) continue;
                for (int w : adj[v])
                    if (in_h[w]) attach.insert(w);
            }
            f.attachments.assign(attach.begin(), attach.end());
            f.path = component_path(comp, c, f.attachments);
            out.push_back(std::move(f));
        }
        for (Fragment& f : out) {
            for (int fi = 0; fi < static_cast<int>(face_walks.size()); ++fi) {
                std::vector<int> verts = face_walks[fi];
                std::sort(verts.begin(), verts.end());
                bool all = true;
                for (int a : f.attachments)
                    if (!std::binary_search(verts.begin(), verts.end(), a)) {
                        all = false;
                        break;
                    }
                if (all) f.admissible_faces.push_back(fi);
            }
        }
        return out;
    }

    std::vector<int> component_path(const std::vector<int>& comp, int c,
                                    const std::vector<int>& attachments) const {
        if (attachments.size() < 2)
            throw std::logic_error("planarity: fragment with < 2 attachments in biconnected block");
        int start = attachments.front();
        std::vector<int> parent(n, -1);
        std::deque<int> queue;
        for (int w : adj[start])
            if (!in_h[w] && comp[w] == c && parent[w] < 0) {
                parent[w] = start;
                queue.push_back(w);
            }
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj[u]) {
                if (in_h[w]) {
                    if (w != start) {
                        std::vector<int> path{w, u};
                        int x = u;
                        while (x != start) {
                            x = parent[x];
                            path.push_back(x);
                        }
                        std::reverse(path.begin(), path.end());
                        return path;
                    }
                } else if (comp[w] == c && parent[w] < 0) {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        throw std::logic_error("planarity: component fragment reaches only one attachment");
    }

    void embed_path(const std::vector<int>& path, int face_idx) {
        const int a = path.front(), b = path.back();
        std::vector<int>& w = face_walks[face_idx];
        const int len = static_cast<int>(w.size());
        int ia = -1, ib = -1;
        for (int i = 0; i < len; ++i) {
            if (w[i] == a) ia = i;
            if (w[i] == b) ib = i;
        }
        if (ia < 0 || ib < 0) throw std::logic_error("planarity: endpoints not on face");
        std::vector<int> f1(path.begin(), path.end());
        for (int i = (ib + 1) % len; i != ia; i = (i + 1) % len) f1.push_back(w[i]);
        std::vector<int> f2(path.rbegin(), path.rend());
        for (int i = (ia + 1) % len; i != ib; i = (i + 1) % len) f2.push_back(w[i]);
        face_walks[face_idx] = std::move(f1);
        face_walks.push_back(std::move(f2));
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            int u = path[i], v = path[i + 1];
            h_edges.insert({std::min(u, v), std::max(u, v)});
        }
        for (int v : path) in_h[v] = 1;
    }

    // Corner (prev, v, next) of a face walk fixes succ(prev) = next in the
    // rotation at v; chaining the map yields the rotation cycle.
    std::vector<std::vector<int>> build_rotations() const {
        std::vector<std::vector<std::pair<int, int>>> succ(n);
        for (const auto& w : face_walks) {
            const int len = static_cast<int>(w.size());
            for (int i = 0; i < len; ++i) {
                int prev = w[(i - 1 + len) % len], v = w[i], next = w[(i + 1) % len];
                succ[v].emplace_back(prev, next);
            }
        }
        std::vector<std::vector<int>> rot(n);
        for (int v = 0; v < n; ++v) {
            if (adj[v].empty()) continue;
            int start = adj[v].front();
            int cur = start;
            do {
                rot[v].push_back(cur);
                int nxt = -1;
                for (auto [p, s] : succ[v])
                    if (p == cur) {
                        nxt = s;
                        break;
                    }
                if (nxt < 0) throw std::logic_error("planarity: broken corner chain");
                cur = nxt;
            } while (cur != start && static_cast<int>(rot[v].size()) <= static_cast<int>(adj[v].size()));
            if (rot[v].size() != adj[v].size())
                throw std::logic_error("planarity: rotation does not close");
        }
        return rot;
    }
};

// Embeds one block; local labels. nullopt = nonplanar.
std::optional<std::vector<std::vector<int>>> embed_block(const std::vector<std::pair<int, int>>& edges,
                                                         std::vector<int>& to_global) {
    std::vector<int> verts;
    for (auto [u, v] : edges) {
        verts.push_back(u);
        verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    to_global = verts;
    if (edges.size() == 1) return std::vector<std::vector<int>>{{1}, {0}};

    std::vector<int> local(verts.back() + 1, -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[i]] = i;

    BlockEmbedder be;
    be.n = static_cast<int>(verts.size());
    be.adj.assign(be.n, {});
    for (auto [u, v] : edges) {
        be.adj[local[u]].push_back(local[v]);
        be.adj[local[v]].push_back(local[u]);
    }
    for (auto& a : be.adj) std::sort(a.begin(), a.end());
    return be.embed();
}

std::optional<EmbeddedGraph> planar_embedding_connected(const Graph& g) {
    const int n = g.order();
    if (n >= 3 && g.size() > 3 * n - 6) return std::nullopt;
    std::vector<std::vector<int>> rot(n);
    for (const auto& block : blocks_of(g)) {
        std::vector<int> to_global;
        auto local_rot = embed_block(block, to_global);
        if (!local_rot) return std::nullopt;
        for (int lv = 0; lv < static_cast<int>(local_rot->size()); ++lv)
            for (int lw : (*local_rot)[lv]) rot[to_global[lv]].push_back(to_global[lw]);
    }
    return EmbeddedGraph(g, std::move(rot));
}

std::vector<Graph> components_of(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int v = 0; v < n; ++v) {
        if (comp[v] >= 0) continue;
        std::deque<int> queue{v};
        comp[v] = nc;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u))
                if (comp[w] < 0) {
                    comp[w] = nc;
                    queue.push_back(w);
                }
        }
        ++nc;
    }
    std::vector<Graph> out;
    for (int c = 0; c < nc; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (comp[v] == c) verts.push_back(v);
        std::vector<int> local(n, -1);
        for (int i = 0; i < static_cast<int>(verts.size()); ++i) local[verts[i]] = i;
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges())
            if (comp[u] == c) edges.emplace_back(local[u], local[v]);
        out.emplace_back(static_cast<int>(verts.size()), edges);
    }
    return out;
}

}  // namespace

bool planarity_test(const Graph& g) {
    for (const Graph& comp : components_of(g))
        if (!planar_embedding_connected(comp)) return false;
    return true;
}

namespace {

// Deletes removable edges until every remaining edge is essential, then
// classifies the leftover subdivision.
KuratowskiWitness extract_witness(const Graph& g) {
    auto edges = g.edges();
    std::vector<char> present(edges.size(), 1);
    auto build = [&]() {
        std::vector<std::pair<int, int>> kept;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (present[i]) kept.push_back(edges[i]);
        return Graph(g.order(), kept);
    };
    for (std::size_t i = 0; i < edges.size(); ++i) {
        present[i] = 0;
        if (planarity_test(build())) present[i] = 1;
    }
    Graph k = build();
    KuratowskiWitness w;
    w.edges = k.edges();
    int branch = 0, deg3 = 0, deg4 = 0;
    for (int v = 0; v < k.order(); ++v) {
        if (k.degree(v) >= 3) ++branch;
        if (k.degree(v) == 3) ++deg3;
        if (k.degree(v) == 4) ++deg4;
    }
    if (branch == 5 && deg4 == 5)
        w.kind = KuratowskiWitness::Kind::K5;
    else if (branch == 6 && deg3 == 6)
        w.kind = KuratowskiWitness::Kind::K33;
    else
        throw std::logic_error("planarity: minimal nonplanar subgraph is not a Kuratowski subdivision");
    return w;
}

}  // namespace

PlanarityResult is_planar(const Graph& g) {
    if (components_of(g).size() > 1)
        throw std::invalid_argument("is_planar: input must be connected");
    PlanarityResult res;
    auto emb = planar_embedding_connected(g);
    if (emb) {
        if (!euler_holds(*emb)) throw std::logic_error("is_planar: embedding fails Euler");
        res.planar = true;
        res.embedding = std::move(emb);
        return res;
    }
    res.planar = false;
    if (g.order() <= 16) res.witness = extract_witness(g);
    return res;
}

}  // namespace poly
