#include "poly/generator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "poly/invariants.hpp"
#include "poly/parallel.hpp"

namespace poly {

bool Filters::admits_output(const EmbeddedGraph& eg) const {
    if (max_order && eg.order() > *max_order) return false;
    if (cubic_only && !is_k_regular(eg.graph(), 3)) return false;
    return true;
}

EmbeddedGraph level_member(const SizeLevel& level, std::size_t i) {
    if (level.materialized()) return level.graphs[i];
    return canonical_representative(level.codes[i]);
}

EmbeddedGraph pyramid(int n) {
    if (n < 3) throw std::invalid_argument("pyramid: need n >= 3");
    // rim 0..n-1, apex n
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, n);
    }
    Graph g(n + 1, edges);
    std::vector<std::pair<double, double>> pos(n + 1);
    for (int i = 0; i < n; ++i) {
        double a = 2.0 * std::numbers::pi * i / n;
        pos[i] = {std::cos(a), std::sin(a)};
    }
    pos[n] = {0.0, 0.0};
    return embed_from_points(g, pos);
}

namespace {

// Insert `nb` into the rotation at `v` immediately after `after`.
void rotation_insert_after(std::vector<int>& rot, int after, int nb) {
    for (std::size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == after) {
            rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(i) + 1, nb);
            return;
        }
    throw std::logic_error("rotation_insert_after: anchor not found");
}

}  // namespace

std::vector<EmbeddedGraph> face_edge_additions(const EmbeddedGraph& eg) {
    const Graph& g = eg.graph();
    std::vector<EmbeddedGraph> children;
    for (const auto& walk : faces(eg)) {
        const int len = static_cast<int>(walk.size());
        for (int i = 0; i < len; ++i)
            for (int j = i + 1; j < len; ++j) {
                int a = walk[i], b = walk[j];
                if (a == b || g.has_edge(a, b)) continue;
                auto rot = eg.rotation();
                // predecessors of a and b along the face walk are the anchors
                rotation_insert_after(rot[a], walk[(i - 1 + len) % len], b);
                rotation_insert_after(rot[b], walk[(j - 1 + len) % len], a);
                children.emplace_back(g.with_edge(a, b), std::move(rot));
            }
    }
    return children;
}

std::vector<EmbeddedGraph> vertex_splits(const EmbeddedGraph& eg) {
    std::vector<EmbeddedGraph> children;
    for (const EmbeddedGraph& child : face_edge_additions(dual(eg)))
        children.push_back(dual(child));
    return children;
}

namespace {

// Deterministic map of code -> canonical representative for one worker.
using CodeMap = std::map<Code, char>;

SizeLevel build_level(int q, const SizeLevel* prev, const EnumerateOptions& opts) {
    CodeMap codes;
    std::mutex merge_mutex;

    auto consider = [&](CodeMap& local, const EmbeddedGraph& child) {
        if (!opts.filters.admits_expansion(child)) return;
        local.emplace(canonical_code(child), 0);
    };

    if (q % 2 == 0 && q >= 6) {
        CodeMap local;
        consider(local, pyramid(q / 2));
        codes.merge(local);
    }
    if (prev) {
        parallel_chunks(prev->graphs.size(), opts.jobs, [&](int, std::size_t begin, std::size_t end) {
            CodeMap local;
            for (std::size_t i = begin; i < end; ++i) {
                const EmbeddedGraph& parent = prev->graphs[i];
                for (const EmbeddedGraph& child : face_edge_additions(parent)) consider(local, child);
                for (const EmbeddedGraph& child : vertex_splits(parent)) consider(local, child);
            }
            std::lock_guard<std::mutex> lock(merge_mutex);
            codes.merge(local);
        });
    }

    SizeLevel level;
    level.size = q;
    level.complete = true;
    level.graphs.reserve(codes.size());
    level.codes.reserve(codes.size());
    for (const auto& [code, unused] : codes) {
        level.codes.push_back(code);
        level.graphs.push_back(canonical_representative(code));
    }
    return level;
}

SizeLevel level_from_graphs(int q, std::vector<EmbeddedGraph> graphs) {
    // cache loads arrive as canonical representatives; re-derive codes
    std::map<Code, EmbeddedGraph> sorted;
    for (auto& eg : graphs) sorted.emplace(canonical_code(eg), std::move(eg));
    SizeLevel level;
    level.size = q;
    level.complete = true;
    for (auto& [code, eg] : sorted) {
        level.codes.push_back(code);
        level.graphs.push_back(std::move(eg));
    }
    return level;
}

}  // namespace

void enumerate_by_size(int q_max, const EnumerateOptions& opts,
                       const std::function<void(const SizeLevel&)>& sink) {
    if (q_max < 6) throw std::invalid_argument("enumerate_by_size: q_max must be >= 6");
    SizeLevel prev;
    for (int q = 6; q <= q_max; ++q) {
        SizeLevel level;
        bool from_cache = false;
        if (opts.cache) {
            if (auto cached = opts.cache->load(q)) {
                level = level_from_graphs(q, std::move(*cached));
                from_cache = true;
            }
        }
        if (!from_cache) {
            level = build_level(q, q == 6 ? nullptr : &prev, opts);
            if (opts.cache) opts.cache->store(q, level.graphs);
        }
        sink(level);
        prev = std::move(level);
    }
}

void expand_candidates(const SizeLevel& prev, int next_size, const Filters& filters, int jobs,
                       const std::function<bool(const EmbeddedGraph&)>& keep,
                       const std::function<void(const EmbeddedGraph&, const Code&)>& visit) {
    std::mutex sink_mutex;
    auto offer = [&](const EmbeddedGraph& child) {
        if (!filters.admits_expansion(child)) return;
        if (!keep(child)) return;
        Code code = canonical_code(child);
        std::lock_guard<std::mutex> lock(sink_mutex);
        visit(child, code);
    };
    if (next_size % 2 == 0 && next_size >= 6) offer(pyramid(next_size / 2));
    parallel_chunks(prev.count(), jobs, [&](int, std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            EmbeddedGraph parent = level_member(prev, i);
            for (const EmbeddedGraph& child : face_edge_additions(parent)) offer(child);
            for (const EmbeddedGraph& child : vertex_splits(parent)) offer(child);
        }
    });
}

std::vector<EmbeddedGraph> output_projection(const SizeLevel& level, const Filters& filters) {
    std::vector<EmbeddedGraph> out;
    for (std::size_t i = 0; i < level.count(); ++i) {
        EmbeddedGraph eg = level_member(level, i);
        if (filters.admits_output(eg)) out.push_back(std::move(eg));
    }
    return out;
}

}  // namespace poly
