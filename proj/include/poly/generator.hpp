#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "poly/embedding.hpp"
#include "poly/io.hpp"

namespace poly {

/// Output/expansion restrictions for enumeration.
///
///  - max_order prunes both expansion and emission: neither move decreases
///    the vertex count, so every 3-polytope within the cap keeps a parent
///    within the cap and the capped universe stays exhaustive.
///  - cubic_only is output-only: cubic graphs can have non-cubic ancestors,
///    so it never restricts expansion.
struct Filters {
    std::optional<int> max_order;
    bool cubic_only = false;

    bool admits_expansion(const EmbeddedGraph& eg) const {
        return !max_order || eg.order() <= *max_order;
    }
    bool admits_output(const EmbeddedGraph& eg) const;
};

/// All 3-polytopes of one size, canonically deduplicated. codes is the
/// authoritative sorted list; graphs holds the aligned canonical
/// representatives and may be left empty for large levels, in which case
/// members are decoded on demand.
struct SizeLevel {
    int size = 0;
    std::vector<EmbeddedGraph> graphs;
    std::vector<Code> codes;
    bool complete = false;

    std::size_t count() const { return codes.size(); }
    bool materialized() const { return graphs.size() == codes.size(); }
};

/// Member i, decoding from the code when graphs are not materialized.
EmbeddedGraph level_member(const SizeLevel& level, std::size_t i);

/// Wheel on n+1 vertices: apex joined to an n-cycle; size 2n; self-dual.
EmbeddedGraph pyramid(int n);

/// For every face and every non-adjacent vertex pair on it, the graph with
/// that diagonal added, splitting the face. Children have size q+1 and stay
/// polyhedral. Empty when every face is a triangle.
std::vector<EmbeddedGraph> face_edge_additions(const EmbeddedGraph& eg);

/// The dual move: dual . face_edge_additions . dual. Children have size q+1
/// and one more vertex.
std::vector<EmbeddedGraph> vertex_splits(const EmbeddedGraph& eg);

struct EnumerateOptions {
    Filters filters;
    int jobs = 0;                    // <= 0: hardware concurrency
    const LevelCache* cache = nullptr;
};

/// Levels q = 6..q_max in ascending order: seeds (pyramids at even sizes)
/// plus face diagonals and vertex splits of the previous level, canonically
/// deduplicated. Every 3-polytope of size <= q_max (within filters.max_order)
/// appears exactly once across the stream.
void enumerate_by_size(int q_max, const EnumerateOptions& opts,
                       const std::function<void(const SizeLevel&)>& sink);

/// Children of one level's parents plus the seed for next_size, without
/// building the deduplicated level; each candidate (possibly repeated) is
/// passed to visit. Used to scan a final level without holding it.
void expand_candidates(const SizeLevel& prev, int next_size, const Filters& filters, int jobs,
                       const std::function<bool(const EmbeddedGraph&)>& keep,
                       const std::function<void(const EmbeddedGraph&, const Code&)>& visit);

std::vector<EmbeddedGraph> output_projection(const SizeLevel& level, const Filters& filters);

}  // namespace poly
