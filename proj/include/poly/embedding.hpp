#pragma once

#include <cstdint>
#include <vector>

#include "poly/graph.hpp"

namespace poly {

/// Canonical form of an embedded graph; lexicographic order is meaningful.
using Code = std::vector<std::uint8_t>;

/// Graph plus a rotation system: a cyclic order of neighbors around each
/// vertex, fixing a combinatorial embedding on the sphere. Faces are traced
/// by the convention next(u,v) = (v, successor of u in the rotation at v).
class EmbeddedGraph {
public:
    EmbeddedGraph() = default;

    /// Each rotation must be a permutation of that vertex's neighbor set.
    EmbeddedGraph(Graph g, std::vector<std::vector<int>> rotation);

    const Graph& graph() const { return graph_; }
    const std::vector<std::vector<int>>& rotation() const { return rotation_; }
    const std::vector<int>& rotation_at(int v) const { return rotation_[v]; }
    int order() const { return graph_.order(); }
    int size() const { return graph_.size(); }

    /// Mirror embedding: every rotation reversed.
    EmbeddedGraph mirrored() const;

private:
    Graph graph_;
    std::vector<std::vector<int>> rotation_;
};

/// Facial walks as closed vertex sequences; every directed edge lies on
/// exactly one walk.
std::vector<std::vector<int>> faces(const EmbeddedGraph& eg);
int face_count(const EmbeddedGraph& eg);

/// order - size + faces == 2; certifies planarity of the embedding
/// (connected graphs).
bool euler_holds(const EmbeddedGraph& eg);

/// Geometric dual: one vertex per face, adjacency across shared edges,
/// rotation induced by the embedding. Throws std::invalid_argument if the
/// dual would contain a loop or a multi-edge (non-3-connected input).
EmbeddedGraph dual(const EmbeddedGraph& eg);

/// Minimum, over all directed start edges and both orientations, of a
/// breadth-first traversal code of the rotation system. Two polyhedral
/// embedded graphs get equal codes iff their graphs are isomorphic
/// (unique embedding of 3-connected planar graphs, up to reflection).
Code canonical_code(const EmbeddedGraph& eg);

/// Rebuilds the relabeled embedded graph a canonical code describes.
EmbeddedGraph canonical_representative(const Code& code);

/// Polyhedral inputs only: equality of canonical codes.
bool is_isomorphic(const EmbeddedGraph& g, const EmbeddedGraph& h);

/// Permutation search with degree pruning; cross-check for order <= 10.
bool brute_force_isomorphic(const Graph& g, const Graph& h);

/// K2 x C_m with its polyhedral embedding (two m-gons joined by rungs).
EmbeddedGraph circular_prism(int m);

/// The 2(r-1)-gonal prism K2 x C_{2(r-1)}, r >= 3: order 4(r-1),
/// size 6(r-1), two 2(r-1)-gonal faces and 2(r-1) quadrilaterals.
EmbeddedGraph prism(int r);

/// Rotation system of a straight-line planar drawing: neighbors sorted by
/// angle around each vertex.
EmbeddedGraph embed_from_points(const Graph& g,
                                const std::vector<std::pair<double, double>>& pos);

}  // namespace poly
