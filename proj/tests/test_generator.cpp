#include <doctest.h>

#include <map>
#include <set>

#include "poly/extremal.hpp"
#include "poly/generator.hpp"
#include "poly/oracles.hpp"
#include "poly/structure.hpp"

using namespace poly;

namespace {

std::set<Code> code_set(const std::vector<EmbeddedGraph>& graphs) {
    std::set<Code> out;
    for (const auto& g : graphs) out.insert(canonical_code(g));
    return out;
}

std::map<int, SizeLevel> levels_up_to(int q_max, int jobs = 0) {
    std::map<int, SizeLevel> out;
    EnumerateOptions opts;
    opts.jobs = jobs;
    enumerate_by_size(q_max, opts, [&](const SizeLevel& l) { out[l.size] = l; });
    return out;
}

}  // namespace

TEST_CASE("pyramid seeds") {
    EmbeddedGraph tetra = pyramid(3);
    CHECK(tetra.order() == 4);
    CHECK(tetra.size() == 6);
    CHECK(is_isomorphic(dual(tetra), tetra));  // self-dual

    EmbeddedGraph square = pyramid(4);
    CHECK(square.order() == 5);
    CHECK(square.size() == 8);
    CHECK(is_isomorphic(dual(square), square));

    CHECK(pyramid(5).size() == 10);
    CHECK_THROWS_AS(pyramid(2), std::invalid_argument);
}

TEST_CASE("tetrahedron has no face diagonals") {
    CHECK(face_edge_additions(pyramid(3)).empty());
    CHECK(vertex_splits(pyramid(3)).empty());
}

TEST_CASE("square pyramid edge additions give the triangular bipyramid") {
    auto children = face_edge_additions(pyramid(4));
    REQUIRE_FALSE(children.empty());
    auto codes = code_set(children);
    CHECK(codes.size() == 1);  // one diagonal orbit
    EmbeddedGraph child = children.front();
    CHECK(child.size() == 9);
    CHECK(child.order() == 5);
    // triangular bipyramid = dual of the triangular prism; not a prism itself
    CHECK(is_isomorphic(child, dual(circular_prism(3))));
    CHECK_FALSE(prism_cycle_length(child.graph()).has_value());
}

TEST_CASE("square pyramid vertex splits give the triangular prism") {
    auto children = vertex_splits(pyramid(4));
    REQUIRE_FALSE(children.empty());
    auto codes = code_set(children);
    CHECK(codes.size() == 1);
    EmbeddedGraph child = children.front();
    CHECK(child.size() == 9);
    CHECK(child.order() == 6);
    CHECK(prism_cycle_length(child.graph()) == 3);  // K2 x C3
}

TEST_CASE("cube children all have size 13 and stay polyhedral") {
    for (const EmbeddedGraph& child : face_edge_additions(prism(3))) {
        CHECK(child.size() == 13);
        CHECK(euler_holds(child));
        CHECK(vertex_connectivity_at_least(child.graph(), 3));
        PlanarityResult pr = is_planar(child.graph());
        CHECK(pr.planar);
        CHECK(face_count(*pr.embedding) == face_count(child));
    }
}

TEST_CASE("octahedron splits mirror cube edge additions") {
    EmbeddedGraph octa = dual(prism(3));
    auto splits = vertex_splits(octa);
    auto additions = face_edge_additions(prism(3));
    CHECK(splits.size() == additions.size());
    for (const EmbeddedGraph& child : splits) CHECK(child.size() == 13);
    // duality symmetry at the level of isomorphism classes
    std::set<Code> dual_of_splits;
    for (const EmbeddedGraph& child : splits) dual_of_splits.insert(canonical_code(dual(child)));
    CHECK(dual_of_splits == code_set(additions));
}

TEST_CASE("enumeration counts for sizes 6..9 are 1,0,1,2") {
    auto levels = levels_up_to(9);
    CHECK(levels[6].graphs.size() == 1);
    CHECK(levels[7].graphs.size() == 0);
    CHECK(levels[8].graphs.size() == 1);
    CHECK(levels[9].graphs.size() == 2);
    CHECK(is_isomorphic(levels[6].graphs.front(), pyramid(3)));
    CHECK(is_isomorphic(levels[8].graphs.front(), pyramid(4)));
}

TEST_CASE("level 12 contains the cube") {
    auto levels = levels_up_to(12);
    Code cube = canonical_code(prism(3));
    bool found = false;
    for (const Code& c : levels[12].codes)
        if (c == cube) found = true;
    CHECK(found);
}

TEST_CASE("levels are closed under duality and free of duplicates") {
    auto levels = levels_up_to(12);
    for (auto& [q, level] : levels) {
        std::set<Code> codes(level.codes.begin(), level.codes.end());
        CHECK(codes.size() == level.codes.size());
        for (const EmbeddedGraph& g : level.graphs) CHECK(codes.count(canonical_code(dual(g))) == 1);
        // orders stay within the degree-sum bound for 3-connected graphs
        for (const EmbeddedGraph& g : level.graphs) CHECK(3 * g.order() <= 2 * g.size());
    }
}

TEST_CASE("every level member is planar and 3-connected") {
    auto levels = levels_up_to(11);
    for (auto& [q, level] : levels)
        for (const EmbeddedGraph& g : level.graphs) {
            CHECK(euler_holds(g));
            CHECK(vertex_connectivity_at_least(g.graph(), 3));
            PlanarityResult pr = is_planar(g.graph());
            REQUIRE(pr.planar);
            // the oracle's embedding agrees with the generator-maintained one
            CHECK(face_count(*pr.embedding) == face_count(g));
        }
}

TEST_CASE("brute-force isomorphism agrees with code equality on all polytopes of size <= 12") {
    auto levels = levels_up_to(12);
    std::vector<EmbeddedGraph> all;
    for (auto& [q, level] : levels)
        all.insert(all.end(), level.graphs.begin(), level.graphs.end());
    REQUIRE(all.size() == 22);  // 1+0+1+2+2+4+12
    for (const auto& a : all)
        for (const auto& b : all)
            CHECK(is_isomorphic(a, b) == brute_force_isomorphic(a.graph(), b.graph()));
}

TEST_CASE("enumeration is deterministic and independent of worker count") {
    auto a = levels_up_to(11, 1);
    auto b = levels_up_to(11, 4);
    for (int q = 6; q <= 11; ++q) {
        CHECK(a[q].codes == b[q].codes);
        for (std::size_t i = 0; i < a[q].graphs.size(); ++i) {
            CHECK(a[q].graphs[i].graph().edges() == b[q].graphs[i].graph().edges());
            CHECK(a[q].graphs[i].rotation() == b[q].graphs[i].rotation());
        }
    }
}

TEST_CASE("generator matches the brute-force census up to size 11") {
    auto census = brute_force_polyhedral_census(7);
    auto levels = levels_up_to(11);
    for (int q = 6; q <= 11; ++q) {
        std::vector<Code> got = levels[q].codes;
        CHECK(got == census[q]);
    }
}

TEST_CASE("non-pyramid members have a parent under edge deletion, possibly in the dual") {
    auto levels = levels_up_to(12);
    for (int q = 7; q <= 12; ++q) {
        for (const EmbeddedGraph& g : levels[q].graphs) {
            if (q % 2 == 0 && is_isomorphic(g, pyramid(q / 2))) continue;
            bool has_parent = false;
            for (const Graph& candidate : {g.graph(), dual(g).graph()}) {
                for (auto [u, v] : candidate.edges()) {
                    std::vector<std::pair<int, int>> rest;
                    for (auto e : candidate.edges())
                        if (e != std::make_pair(u, v)) rest.push_back(e);
                    Graph parent(candidate.order(), rest);
                    bool min_degree_3 = true;
                    for (int x = 0; x < parent.order(); ++x)
                        if (parent.degree(x) < 3) min_degree_3 = false;
                    if (!min_degree_3) continue;
                    if (!planarity_test(parent)) continue;
                    if (!vertex_connectivity_at_least(parent, 3)) continue;
                    has_parent = true;
                    break;
                }
                if (has_parent) break;
            }
            CHECK(has_parent);
        }
    }
}

TEST_CASE("max-order filter prunes expansion safely") {
    EnumerateOptions plain, capped;
    capped.filters.max_order = 6;
    std::map<int, std::set<Code>> expect, got;
    enumerate_by_size(11, plain, [&](const SizeLevel& l) {
        for (std::size_t i = 0; i < l.graphs.size(); ++i)
            if (l.graphs[i].order() <= 6) expect[l.size].insert(l.codes[i]);
    });
    enumerate_by_size(11, capped, [&](const SizeLevel& l) {
        for (const Code& c : l.codes) got[l.size].insert(c);
    });
    CHECK(got == expect);
}

TEST_CASE("cubic-only filter is an output projection") {
    auto levels = levels_up_to(12);
    Filters cubic;
    cubic.cubic_only = true;
    auto selected = output_projection(levels[12], cubic);
    for (const EmbeddedGraph& g : selected) CHECK(is_k_regular(g.graph(), 3));
    // the cube is cubic and present
    bool cube_found = false;
    for (const EmbeddedGraph& g : selected)
        if (is_isomorphic(g, prism(3))) cube_found = true;
    CHECK(cube_found);
}
