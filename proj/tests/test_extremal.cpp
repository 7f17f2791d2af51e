#include <doctest.h>

#include "poly/extremal.hpp"

using namespace poly;

TEST_CASE("hypotheses hold at every root of the hexagonal prism") {
    Graph g = prism(4).graph();
    for (int root = 0; root < g.order(); ++root) {
        HypothesisReport h = check_hypotheses(g, root);
        CHECK(h.r == 4);
        CHECK(h.radius == 4);
        CHECK(h.applicable);
        CHECK(h.all());
        CHECK(h.layer_sizes == std::vector<int>{1, 3, 4, 3, 1});
    }
}

TEST_CASE("hypotheses on the cube: h3 vacuous at r=3") {
    Graph g = prism(3).graph();
    for (int root = 0; root < g.order(); ++root) {
        HypothesisReport h = check_hypotheses(g, root);
        CHECK(h.r == 3);
        CHECK(h.h1);
        CHECK(h.h2);
        CHECK(h.h3);  // empty range 2..r-2
        CHECK(h.layer_sizes == std::vector<int>{1, 3, 3, 1});
    }
}

TEST_CASE("square pyramid apex: radius below 3, hypotheses not applicable") {
    Graph g = pyramid(4).graph();
    HypothesisReport h = check_hypotheses(g, 4);  // apex
    CHECK(h.r == 1);
    CHECK(h.radius == 1);
    CHECK(h.root_is_central);
    CHECK_FALSE(h.applicable);
}

TEST_CASE("scenario classification on prisms is FIRST") {
    for (int r : {4, 5}) {
        Graph g = prism(r).graph();
        LayerDecomposition ld = bfs_layers(g, 0);
        REQUIRE(ld.ecc == r);
        int sink = ld.layers[r].front();
        DisjointPathsResult dp = disjoint_paths(g, 0, sink, 3);
        REQUIRE(dp.ok());
        REQUIRE(paths_layer_aligned(*dp.paths, ld));
        ScenarioPattern sp = classify_scenario(g, ld, *dp.paths);
        CHECK(sp.pattern == Scenario::First);
        CHECK(sp.first_matches);
        CHECK_FALSE(sp.second_matches);
    }
}

TEST_CASE("scenario classification rejects malformed path systems") {
    Graph g = prism(4).graph();
    LayerDecomposition ld = bfs_layers(g, 0);
    int sink = ld.layers[4].front();
    DisjointPathsResult dp = disjoint_paths(g, 0, sink, 3);
    REQUIRE(dp.ok());
    PathSystem broken = *dp.paths;
    broken.paths.pop_back();
    CHECK_THROWS_AS(classify_scenario(g, ld, broken), std::invalid_argument);
    PathSystem wrong_root = *dp.paths;
    wrong_root.source = 1;
    CHECK_THROWS_AS(classify_scenario(g, ld, wrong_root), std::invalid_argument);
}

TEST_CASE("prism recognition") {
    CHECK(recognize_prism(prism(3).graph()) == 3);          // the cube
    CHECK(recognize_prism(prism(7).graph()) == 7);
    CHECK_FALSE(recognize_prism(dual(prism(3)).graph()).has_value());  // octahedron
    CHECK_FALSE(recognize_prism(pyramid(6).graph()).has_value());
    // K2 x C3 belongs to the prism family but to no radius
    CHECK(prism_cycle_length(circular_prism(3).graph()) == 3);
    CHECK_FALSE(recognize_prism(circular_prism(3).graph()).has_value());
}

TEST_CASE("minimum size at radius 3 is the cube, uniquely") {
    SearchOptions opts;
    ExtremalRecord rec = min_size_for_radius(3, 12, opts);
    REQUIRE_FALSE(rec.exhausted);
    CHECK(rec.min_size == 12);
    CHECK(rec.unique);
    CHECK(rec.prism_match);
    REQUIRE(rec.witnesses.size() == 1);
    CHECK(is_isomorphic(rec.witnesses.front(), prism(3)));
}

TEST_CASE("radius 3 search with cap 11 exhausts") {
    SearchOptions opts;
    ExtremalRecord rec = min_size_for_radius(3, 11, opts);
    CHECK(rec.exhausted);
    CHECK(rec.search_cap == 11);
    CHECK(rec.witnesses.empty());
}

TEST_CASE("uniqueness audit at r=3") {
    SearchOptions opts;
    ExtremalRecord rec = min_size_for_radius(3, 12, opts);
    UniquenessReport rep = verify_uniqueness(rec);
    CHECK(rep.all_consistent);
    CHECK_FALSE(rep.second_scenario_seen);
    REQUIRE(rep.witnesses.size() == 1);
    // the cube is vertex-transitive: every vertex is an eccentric root and
    // satisfies the hypotheses
    CHECK(rep.witnesses.front().roots.size() == 8);
    for (const RootCheck& rc : rep.witnesses.front().roots) {
        CHECK(rc.hypotheses.all());
        CHECK_FALSE(rc.counterexample);
        for (const ScenarioPattern& sp : rc.patterns) CHECK(sp.pattern == Scenario::First);
    }
}

TEST_CASE("a rewired witness breaks the invariants") {
    // take the cube, detach one rung and reattach it as a chord
    Graph cube = prism(3).graph();
    auto edges = cube.edges();
    std::vector<std::pair<int, int>> rewired;
    for (auto e : edges)
        if (e != std::make_pair(0, 4)) rewired.push_back(e);
    rewired.emplace_back(0, 5);
    Graph mutant(8, rewired);
    bool any_pass = false;
    auto [radius, center] = radius_and_center(mutant);
    for (int root : center) {
        HypothesisReport h = check_hypotheses(mutant, root);
        if (h.applicable && h.all() && recognize_prism(mutant).has_value()) any_pass = true;
    }
    CHECK_FALSE(any_pass);
}
