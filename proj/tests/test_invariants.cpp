#include <doctest.h>

#include "poly/embedding.hpp"
#include "poly/generator.hpp"
#include "poly/invariants.hpp"
#include "poly/oracles.hpp"

using namespace poly;

TEST_CASE("bfs layers of the cube are (1,3,3,1)") {
    Graph cube = prism(3).graph();
    for (int root = 0; root < cube.order(); ++root) {
        LayerDecomposition ld = bfs_layers(cube, root);
        CHECK(ld.layer_sizes() == std::vector<int>{1, 3, 3, 1});
        CHECK(ld.layers[0] == std::vector<int>{root});
    }
}

TEST_CASE("bfs layers of the hexagonal prism are (1,3,4,3,1)") {
    Graph p = prism(4).graph();
    for (int root = 0; root < p.order(); ++root)
        CHECK(bfs_layers(p, root).layer_sizes() == std::vector<int>{1, 3, 4, 3, 1});
}

TEST_CASE("bfs layers of K4 are (1,3)") {
    CHECK(bfs_layers(complete_graph(4), 0).layer_sizes() == std::vector<int>{1, 3});
}

TEST_CASE("bfs layers reject disconnected graphs naming an unreached vertex") {
    Graph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK_THROWS_WITH_AS(bfs_layers(two_triangles, 0), doctest::Contains("unreachable"),
                         std::invalid_argument);
}

TEST_CASE("layers partition the vertex set and edges stay within adjacent layers") {
    for (int r = 3; r <= 7; ++r) {
        Graph g = prism(r).graph();
        LayerDecomposition ld = bfs_layers(g, 0);
        int total = 0;
        for (const auto& layer : ld.layers) total += static_cast<int>(layer.size());
        CHECK(total == g.order());
        for (auto [u, v] : g.edges()) CHECK(std::abs(ld.layer_of[u] - ld.layer_of[v]) <= 1);
        // every vertex in layer i >= 1 has a neighbor one layer down
        for (int v = 0; v < g.order(); ++v) {
            if (ld.layer_of[v] == 0) continue;
            bool has_down = false;
            for (int w : g.neighbors(v))
                if (ld.layer_of[w] == ld.layer_of[v] - 1) has_down = true;
            CHECK(has_down);
        }
    }
}

TEST_CASE("eccentricity examples") {
    Graph cube = prism(3).graph();
    for (int v = 0; v < 8; ++v) CHECK(eccentricity(cube, v) == 3);
    Graph oct = prism(5).graph();
    for (int v = 0; v < 16; ++v) CHECK(eccentricity(oct, v) == 5);
    CHECK(eccentricity(path_graph(3), 1) == 1);
}

TEST_CASE("radius and center examples") {
    auto [r3, c3] = radius_and_center(prism(3).graph());
    CHECK(r3 == 3);
    CHECK(c3.size() == 8);  // vertex-transitive
    auto [rk, ck] = radius_and_center(complete_graph(4));
    CHECK(rk == 1);
    CHECK(ck.size() == 4);
    auto [r4, c4] = radius_and_center(prism(4).graph());
    CHECK(r4 == 4);
    CHECK(c4.size() == 12);
}

TEST_CASE("regularity predicate") {
    CHECK(is_k_regular(prism(6).graph(), 3));
    CHECK(is_k_regular(complete_graph(4), 3));
    CHECK_FALSE(is_k_regular(pyramid(4).graph(), 3));  // apex has degree 4
}

TEST_CASE("prism layer profile is (1,3,4,...,4,3,1) with r-3 interior fours") {
    for (int r = 3; r <= 12; ++r) {
        Graph g = prism(r).graph();
        CHECK(g.order() == 4 * (r - 1));
        CHECK(g.size() == 6 * (r - 1));
        CHECK(is_k_regular(g, 3));
        for (int root : {0, r, 2 * (r - 1)}) {
            auto sizes = bfs_layers(g, root % g.order()).layer_sizes();
            std::vector<int> expect{1, 3};
            for (int i = 0; i < r - 3; ++i) expect.push_back(4);
            expect.push_back(3);
            expect.push_back(1);
            CHECK(sizes == expect);
        }
    }
}

TEST_CASE("no edge spans layers differing by 2 or more, over all enumerated polytopes") {
    EnumerateOptions opts;
    enumerate_by_size(11, opts, [&](const SizeLevel& level) {
        for (const EmbeddedGraph& eg : level.graphs) {
            const Graph& g = eg.graph();
            for (int root = 0; root < g.order(); ++root) {
                LayerDecomposition ld = bfs_layers(g, root);
                for (auto [u, v] : g.edges())
                    CHECK(std::abs(ld.layer_of[u] - ld.layer_of[v]) <= 1);
            }
        }
    });
}

TEST_CASE("radius via eccentricity sweep matches the all-pairs oracle") {
    std::vector<Graph> corpus = {prism(3).graph(), prism(4).graph(), pyramid(4).graph(),
                                 pyramid(6).graph(), complete_graph(5), cycle_graph(9),
                                 dual(prism(4)).graph(), path_graph(7)};
    for (const Graph& g : corpus) {
        CHECK(radius_and_center(g).first == oracle_radius(g));
        // diameter never exceeds twice the radius
        CHECK(diameter(g) <= 2 * radius_and_center(g).first);
    }
}

TEST_CASE("distance matrix agrees with Floyd-Warshall") {
    for (const Graph& g : {prism(4).graph(), pyramid(5).graph()})
        CHECK(distance_matrix(g) == floyd_warshall_distances(g));
}
