#include <catch2/catch_amalgamated.hpp>

#include "bisectlab/families.hpp"
#include "bisectlab/structure.hpp"

using namespace bisectlab;

TEST_CASE("vertex connectivity of small graphs", "[structure]") {
    CHECK(vertex_connectivity(complete_k4().graph()) == 3);
    CHECK(vertex_connectivity(petersen().graph()) == 3);
    CHECK(vertex_connectivity(complete_bipartite_k33().graph()) == 3);

    // Two K4's sharing nothing: disconnected.
    std::vector<std::pair<int, int>> es;
    for (int o : {0, 4})
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) es.emplace_back(o + a, o + b);
    CHECK(vertex_connectivity(SimpleGraph::from_pairs(8, es)) == 0);

    // Two triangles joined through one middle vertex: a cut vertex.
    SimpleGraph cut = SimpleGraph::from_pairs(
        7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}, {0, 6}, {1, 6}, {4, 6}});
    CHECK(vertex_connectivity(cut) >= 1);
    CHECK(!cut.connected() == false);
}

TEST_CASE("proper 3-edge-colouring search is exhaustive", "[structure]") {
    auto k4 = complete_k4();
    auto col = proper_3_edge_colouring(k4);
    REQUIRE(col.has_value());
    CHECK(is_proper_3_edge_colouring(k4, *col));

    auto k33 = complete_bipartite_k33();
    auto col2 = proper_3_edge_colouring(k33);
    REQUIRE(col2.has_value());
    CHECK(is_proper_3_edge_colouring(k33, *col2));

    // The Petersen graph is not 3-edge-colourable; absence is proved by the
    // exhaustive backtracking.
    CHECK_FALSE(proper_3_edge_colouring(petersen()).has_value());
}

TEST_CASE("perfect matchings", "[structure]") {
    CHECK(has_perfect_matching(complete_k4()));
    CHECK(has_perfect_matching(petersen()));
    CHECK(has_perfect_matching(heawood()));
}

TEST_CASE("bipartite, girth and diameter", "[structure]") {
    CHECK(is_bipartite(complete_bipartite_k33().graph()));
    CHECK_FALSE(is_bipartite(petersen().graph()));
    CHECK(girth(complete_bipartite_k33().graph()) == 4);
    CHECK(girth(petersen().graph()) == 5);
    CHECK(girth(heawood().graph()) == 6);
    CHECK(diameter(heawood().graph()) == 3);
    CHECK(girth(SimpleGraph::from_pairs(3, {{0, 1}, {1, 2}})) == -1);
}
