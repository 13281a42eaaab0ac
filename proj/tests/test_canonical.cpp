#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bisectlab/canonical.hpp"
#include "bisectlab/families.hpp"
#include "test_helpers.hpp"

using namespace bisectlab;

namespace {

// Petersen as the Kneser graph K(5,2): vertices are 2-subsets of {0..4},
// adjacent iff disjoint. Independent of the GP(5,2) construction.
SimpleGraph petersen_kneser() {
    std::vector<std::pair<int, int>> subsets;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j) {
            auto [a, b] = subsets[i];
            auto [c, d] = subsets[j];
            if (a != c && a != d && b != c && b != d) es.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return SimpleGraph::from_pairs(10, es);
}

}  // namespace

TEST_CASE("canonical code is invariant under relabelling", "[canonical]") {
    std::mt19937 rng(7);
    std::vector<SimpleGraph> graphs = {
        complete_k4().graph(),
        complete_bipartite_k33().graph(),
        petersen().graph(),
        heawood().graph(),
        testing::random_cubic(12, rng).graph(),
        testing::random_cubic(14, rng).graph(),
    };
    for (const auto& g : graphs) {
        const CanonicalCode code = canonical_code(g);
        for (int rep = 0; rep < 10000; ++rep) {
            SimpleGraph h = testing::random_relabel(g, rng);
            REQUIRE(canonical_code(h) == code);
        }
    }
}

TEST_CASE("canonical code separates non-isomorphic graphs", "[canonical]") {
    CHECK(canonical_code(complete_bipartite_k33().graph()) != canonical_code(prism(3).graph()));
    CHECK(canonical_code(petersen().graph()) != canonical_code(prism(5).graph()));

    // Agreement with brute-force isomorphism on random pairs.
    std::mt19937 rng(99);
    for (int rep = 0; rep < 200; ++rep) {
        SimpleGraph a = testing::random_cubic(10, rng).graph();
        SimpleGraph b = testing::random_cubic(10, rng).graph();
        CHECK((canonical_code(a) == canonical_code(b)) == testing::brute::isomorphic(a, b));
    }
}

TEST_CASE("two Petersen constructions share a code", "[canonical]") {
    CHECK(canonical_code(petersen().graph()) == canonical_code(petersen_kneser()));
}

TEST_CASE("canonical code parses back to an isomorphic graph", "[canonical]") {
    SimpleGraph g = petersen().graph();
    SimpleGraph round = parse_graph6(canonical_code(g));
    CHECK(testing::brute::isomorphic(g, round));
    CHECK(canonical_code(round) == canonical_code(g));
}

TEST_CASE("find_isomorphism produces a concrete vertex map", "[canonical]") {
    std::mt19937 rng(3);
    SimpleGraph a = petersen().graph();
    SimpleGraph b = testing::random_relabel(a, rng);
    auto map = find_isomorphism(a, b);
    REQUIRE(map.has_value());
    for (const Edge& e : a.edges()) CHECK(b.adjacent((*map)[e.u], (*map)[e.v]));

    CHECK_FALSE(find_isomorphism(a, prism(5).graph()).has_value());
}

TEST_CASE("component signatures of induced subgraphs", "[canonical]") {
    SimpleGraph k4 = complete_k4().graph();
    CHECK(component_signature(k4, {}).empty());

    auto sig = component_signature(k4, {0, 1});
    REQUIRE(sig.size() == 1);
    CHECK(sig[0] == canonical_code(SimpleGraph::from_pairs(2, {{0, 1}})));

    // Two disjoint edges of the 6-cycle.
    SimpleGraph c6 = SimpleGraph::from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    auto sig2 = component_signature(c6, {0, 1, 3, 4});
    REQUIRE(sig2.size() == 2);
    CHECK(sig2[0] == sig2[1]);
    CHECK(sig2[0] == canonical_code(SimpleGraph::from_pairs(2, {{0, 1}})));
}

TEST_CASE("max-adjacency representative test", "[canonical]") {
    // K4 with identity labels is its own maximum.
    CHECK(is_max_adjacency_rep(complete_k4().graph()));

    // A labelled path 0-2-1 is beaten by 0-1-2.
    SimpleGraph bad = SimpleGraph::from_pairs(3, {{0, 2}, {2, 1}});
    CHECK_FALSE(is_max_adjacency_rep(bad));
    SimpleGraph good = SimpleGraph::from_pairs(3, {{0, 1}, {0, 2}});
    CHECK(is_max_adjacency_rep(good));
}
