#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "bisectlab/enumerate.hpp"
#include "bisectlab/graph6.hpp"
#include "test_helpers.hpp"

using namespace bisectlab;

TEST_CASE("connected cubic graph counts", "[enumerate]") {
    CHECK(count_cubic(4, true) == 1);
    CHECK(count_cubic(6, true) == 2);
    CHECK(count_cubic(8, true) == 5);
    CHECK(count_cubic(10, true) == 19);
    CHECK(count_cubic(12, true) == 85);
}

TEST_CASE("cubic graph counts including disconnected", "[enumerate]") {
    CHECK(count_cubic(8, false) == 6);
    CHECK(count_cubic(10, false) == 21);
    CHECK(count_cubic(12, false) == 94);
}

TEST_CASE("enumeration matches the naive pairwise-isomorphism oracle", "[enumerate]") {
    for (int n : {4, 6, 8, 10}) {
        auto oracle = testing::naive_cubic_classes(n, true);
        auto ours = enumerate_cubic_sorted(n, true);
        REQUIRE(ours.size() == oracle.size());
        // Every oracle class is hit exactly once.
        std::set<CanonicalCode> codes;
        for (const auto& g : ours) codes.insert(canonical_code(g.graph()));
        REQUIRE(codes.size() == ours.size());
        for (const auto& rep : oracle) {
            bool found = false;
            for (const auto& g : ours)
                if (testing::brute::isomorphic(rep, g.graph())) {
                    found = true;
                    break;
                }
            REQUIRE(found);
        }
    }
}

// Same oracle at n = 12; slower, excluded from the default run.
TEST_CASE("enumeration matches the naive oracle at order 12", "[.][slow]") {
    auto oracle = testing::naive_cubic_classes(12, true);
    CHECK(oracle.size() == count_cubic(12, true));
}

TEST_CASE("emitted graphs are canonical representatives in sorted order", "[enumerate]") {
    auto graphs = enumerate_cubic_sorted(10, true);
    std::vector<CanonicalCode> codes;
    for (const auto& g : graphs) {
        CHECK(is_max_adjacency_rep(g.graph()));
        codes.push_back(canonical_code(g.graph()));
    }
    CHECK(std::is_sorted(codes.begin(), codes.end()));
}

TEST_CASE("enumeration is deterministic", "[enumerate]") {
    std::vector<std::string> first, second;
    enumerate_cubic(8, true, [&](const CubicGraph& g) {
        first.push_back(write_graph6(g.graph()));
        return true;
    });
    enumerate_cubic(8, true, [&](const CubicGraph& g) {
        second.push_back(write_graph6(g.graph()));
        return true;
    });
    CHECK(first == second);
}

TEST_CASE("enumeration argument errors", "[enumerate]") {
    CHECK_THROWS_AS(count_cubic(7, true), std::invalid_argument);
    CHECK_THROWS_AS(count_cubic(22, true), std::invalid_argument);  // default ceiling 20
}
