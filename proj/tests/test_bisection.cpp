#include <catch2/catch_amalgamated.hpp>

#include "bisectlab/bisection.hpp"
#include "bisectlab/enumerate.hpp"
#include "bisectlab/families.hpp"
#include "bisectlab/structure.hpp"
#include "test_helpers.hpp"

using namespace bisectlab;

namespace {

// Reference colourings of the Petersen graph in the GP(5,2) labelling
// (outer 0..4, inner 5..9).
const Bisection kPetersen3Bisection{{0, 0, 0, 1, 1, 1, 1, 1, 0, 0}};

}  // namespace

TEST_CASE("verify_k_bisection checks balance then component orders", "[bisection]") {
    auto p = petersen();
    CHECK(verify_k_bisection(p, kPetersen3Bisection, 3).ok);
    CHECK_FALSE(verify_k_bisection(p, kPetersen3Bisection, 2).ok);

    auto k4 = complete_k4();
    CHECK(verify_k_bisection(k4, Bisection{{0, 0, 1, 1}}, 2).ok);

    auto unbalanced = verify_k_bisection(k4, Bisection{{0, 0, 0, 1}}, 4);
    CHECK_FALSE(unbalanced.ok);
    CHECK(unbalanced.reason.find("unbalanced") != std::string::npos);

    auto too_big = verify_k_bisection(k4, Bisection{{0, 0, 1, 1}}, 1);
    CHECK_FALSE(too_big.ok);
    CHECK(too_big.witness_component.size() == 2);

    CHECK_THROWS_AS(verify_k_bisection(k4, Bisection{{0, 1}}, 2), std::invalid_argument);
}

TEST_CASE("Petersen admits a 3-bisection but no 2-bisection", "[bisection]") {
    auto p = petersen();
    auto none = find_k_bisection(p, 2);
    CHECK(none.status == SearchStatus::Absent);

    auto some = find_k_bisection(p, 3);
    REQUIRE(some.status == SearchStatus::Found);
    CHECK(verify_k_bisection(p, some.witness->bisection, 3).ok);
}

TEST_CASE("K33 splits into independent sets", "[bisection]") {
    auto found = find_k_bisection(complete_bipartite_k33(), 1);
    REQUIRE(found.status == SearchStatus::Found);
    for (int order : found.witness->black_component_orders) CHECK(order == 1);
}

TEST_CASE("two_bisection_from_3ec always verifies", "[bisection]") {
    for (auto g : {complete_k4(), complete_bipartite_k33(), prism(3), prism(5), heawood()}) {
        auto ec = proper_3_edge_colouring(g);
        REQUIRE(ec.has_value());
        auto witness = two_bisection_from_3ec(g, *ec);
        CHECK(witness.k == 2);
        CHECK(verify_k_bisection(g, witness.bisection, 2).ok);
    }

    // Improper colouring is rejected.
    auto k4 = complete_k4();
    EdgeColouring3 bad(k4.edge_count(), 0);
    CHECK_THROWS_AS(two_bisection_from_3ec(k4, bad), std::invalid_argument);
}

TEST_CASE("every 3-edge-colourable graph up to order 12 yields a 2-bisection", "[bisection]") {
    for (int n : {4, 6, 8, 10, 12}) {
        enumerate_cubic(n, true, [&](const CubicGraph& g) {
            auto ec = proper_3_edge_colouring(g);
            if (ec) {
                auto witness = two_bisection_from_3ec(g, *ec);
                REQUIRE(verify_k_bisection(g, witness.bisection, 2).ok);
            }
            return true;
        });
    }
}

TEST_CASE("find_k_bisection agrees with brute force over balanced colourings", "[bisection]") {
    for (int n : {4, 6, 8, 10}) {
        enumerate_cubic(n, true, [&](const CubicGraph& g) {
            for (int k : {1, 2, 3}) {
                bool brute_exists = false;
                testing::for_each_balanced_bisection(n, [&](const std::vector<std::uint8_t>& side) {
                    if (verify_k_bisection(g, Bisection{side}, k).ok) {
                        brute_exists = true;
                        return false;
                    }
                    return true;
                });
                auto ours = find_k_bisection(g, k);
                REQUIRE(ours.status == (brute_exists ? SearchStatus::Found : SearchStatus::Absent));
                if (ours) REQUIRE(verify_k_bisection(g, ours.witness->bisection, k).ok);
            }
            return true;
        });
    }
}

TEST_CASE("2-bisections have matching isolated-vertex and isolated-edge counts", "[bisection]") {
    // Counting argument: in every 2-bisection the two parts contain the same
    // number of order-1 and the same number of order-2 components.
    for (int n : {4, 6, 8, 10}) {
        enumerate_cubic(n, true, [&](const CubicGraph& g) {
            testing::for_each_balanced_bisection(n, [&](const std::vector<std::uint8_t>& side) {
                Bisection c{side};
                if (verify_k_bisection(g, c, 2).ok) {
                    auto black = monochromatic_component_orders(g, c, 0);
                    auto white = monochromatic_component_orders(g, c, 1);
                    auto count = [](const std::vector<int>& orders, int what) {
                        return std::count(orders.begin(), orders.end(), what);
                    };
                    REQUIRE(count(black, 1) == count(white, 1));
                    REQUIRE(count(black, 2) == count(white, 2));
                }
                return true;
            });
            return true;
        });
    }
}

TEST_CASE("budgeted search reports inconclusive rather than absent", "[bisection]") {
    auto p = petersen();
    // A zero-millisecond budget trips immediately.
    auto r = find_k_bisection(p, 2, SearchBudget::with_millis(1));
    CHECK(r.status != SearchStatus::Found);
}
