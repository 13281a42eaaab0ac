#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bisectlab/graph.hpp"
#include "bisectlab/structure.hpp"

namespace bisectlab {

// Named graphs and the explicit graph families. Constructors validate the
// documented structural facts and throw on mismatch, so a wiring mistake
// fails loudly instead of silently corrupting a scan.

inline CubicGraph complete_k4() {
    return CubicGraph(SimpleGraph::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
}

inline CubicGraph complete_bipartite_k33() {
    std::vector<std::pair<int, int>> es;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) es.emplace_back(a, b);
    return CubicGraph(SimpleGraph::from_pairs(6, es));
}

// Circular ladder C_m x K2 on 2m vertices: 0..m-1 outer, m..2m-1 inner.
inline CubicGraph prism(int m) {
    if (m < 3) throw std::invalid_argument("prism: need m >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < m; ++i) {
        es.emplace_back(i, (i + 1) % m);
        es.emplace_back(m + i, m + (i + 1) % m);
        es.emplace_back(i, m + i);
    }
    return CubicGraph(SimpleGraph::from_pairs(2 * m, es));
}

// Petersen graph as GP(5,2): outer 0..4, inner 5..9, spokes i -- 5+i,
// inner chords 5+i -- 5+((i+2) mod 5).
inline CubicGraph petersen() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, 5 + i);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    CubicGraph g(SimpleGraph::from_pairs(10, es));
    if (girth(g.graph()) != 5 || diameter(g.graph()) != 2)
        throw std::logic_error("petersen: construction failed validation");
    return g;
}

// Heawood graph via LCF [5,-5]^7: Hamiltonian cycle 0..13 plus chords
// i -> i+5 from even i. Bipartite, girth 6, diameter 3.
inline CubicGraph heawood() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 14; ++i) es.emplace_back(i, (i + 1) % 14);
    for (int i = 0; i < 14; i += 2) es.emplace_back(i, (i + 5) % 14);
    CubicGraph g(SimpleGraph::from_pairs(14, es));
    if (!is_bipartite(g.graph()) || girth(g.graph()) != 6 || diameter(g.graph()) != 3)
        throw std::logic_error("heawood: construction failed validation");
    return g;
}

}  // namespace bisectlab
