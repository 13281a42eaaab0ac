#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "bisectlab/graph.hpp"

namespace bisectlab {

// Structural predicates used across the toolkit: connectivity, parity-type
// invariants, perfect matchings, and exhaustive 3-edge-colouring.

inline bool is_bipartite(const SimpleGraph& g, std::vector<int>* side_out = nullptr) {
    const int n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbours(v)) {
                if (side[w] == -1) {
                    side[w] = side[v] ^ 1;
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    if (side_out) *side_out = std::move(side);
    return true;
}

// Length of a shortest cycle, or -1 for forests. BFS from every vertex.
inline int girth(const SimpleGraph& g) {
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbours(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (w != parent[v]) {
                    int len = dist[v] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

inline int diameter(const SimpleGraph& g) {
    const int n = g.vertex_count();
    int best = 0;
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbours(v))
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    best = std::max(best, dist[w]);
                    q.push(w);
                }
        }
        for (int v = 0; v < n; ++v)
            if (dist[v] == -1) return -1;  // disconnected
    }
    return best;
}

namespace detail {

inline bool connected_avoiding(const SimpleGraph& g, std::uint64_t removed) {
    const int n = g.vertex_count();
    int start = -1, expected = 0;
    for (int v = 0; v < n; ++v)
        if (!(removed >> v & 1)) {
            if (start == -1) start = v;
            ++expected;
        }
    if (start == -1) return true;
    std::uint64_t seen = std::uint64_t{1} << start;
    std::vector<int> stack{start};
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbours(v)) {
            if (removed >> w & 1) continue;
            if (!(seen >> w & 1)) {
                seen |= std::uint64_t{1} << w;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == expected;
}

}  // namespace detail

// Vertex connectivity capped at 3 (all we need for cubic graphs):
// 0 = disconnected, else smallest k <= 2 whose removal disconnects, else 3.
inline int vertex_connectivity(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return 0;
    if (!g.connected()) return 0;
    if (n <= 3) return n - 1;
    for (int v = 0; v < n; ++v)
        if (!detail::connected_avoiding(g, std::uint64_t{1} << v)) return 1;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w)
            if (!detail::connected_avoiding(g, (std::uint64_t{1} << v) | (std::uint64_t{1} << w)))
                return 2;
    return 3;
}

namespace detail {

inline bool match_rest(const SimpleGraph& g, std::uint64_t matched) {
    const int n = g.vertex_count();
    int u = -1;
    for (int v = 0; v < n; ++v)
        if (!(matched >> v & 1)) {
            u = v;
            break;
        }
    if (u == -1) return true;
    for (int w : g.neighbours(u)) {
        if (matched >> w & 1) continue;
        if (match_rest(g, matched | (std::uint64_t{1} << u) | (std::uint64_t{1} << w))) return true;
    }
    return false;
}

}  // namespace detail

// Exhaustive matching search; branching on the lowest unmatched vertex keeps
// the tree at most 3-ary for cubic graphs, which is plenty at desk scale.
inline bool has_perfect_matching(const SimpleGraph& g) {
    if (g.vertex_count() % 2 != 0) return false;
    return detail::match_rest(g, 0);
}

inline bool has_perfect_matching(const CubicGraph& g) { return has_perfect_matching(g.graph()); }

namespace detail {

inline bool colour_edges_3(const CubicGraph& g, EdgeColouring3& col, int coloured) {
    const int m = g.edge_count();
    if (coloured == m) return true;
    // Most-constrained edge first: fewest admissible colours, then index.
    int best = -1, best_free = 4;
    for (int e = 0; e < m; ++e) {
        if (col[e] != -1) continue;
        int used = 0;
        const Edge& ed = g.edge(e);
        for (int f : g.incident_edges(ed.u))
            if (col[f] >= 0) used |= 1 << col[f];
        for (int f : g.incident_edges(ed.v))
            if (col[f] >= 0) used |= 1 << col[f];
        int free = 3 - __builtin_popcount(used & 7);
        if (free == 0) return false;
        if (free < best_free) {
            best_free = free;
            best = e;
            if (free == 1) break;
        }
    }
    const Edge& ed = g.edge(best);
    int used = 0;
    for (int f : g.incident_edges(ed.u))
        if (col[f] >= 0) used |= 1 << col[f];
    for (int f : g.incident_edges(ed.v))
        if (col[f] >= 0) used |= 1 << col[f];
    for (int c = 0; c < 3; ++c) {
        if (used >> c & 1) continue;
        col[best] = static_cast<std::int8_t>(c);
        if (colour_edges_3(g, col, coloured + 1)) return true;
        col[best] = -1;
    }
    return false;
}

}  // namespace detail

// Proper 3-edge-colouring by exhaustive backtracking. Absence is a proof:
// the search fixes the three edges at vertex 0 to colours 0,1,2 (colour
// classes are interchangeable) and explores everything else.
inline std::optional<EdgeColouring3> proper_3_edge_colouring(const CubicGraph& g) {
    const int m = g.edge_count();
    EdgeColouring3 col(m, -1);
    if (g.vertex_count() == 0) return col;
    const auto& inc = g.incident_edges(0);
    for (int i = 0; i < 3; ++i) col[inc[i]] = static_cast<std::int8_t>(i);
    if (detail::colour_edges_3(g, col, 3)) return col;
    return std::nullopt;
}

}  // namespace bisectlab
