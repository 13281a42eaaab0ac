#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "bisectlab/graph.hpp"

namespace bisectlab::testing {

// Random cubic graph via repeated edge insertion with restart on dead ends.
inline CubicGraph random_cubic(int n, std::mt19937& rng) {
    for (;;) {
        std::vector<int> deg(n, 0);
        std::vector<std::uint64_t> mask(n, 0);
        std::vector<Edge> edges;
        bool dead = false;
        while (static_cast<int>(edges.size()) < 3 * n / 2) {
            std::vector<std::pair<int, int>> options;
            for (int u = 0; u < n; ++u) {
                if (deg[u] == 3) continue;
                for (int v = u + 1; v < n; ++v)
                    if (deg[v] < 3 && !(mask[u] >> v & 1)) options.emplace_back(u, v);
            }
            if (options.empty()) {
                dead = true;
                break;
            }
            auto [u, v] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
            edges.emplace_back(u, v);
            mask[u] |= std::uint64_t{1} << v;
            mask[v] |= std::uint64_t{1} << u;
            ++deg[u];
            ++deg[v];
        }
        if (!dead) return CubicGraph(SimpleGraph(n, std::move(edges)));
    }
}

inline SimpleGraph random_relabel(const SimpleGraph& g, std::mt19937& rng) {
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return g.relabelled(perm);
}

// Brute-force isomorphism test by vertex-mapping backtracking. Deliberately
// independent of the canonical-form machinery; only for small test graphs.
namespace brute {

inline bool extend_map(const SimpleGraph& a, const SimpleGraph& b, std::vector<int>& map,
                       std::uint64_t used, int next) {
    const int n = a.vertex_count();
    if (next == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used >> w & 1) continue;
        if (b.degree(w) != a.degree(next)) continue;
        bool ok = true;
        for (int u = 0; u < next && ok; ++u)
            if (a.adjacent(u, next) != b.adjacent(map[u], w)) ok = false;
        if (!ok) continue;
        map[next] = w;
        if (extend_map(a, b, map, used | (std::uint64_t{1} << w), next + 1)) return true;
    }
    return false;
}

inline bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> map(a.vertex_count(), -1);
    return extend_map(a, b, map, 0, 0);
}

}  // namespace brute

// Naive cubic enumeration oracle: all labelled cubic graphs with
// N(0) = {1,2,3} (every class has such a labelling), deduplicated by
// pairwise brute-force isomorphism. Independent of the production
// enumerator's canonicity machinery.
inline std::vector<SimpleGraph> naive_cubic_classes(int n, bool connected_only) {
    std::vector<SimpleGraph> classes;
    if (n < 4 || n % 2 != 0) return classes;
    std::vector<std::uint64_t> mask(n, 0);
    std::vector<int> deg(n, 0);
    auto link = [&](int u, int v) {
        mask[u] |= std::uint64_t{1} << v;
        mask[v] |= std::uint64_t{1} << u;
        ++deg[u];
        ++deg[v];
    };
    auto unlink = [&](int u, int v) {
        mask[u] &= ~(std::uint64_t{1} << v);
        mask[v] &= ~(std::uint64_t{1} << u);
        --deg[u];
        --deg[v];
    };
    link(0, 1);
    link(0, 2);
    link(0, 3);

    // Fill vertices in order; vertex u links only upward to keep each
    // labelled graph generated once.
    auto rec = [&](auto&& self, int u, int from) -> void {
        if (u == n) {
            std::vector<Edge> es;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (mask[a] >> b & 1) es.emplace_back(a, b);
            SimpleGraph g(n, std::move(es));
            if (connected_only && !g.connected()) return;
            for (const auto& rep : classes)
                if (brute::isomorphic(g, rep)) return;
            classes.push_back(std::move(g));
            return;
        }
        if (deg[u] == 3) {
            self(self, u + 1, u + 2);
            return;
        }
        const int need = 3 - deg[u];
        int avail = 0;
        for (int v = std::max(from, u + 1); v < n; ++v)
            if (deg[v] < 3) ++avail;
        if (avail < need) return;
        for (int v = std::max(from, u + 1); v < n; ++v) {
            if (deg[v] == 3) continue;
            link(u, v);
            self(self, u, v + 1);
            unlink(u, v);
        }
    };
    rec(rec, 1, 2);
    return classes;
}

// Enumerates every unordered balanced bisection (vertex 0 pinned to side 0).
// Callback gets the side vector; return false to stop.
template <typename Fn>
inline void for_each_balanced_bisection(int n, Fn&& fn) {
    std::vector<std::uint8_t> side(n, 1);
    // choose n/2 - 1 further side-0 vertices among 1..n-1
    std::vector<int> pick(n / 2 - 1);
    auto rec = [&](auto&& self, int idx, int from) -> bool {
        if (idx == static_cast<int>(pick.size())) {
            std::fill(side.begin(), side.end(), 1);
            side[0] = 0;
            for (int v : pick) side[v] = 0;
            return fn(side);
        }
        for (int v = from; v < n; ++v) {
            pick[idx] = v;
            if (!self(self, idx + 1, v + 1)) return false;
        }
        return true;
    };
    if (n == 0) return;
    side[0] = 0;
    if (n / 2 - 1 == 0) {
        fn(side);
        return;
    }
    rec(rec, 0, 1);
}

}  // namespace bisectlab::testing
