#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bisectlab {

// Unordered vertex pair, stored with u < v.
struct Edge {
    int u = -1;
    int v = -1;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

// Immutable simple graph on vertices 0..n-1.
// Edges are sorted lexicographically at construction and indexed once;
// the index of an edge never changes afterwards.
class SimpleGraph {
public:
    SimpleGraph() = default;

    SimpleGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n < 0 || n > 62)
            throw std::invalid_argument("SimpleGraph: vertex count out of supported range [0, 62]");
        std::sort(edges_.begin(), edges_.end());
        adj_.assign(n_, {});
        masks_.assign(n_, 0);
        for (const Edge& e : edges_) {
            if (e.u < 0 || e.v >= n_)
                throw std::invalid_argument("SimpleGraph: edge endpoint out of range");
            if (e.u == e.v) throw std::invalid_argument("SimpleGraph: loop edge");
            if (masks_[e.u] >> e.v & 1) throw std::invalid_argument("SimpleGraph: repeated edge");
            masks_[e.u] |= std::uint64_t{1} << e.v;
            masks_[e.v] |= std::uint64_t{1} << e.u;
            adj_[e.u].push_back(e.v);
            adj_[e.v].push_back(e.u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    static SimpleGraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
        std::vector<Edge> es;
        es.reserve(pairs.size());
        for (auto [a, b] : pairs) es.emplace_back(a, b);
        return SimpleGraph(n, std::move(es));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[i]; }
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    std::uint64_t neighbour_mask(int v) const { return masks_[v]; }

    bool adjacent(int u, int v) const { return masks_[u] >> v & 1; }

    // Index into edges() of {u,v}, or -1 when not an edge.
    int edge_index(int u, int v) const {
        Edge e(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || !(*it == e)) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    bool is_regular(int d) const {
        for (int v = 0; v < n_; ++v)
            if (degree(v) != d) return false;
        return true;
    }

    // Connected components as sorted vertex lists, ordered by smallest member.
    std::vector<std::vector<int>> components() const {
        std::vector<std::vector<int>> comps;
        std::vector<char> seen(n_, 0);
        for (int s = 0; s < n_; ++s) {
            if (seen[s]) continue;
            std::vector<int> comp{s};
            seen[s] = 1;
            for (std::size_t head = 0; head < comp.size(); ++head)
                for (int w : adj_[comp[head]])
                    if (!seen[w]) {
                        seen[w] = 1;
                        comp.push_back(w);
                    }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    bool connected() const {
        if (n_ <= 1) return true;
        return components().size() == 1;
    }

    // Subgraph induced on `vertices`; new labels follow the order given in `vertices`.
    // When `old_of_new` is non-null it receives the new->old label map.
    SimpleGraph induced(const std::vector<int>& vertices, std::vector<int>* old_of_new = nullptr) const {
        std::vector<int> new_of_old(n_, -1);
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            int v = vertices[i];
            if (v < 0 || v >= n_) throw std::invalid_argument("induced: vertex out of range");
            if (new_of_old[v] != -1) throw std::invalid_argument("induced: repeated vertex");
            new_of_old[v] = static_cast<int>(i);
        }
        std::vector<Edge> es;
        for (const Edge& e : edges_)
            if (new_of_old[e.u] != -1 && new_of_old[e.v] != -1)
                es.emplace_back(new_of_old[e.u], new_of_old[e.v]);
        if (old_of_new) *old_of_new = vertices;
        return SimpleGraph(static_cast<int>(vertices.size()), std::move(es));
    }

    SimpleGraph relabelled(const std::vector<int>& new_of_old) const {
        std::vector<Edge> es;
        es.reserve(edges_.size());
        for (const Edge& e : edges_) es.emplace_back(new_of_old[e.u], new_of_old[e.v]);
        return SimpleGraph(n_, std::move(es));
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> masks_;
};

// 3-regular simple graph. Keeps per-vertex neighbour and incident-edge triples
// so that solvers can walk the graph without indirection through vectors.
class CubicGraph {
public:
    CubicGraph() = default;

    explicit CubicGraph(SimpleGraph g) : g_(std::move(g)) {
        const int n = g_.vertex_count();
        if (n % 2 != 0) throw std::invalid_argument("CubicGraph: odd vertex count");
        if (!g_.is_regular(3)) throw std::invalid_argument("CubicGraph: not 3-regular");
        nbr_.resize(n);
        inc_.resize(n);
        for (int v = 0; v < n; ++v) {
            const auto& a = g_.neighbours(v);
            for (int i = 0; i < 3; ++i) {
                nbr_[v][i] = a[i];
                inc_[v][i] = g_.edge_index(v, a[i]);
            }
        }
    }

    const SimpleGraph& graph() const { return g_; }
    int vertex_count() const { return g_.vertex_count(); }
    int edge_count() const { return g_.edge_count(); }
    const std::vector<Edge>& edges() const { return g_.edges(); }
    const Edge& edge(int i) const { return g_.edge(i); }
    int edge_index(int u, int v) const { return g_.edge_index(u, v); }
    bool adjacent(int u, int v) const { return g_.adjacent(u, v); }
    std::uint64_t neighbour_mask(int v) const { return g_.neighbour_mask(v); }
    const std::array<int, 3>& neighbours3(int v) const { return nbr_[v]; }
    const std::array<int, 3>& incident_edges(int v) const { return inc_[v]; }

private:
    SimpleGraph g_;
    std::vector<std::array<int, 3>> nbr_;
    std::vector<std::array<int, 3>> inc_;
};

// Proper 3-edge-colouring: edge index -> colour in {0,1,2}.
using EdgeColouring3 = std::vector<std::int8_t>;

inline bool is_proper_3_edge_colouring(const CubicGraph& g, const EdgeColouring3& ec) {
    if (static_cast<int>(ec.size()) != g.edge_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int seen = 0;
        for (int e : g.incident_edges(v)) {
            if (ec[e] < 0 || ec[e] > 2) return false;
            if (seen >> ec[e] & 1) return false;
            seen |= 1 << ec[e];
        }
    }
    return true;
}

}  // namespace bisectlab
