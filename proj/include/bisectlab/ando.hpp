#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bisectlab/bisection.hpp"
#include "bisectlab/canonical.hpp"
#include "bisectlab/graph.hpp"
#include "bisectlab/search.hpp"

namespace bisectlab {

// (Strong) Ando colourings: bisections whose induced monochromatic subgraphs
// are isomorphic, and in the strong form isomorphic linear forests.

// Sorted multiset of path lengths (edge counts; an isolated vertex is a
// length-0 path).
struct LinearForestSignature {
    std::vector<int> path_lengths;
    friend bool operator==(const LinearForestSignature& a, const LinearForestSignature& b) {
        return a.path_lengths == b.path_lengths;
    }
};

struct LinearForestCheck {
    std::optional<LinearForestSignature> signature;
    int offending_vertex = -1;  // a vertex of degree >= 3 or on a cycle

    explicit operator bool() const { return signature.has_value(); }
};

// Signature of the subgraph induced on `vertices`, or the offending vertex
// when some component has a cycle or a vertex of degree >= 3.
inline LinearForestCheck linear_forest_signature(const SimpleGraph& g,
                                                 const std::vector<int>& vertices) {
    SimpleGraph sub = g.induced(vertices);
    for (int v = 0; v < sub.vertex_count(); ++v)
        if (sub.degree(v) >= 3) return {std::nullopt, vertices[v]};
    LinearForestSignature sig;
    for (const auto& comp : sub.components()) {
        int edges = 0;
        for (int v : comp) edges += sub.degree(v);
        edges /= 2;
        if (edges == static_cast<int>(comp.size()))  // max degree 2 and |E| = |V|: a cycle
            return {std::nullopt, vertices[comp[0]]};
        sig.path_lengths.push_back(edges);
    }
    std::sort(sig.path_lengths.begin(), sig.path_lengths.end());
    return {std::move(sig), -1};
}

// Multiset of component canonical codes of one colour class.
inline std::vector<CanonicalCode> part_signature(const CubicGraph& g, const Bisection& c,
                                                 int colour) {
    return component_signature(g.graph(), c.vertices_of(colour));
}

inline bool is_ando(const CubicGraph& g, const Bisection& c) {
    if (static_cast<int>(c.side.size()) != g.vertex_count())
        throw std::invalid_argument("is_ando: colouring size mismatch");
    if (!c.balanced()) return false;
    return part_signature(g, c, 0) == part_signature(g, c, 1);
}

inline bool is_strong_ando(const CubicGraph& g, const Bisection& c) {
    if (static_cast<int>(c.side.size()) != g.vertex_count())
        throw std::invalid_argument("is_strong_ando: colouring size mismatch");
    if (!c.balanced()) return false;
    auto black = linear_forest_signature(g.graph(), c.vertices_of(0));
    if (!black) return false;
    auto white = linear_forest_signature(g.graph(), c.vertices_of(1));
    if (!white) return false;
    // Linear forests are isomorphic iff their path-length multisets agree.
    return *black.signature == *white.signature;
}

namespace detail {

// Shared DFS over bisections with both parts of maximum degree <= 2.
// `require_forest` additionally forbids monochromatic cycles and components
// of order > k. `accept` sees every completed colouring that survived the
// pruning; returning true stops the search.
template <typename Accept>
bool max_degree_2_bisections(const CubicGraph& g, bool require_forest, int k, SearchBudget& budget,
                             bool& out_of_time, Accept&& accept) {
    const int n = g.vertex_count();
    std::vector<std::int8_t> colour(n, -1);
    int counts[2] = {0, 0};

    auto same_colour_ok = [&](int v) {
        const int c = colour[v];
        int same = 0;
        for (int w : g.neighbours3(v))
            if (colour[w] == c) ++same;
        if (same >= 3) return false;
        // Vertices adjacent to v may have reached 3 same-coloured neighbours.
        for (int w : g.neighbours3(v)) {
            if (colour[w] != c) continue;
            int ws = 0;
            for (int x : g.neighbours3(w))
                if (colour[x] == c) ++ws;
            if (ws >= 3) return false;
        }
        if (!require_forest) return true;
        // Component through v must stay a path of order <= k: BFS counting
        // vertices and internal edges.
        std::vector<int> comp{v};
        std::uint64_t seen = std::uint64_t{1} << v;
        int edges = 0;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int w : g.neighbours3(comp[head])) {
                if (colour[w] != c) continue;
                ++edges;
                if (!(seen >> w & 1)) {
                    seen |= std::uint64_t{1} << w;
                    comp.push_back(w);
                    if (k > 0 && static_cast<int>(comp.size()) > k) return false;
                }
            }
        return edges / 2 < static_cast<int>(comp.size());  // no cycle
    };

    auto pick = [&]() {
        int best = -1, best_score = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[v] != -1) continue;
            int score = 0;
            for (int w : g.neighbours3(v))
                if (colour[w] != -1) ++score;
            if (score > best_score) {
                best_score = score;
                best = v;
            }
        }
        return best;
    };

    auto dfs = [&](auto&& self, int coloured) -> bool {
        if (budget.poll()) {
            out_of_time = true;
            return false;
        }
        if (coloured == n) return accept(colour);
        const int v = pick();
        for (int c = 0; c < 2; ++c) {
            if (counts[c] == n / 2) continue;
            colour[v] = static_cast<std::int8_t>(c);
            ++counts[c];
            if (same_colour_ok(v) && self(self, coloured + 1)) return true;
            --counts[c];
            colour[v] = -1;
            if (out_of_time) return false;
        }
        return false;
    };

    if (n == 0) {
        std::vector<std::int8_t> empty;
        return accept(empty);
    }
    colour[0] = 0;  // complement symmetry
    counts[0] = 1;
    return dfs(dfs, 1);
}

}  // namespace detail

// Ando-colouring search. Restricting to bisections whose parts have maximum
// degree 2 is complete for existence: any bisection with isomorphic parts
// can be rewired into one of maximum degree 2 (see reduce_to_max_degree_2),
// so absence over this space is absence overall. Components of such parts
// are paths or cycles; full component signatures are compared.
inline SearchResult<Bisection> find_ando(const CubicGraph& g, SearchBudget budget = {}) {
    bool out_of_time = false;
    Bisection found;
    const bool ok = detail::max_degree_2_bisections(
        g, /*require_forest=*/false, /*k=*/0, budget, out_of_time,
        [&](const std::vector<std::int8_t>& colour) {
            Bisection c(std::vector<std::uint8_t>(colour.begin(), colour.end()));
            if (!is_ando(g, c)) return false;
            found = std::move(c);
            return true;
        });
    if (ok) return SearchResult<Bisection>::found(std::move(found));
    if (out_of_time) return SearchResult<Bisection>::inconclusive();
    return SearchResult<Bisection>::absent();
}

// Bisection that is simultaneously a k-bisection and a Strong Ando
// colouring (isomorphic linear-forest parts).
inline SearchResult<Bisection> find_k_bisection_iso_linear_forests(const CubicGraph& g, int k,
                                                                   SearchBudget budget = {}) {
    if (k < 1) throw std::invalid_argument("find_k_bisection_iso_linear_forests: k must be >= 1");
    bool out_of_time = false;
    Bisection found;
    const bool ok = detail::max_degree_2_bisections(
        g, /*require_forest=*/true, k, budget, out_of_time,
        [&](const std::vector<std::int8_t>& colour) {
            Bisection c(std::vector<std::uint8_t>(colour.begin(), colour.end()));
            if (!c.balanced()) return false;
            auto black = linear_forest_signature(g.graph(), c.vertices_of(0));
            auto white = linear_forest_signature(g.graph(), c.vertices_of(1));
            if (!black || !white || !(*black.signature == *white.signature)) return false;
            found = std::move(c);
            return true;
        });
    if (ok) return SearchResult<Bisection>::found(std::move(found));
    if (out_of_time) return SearchResult<Bisection>::inconclusive();
    return SearchResult<Bisection>::absent();
}

// Rewires an Ando colouring into one whose parts have maximum degree 2.
// One degree-3 vertex per part is switched at a time: v1 is the smallest
// degree-3 vertex, v2 its image under an explicit part isomorphism computed
// from canonical orders. Both become isolated vertices of the opposite
// parts, so the parts stay isomorphic and the degree-3 count strictly drops.
inline Bisection reduce_to_max_degree_2(const CubicGraph& g, Bisection c) {
    if (!is_ando(g, c)) throw std::invalid_argument("reduce_to_max_degree_2: input is not Ando");
    for (;;) {
        int v1 = -1;
        for (int v = 0; v < g.vertex_count() && v1 == -1; ++v) {
            int same = 0;
            for (int w : g.neighbours3(v))
                if (c.side[w] == c.side[v]) ++same;
            if (same == 3) v1 = v;
        }
        if (v1 == -1) return c;

        const int colour = c.side[v1];
        const auto mine = c.vertices_of(colour);
        const auto theirs = c.vertices_of(1 - colour);
        SimpleGraph gm = g.graph().induced(mine);
        SimpleGraph gt = g.graph().induced(theirs);
        auto iso = find_isomorphism(gm, gt);
        if (!iso) throw std::logic_error("reduce_to_max_degree_2: parts lost isomorphism");
        int v1_local = static_cast<int>(std::lower_bound(mine.begin(), mine.end(), v1) - mine.begin());
        const int v2 = theirs[(*iso)[v1_local]];

        c.side[v1] = static_cast<std::uint8_t>(1 - colour);
        c.side[v2] = static_cast<std::uint8_t>(colour);
        if (!is_ando(g, c))
            throw std::logic_error("reduce_to_max_degree_2: switch broke the Ando property");
    }
}

}  // namespace bisectlab
