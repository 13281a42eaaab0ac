#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bisectlab/graph.hpp"
#include "bisectlab/search.hpp"

namespace bisectlab {

// Vertex 2-colouring of a cubic graph; side[v] is 0 (black) or 1 (white).
struct Bisection {
    std::vector<std::uint8_t> side;

    Bisection() = default;
    explicit Bisection(std::vector<std::uint8_t> s) : side(std::move(s)) {}

    int count(int colour) const {
        int c = 0;
        for (auto s : side)
            if (s == colour) ++c;
        return c;
    }
    bool balanced() const { return count(0) == count(1); }

    std::vector<int> vertices_of(int colour) const {
        std::vector<int> vs;
        for (int v = 0; v < static_cast<int>(side.size()); ++v)
            if (side[v] == colour) vs.push_back(v);
        return vs;
    }
};

// Orders of the monochromatic components of one colour class.
inline std::vector<int> monochromatic_component_orders(const CubicGraph& g, const Bisection& c,
                                                       int colour) {
    const int n = g.vertex_count();
    std::vector<int> orders;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s] || c.side[s] != colour) continue;
        int size = 0;
        stack.assign(1, s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++size;
            for (int w : g.neighbours3(v))
                if (!seen[w] && c.side[w] == colour) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        orders.push_back(size);
    }
    return orders;
}

struct KBisectionWitness {
    Bisection bisection;
    int k = 0;
    std::vector<int> black_component_orders;
    std::vector<int> white_component_orders;
};

struct VerifyOutcome {
    bool ok = false;
    std::string reason;              // empty when ok
    std::vector<int> witness_component;  // vertices of an offending component

    explicit operator bool() const { return ok; }
};

// Checks conditions in order: balance first, then component orders.
inline VerifyOutcome verify_k_bisection(const CubicGraph& g, const Bisection& c, int k) {
    const int n = g.vertex_count();
    if (static_cast<int>(c.side.size()) != n)
        throw std::invalid_argument("verify_k_bisection: colouring size mismatch");
    if (!c.balanced())
        return {false, "unbalanced: |B| = " + std::to_string(c.count(0)) + ", |W| = " +
                           std::to_string(c.count(1)),
                {}};
    std::vector<char> seen(n, 0);
    std::vector<int> comp;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        comp.assign(1, s);
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int w : g.neighbours3(comp[head]))
                if (!seen[w] && c.side[w] == c.side[s]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        if (static_cast<int>(comp.size()) > k) {
            std::sort(comp.begin(), comp.end());
            return {false,
                    "monochromatic component of order " + std::to_string(comp.size()) +
                        " exceeds k = " + std::to_string(k),
                    comp};
        }
    }
    return {true, "", {}};
}

inline KBisectionWitness make_witness(const CubicGraph& g, Bisection c, int k) {
    KBisectionWitness w;
    w.k = k;
    w.black_component_orders = monochromatic_component_orders(g, c, 0);
    w.white_component_orders = monochromatic_component_orders(g, c, 1);
    w.bisection = std::move(c);
    return w;
}

namespace detail {

// Exhaustive k-bisection search. Branches on the uncoloured vertex with the
// most coloured neighbours (ties to the smallest index), black before white;
// vertex 0 is pinned black since complementing a bisection preserves the
// property. Prunes on class size > n/2 and on any monochromatic component
// among the coloured vertices exceeding k.
struct KBisectionSearch {
    const CubicGraph& g;
    int k;
    SearchBudget& budget;
    std::vector<std::int8_t> colour;  // -1 uncoloured
    int counts[2] = {0, 0};
    int n;
    bool out_of_time = false;

    KBisectionSearch(const CubicGraph& gr, int kk, SearchBudget& b)
        : g(gr), k(kk), budget(b), colour(gr.vertex_count(), -1), n(gr.vertex_count()) {}

    bool component_fits(int v) {
        // Size of the same-coloured component containing v, early-exit at k+1.
        const int c = colour[v];
        std::vector<int> stack{v};
        std::uint64_t seen = std::uint64_t{1} << v;
        int size = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (++size > k) return false;
            for (int w : g.neighbours3(x))
                if (colour[w] == c && !(seen >> w & 1)) {
                    seen |= std::uint64_t{1} << w;
                    stack.push_back(w);
                }
        }
        return true;
    }

    int pick() const {
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
    }

    bool dfs(int coloured) {
        if (budget.poll()) {
            out_of_time = true;
            return false;
        }
        if (coloured == n) return true;
        const int v = pick();
        for (int c = 0; c < 2; ++c) {
            if (counts[c] == n / 2) continue;
            colour[v] = static_cast<std::int8_t>(c);
            ++counts[c];
            if (component_fits(v) && dfs(coloured + 1)) return true;
            --counts[c];
            colour[v] = -1;
            if (out_of_time) return false;
        }
        return false;
    }
};

}  // namespace detail

inline SearchResult<KBisectionWitness> find_k_bisection(const CubicGraph& g, int k,
                                                        SearchBudget budget = {}) {
    if (k < 1) throw std::invalid_argument("find_k_bisection: k must be >= 1");
    const int n = g.vertex_count();
    if (n == 0) return SearchResult<KBisectionWitness>::found(make_witness(g, Bisection{{}}, k));
    detail::KBisectionSearch search(g, k, budget);
    search.colour[0] = 0;
    search.counts[0] = 1;
    if (search.dfs(1)) {
        Bisection c(std::vector<std::uint8_t>(search.colour.begin(), search.colour.end()));
        auto check = verify_k_bisection(g, c, k);
        if (!check) throw std::logic_error("find_k_bisection: witness failed verification");
        return SearchResult<KBisectionWitness>::found(make_witness(g, std::move(c), k));
    }
    if (search.out_of_time) return SearchResult<KBisectionWitness>::inconclusive();
    return SearchResult<KBisectionWitness>::absent();
}

// Constructive 2-bisection from a proper 3-edge-colouring: the union of
// colour classes 0 and 1 is a 2-factor of even cycles; 2-colour each cycle
// alternately, black first at its smallest vertex. Every class-2 edge then
// joins either opposite colours or two vertices whose remaining neighbours
// are all opposite, so monochromatic components have order at most 2.
inline KBisectionWitness two_bisection_from_3ec(const CubicGraph& g, const EdgeColouring3& ec) {
    if (!is_proper_3_edge_colouring(g, ec))
        throw std::invalid_argument("two_bisection_from_3ec: colouring is not proper");
    const int n = g.vertex_count();
    Bisection c(std::vector<std::uint8_t>(n, 0));
    std::vector<char> visited(n, 0);
    for (int s = 0; s < n; ++s) {
        if (visited[s]) continue;
        // Walk the 0/1-alternating cycle through s.
        int v = s;
        int want = 0;  // colour class of the next edge to follow
        std::uint8_t vertex_colour = 0;
        do {
            visited[v] = 1;
            c.side[v] = vertex_colour;
            vertex_colour ^= 1;
            int next = -1;
            for (int i = 0; i < 3; ++i)
                if (ec[g.incident_edges(v)[i]] == want) {
                    next = g.neighbours3(v)[i];
                    break;
                }
            v = next;
            want ^= 1;
        } while (v != s);
    }
    auto check = verify_k_bisection(g, c, 2);
    if (!check)
        throw std::logic_error("two_bisection_from_3ec: construction failed verification: " +
                               check.reason);
    return make_witness(g, std::move(c), 2);
}

}  // namespace bisectlab
