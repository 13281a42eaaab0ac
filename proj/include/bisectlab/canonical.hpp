#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bisectlab/graph.hpp"
#include "bisectlab/graph6.hpp"

namespace bisectlab {

// Canonical form machinery. Two independent notions are provided:
//
//  * canonical_labelling / canonical_code: equitable partition refinement,
//    then backtracking over the first non-singleton cell, keeping the
//    labelling whose column-major adjacency bit string is lexicographically
//    minimal over all refinement leaves. Complete for isomorphism: two
//    graphs get the same code iff they are isomorphic.
//
//  * is_max_adjacency_rep: decides whether the identity labelling maximises
//    the column-major adjacency bit string over all n! labellings. The
//    isomorph-free enumerator keeps exactly the labellings accepted here.
//
// The code of a graph is the graph6 line of its canonically relabelled copy,
// so codes sort like graph6 strings and parse back to graphs.

using CanonicalCode = std::string;

namespace detail {

// Equitable refinement of an ordered partition. Cells are vertex lists kept
// in a deterministic, isomorphism-invariant order: a cell splits into
// subcells ordered by their (cell-indexed neighbour count) signatures.
inline void refine_partition(const std::vector<std::uint64_t>& masks,
                             std::vector<std::vector<int>>& cells) {
    const int n = static_cast<int>(masks.size());
    bool changed = true;
    std::vector<std::uint64_t> cellmask;
    while (changed) {
        changed = false;
        cellmask.assign(cells.size(), 0);
        for (std::size_t t = 0; t < cells.size(); ++t)
            for (int v : cells[t]) cellmask[t] |= std::uint64_t{1} << v;

        std::vector<std::vector<int>> next;
        next.reserve(cells.size());
        for (auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> groups;
            for (int v : cell) {
                std::vector<int> sig(cells.size());
                for (std::size_t t = 0; t < cells.size(); ++t)
                    sig[t] = __builtin_popcountll(masks[v] & cellmask[t]);
                groups[sig].push_back(v);
            }
            if (groups.size() > 1) changed = true;
            for (auto& [sig, members] : groups) next.push_back(std::move(members));
        }
        cells = std::move(next);
        if (static_cast<int>(cells.size()) == n) break;
    }
}

// Column-major upper-triangle bits of the relabelled adjacency matrix,
// packed 64 per word, first bit in the most significant position.
inline std::vector<std::uint64_t> packed_code(const std::vector<std::uint64_t>& masks,
                                              const std::vector<int>& old_of_new) {
    const int n = static_cast<int>(old_of_new.size());
    std::vector<std::uint64_t> bits((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (masks[old_of_new[i]] >> old_of_new[j] & 1)
                bits[k / 64] |= std::uint64_t{1} << (63 - k % 64);
    return bits;
}

struct CanonSearch {
    const std::vector<std::uint64_t>& masks;
    std::vector<std::uint64_t> best_bits;
    std::vector<int> best_labelling;  // position -> old vertex
    bool have_best = false;

    explicit CanonSearch(const std::vector<std::uint64_t>& m) : masks(m) {}

    void run(std::vector<std::vector<int>> cells) {
        refine_partition(masks, cells);
        int target = -1;
        for (std::size_t t = 0; t < cells.size(); ++t)
            if (cells[t].size() > 1) {
                target = static_cast<int>(t);
                break;
            }
        if (target < 0) {
            std::vector<int> old_of_new(cells.size());
            for (std::size_t t = 0; t < cells.size(); ++t) old_of_new[t] = cells[t][0];
            auto bits = packed_code(masks, old_of_new);
            if (!have_best || bits < best_bits) {
                best_bits = std::move(bits);
                best_labelling = std::move(old_of_new);
                have_best = true;
            }
            return;
        }
        for (int v : cells[target]) {
            std::vector<std::vector<int>> next;
            next.reserve(cells.size() + 1);
            for (std::size_t t = 0; t < cells.size(); ++t) {
                if (static_cast<int>(t) != target) {
                    next.push_back(cells[t]);
                    continue;
                }
                next.push_back({v});
                std::vector<int> rest;
                for (int w : cells[t])
                    if (w != v) rest.push_back(w);
                next.push_back(std::move(rest));
            }
            run(std::move(next));
        }
    }
};

}  // namespace detail

// Position -> original vertex of the canonical labelling.
inline std::vector<int> canonical_order(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {};
    std::vector<std::uint64_t> masks(n);
    for (int v = 0; v < n; ++v) masks[v] = g.neighbour_mask(v);
    // Seed cells by degree so graphs with mixed degrees refine immediately.
    std::map<int, std::vector<int>> by_deg;
    for (int v = 0; v < n; ++v) by_deg[g.degree(v)].push_back(v);
    std::vector<std::vector<int>> cells;
    for (auto& [d, vs] : by_deg) cells.push_back(std::move(vs));
    detail::CanonSearch search(masks);
    search.run(std::move(cells));
    return search.best_labelling;
}

inline SimpleGraph canonical_form(const SimpleGraph& g) {
    auto order = canonical_order(g);
    std::vector<int> new_of_old(order.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) new_of_old[order[pos]] = static_cast<int>(pos);
    return g.relabelled(new_of_old);
}

inline CanonicalCode canonical_code(const SimpleGraph& g) { return write_graph6(canonical_form(g)); }

inline bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

// Explicit isomorphism a -> b (vertex map), if one exists: matches canonical positions.
inline std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
    auto oa = canonical_order(a);
    auto ob = canonical_order(b);
    std::vector<int> map(a.vertex_count(), -1);
    for (std::size_t pos = 0; pos < oa.size(); ++pos) map[oa[pos]] = ob[pos];
    // Canonical forms agree iff isomorphic; confirm by checking the map.
    for (const Edge& e : a.edges())
        if (!b.adjacent(map[e.u], map[e.v])) return std::nullopt;
    return map;
}

// Multiset (sorted list) of canonical codes of the connected components of
// the subgraph induced on `vertices`.
inline std::vector<CanonicalCode> component_signature(const SimpleGraph& g,
                                                      const std::vector<int>& vertices) {
    SimpleGraph sub = g.induced(vertices);
    std::vector<CanonicalCode> codes;
    for (const auto& comp : sub.components()) {
        SimpleGraph c = sub.induced(comp);
        // Paths and cycles dominate in practice; cache their codes by shape.
        bool small_deg = true;
        int deg1 = 0;
        for (int v = 0; v < c.vertex_count(); ++v) {
            if (c.degree(v) > 2) small_deg = false;
            if (c.degree(v) == 1) ++deg1;
        }
        if (small_deg) {
            const bool is_cycle = (deg1 == 0 && c.edge_count() > 0);
            thread_local std::map<std::pair<bool, int>, CanonicalCode> cache;
            auto key = std::make_pair(is_cycle, c.vertex_count());
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, canonical_code(c)).first;
            codes.push_back(it->second);
        } else {
            codes.push_back(canonical_code(c));
        }
    }
    std::sort(codes.begin(), codes.end());
    return codes;
}

namespace detail {

// Decides whether any vertex ordering beats the identity ordering's
// column-major adjacency bits. The search walks exactly the alternative
// orderings that tie with the identity prefix so far, so its cost tracks the
// automorphisms of the graph. An optional node budget turns an expensive
// "proof of maximality" into Unknown, which callers may only use to skip a
// pruning opportunity, never to accept a graph.
struct MaxRepTester {
    enum class Verdict { Beaten, Maximal, Unknown };

    std::array<std::uint64_t, 64> id_cols{};   // identity column bits per position
    std::array<std::uint64_t, 64> alt_cols{};  // column bits w.r.t. the alt prefix
    const std::uint64_t* masks = nullptr;
    int n = 0;
    std::uint64_t placed = 0;
    std::uint64_t nodes_left = 0;

    // `m[v]` must already be restricted to the vertex set 0..nn-1.
    Verdict run(const std::uint64_t* m, int nn, std::uint64_t budget = ~std::uint64_t{0}) {
        masks = m;
        n = nn;
        placed = 0;
        nodes_left = budget;
        for (int j = 0; j < n; ++j) {
            std::uint64_t col = 0;
            std::uint64_t low = masks[j] & ((std::uint64_t{1} << j) - 1);
            while (low) {
                const int i = __builtin_ctzll(low);
                low &= low - 1;
                col |= std::uint64_t{1} << (63 - i);
            }
            id_cols[j] = col;
            alt_cols[j] = 0;
        }
        return beats(0);
    }

private:
    Verdict beats(int k) {
        if (k == n) return Verdict::Maximal;
        if (nodes_left-- == 0) return Verdict::Unknown;
        const std::uint64_t id_col = id_cols[k];
        bool unknown = false;
        for (int w = 0; w < n; ++w) {
            if (placed >> w & 1) continue;
            if (alt_cols[w] > id_col) return Verdict::Beaten;
            if (alt_cols[w] == id_col) {
                push(w, k);
                const Verdict v = beats(k + 1);
                pop(w, k);
                if (v == Verdict::Beaten) return Verdict::Beaten;
                if (v == Verdict::Unknown) unknown = true;
            }
        }
        return unknown ? Verdict::Unknown : Verdict::Maximal;
    }

    void push(int w, int k) {
        placed |= std::uint64_t{1} << w;
        const std::uint64_t bit = std::uint64_t{1} << (63 - k);
        std::uint64_t nb = masks[w] & ~placed;
        while (nb) {
            alt_cols[__builtin_ctzll(nb)] |= bit;
            nb &= nb - 1;
        }
    }

    void pop(int w, int k) {
        placed &= ~(std::uint64_t{1} << w);
        const std::uint64_t bit = std::uint64_t{1} << (63 - k);
        std::uint64_t nb = masks[w] & ~placed;
        while (nb) {
            alt_cols[__builtin_ctzll(nb)] &= ~bit;
            nb &= nb - 1;
        }
    }
};

inline bool is_max_adjacency_rep_masks(const std::vector<std::uint64_t>& masks) {
    MaxRepTester t;
    return t.run(masks.data(), static_cast<int>(masks.size())) == MaxRepTester::Verdict::Maximal;
}

}  // namespace detail

inline bool is_max_adjacency_rep(const SimpleGraph& g) {
    std::vector<std::uint64_t> masks(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) masks[v] = g.neighbour_mask(v);
    return detail::is_max_adjacency_rep_masks(masks);
}

}  // namespace bisectlab
