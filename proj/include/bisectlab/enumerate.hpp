#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bisectlab/canonical.hpp"
#include "bisectlab/graph.hpp"

namespace bisectlab {

// Isomorph-free enumeration of cubic graphs on n vertices.
//
// Graphs are generated column by column: vertex j picks its set of
// down-neighbours in {0..j-1}, which fixes the adjacency bits
// (0,j),(1,j),...,(j-1,j). A labelled graph is emitted iff its column-major
// adjacency bit string is the maximum over all relabellings, so exactly one
// labelling per isomorphism class survives. Pruning:
//   * vertex 0 is adjacent to exactly {1,2,3} (true of every max labelling);
//   * after each completed column the prefix must already be self-maximal
//     (every prefix of a max labelling is maximal under permutations of the
//     placed vertices, because a larger prefix dominates lexicographically);
//   * degree and stub-capacity feasibility;
//   * in connected mode every vertex needs a down-neighbour (a max labelling
//     of a connected graph never closes a component early).

namespace detail {

class CubicEnumerator {
public:
    CubicEnumerator(int n, bool connected_only, std::function<bool(const CubicGraph&)> emit)
        : n_(n), connected_(connected_only), emit_(std::move(emit)), masks_(n, 0), deg_(n, 0) {}

    void run() {
        if (n_ < 4) return;  // smallest simple cubic graph is K4
        // Vertex 0's neighbourhood is {1,2,3} in every max labelling.
        link(0, 1);
        link(0, 2);
        link(0, 3);
        stop_ = false;
        extend(2);
    }

private:
    int n_;
    bool connected_;
    std::function<bool(const CubicGraph&)> emit_;
    std::vector<std::uint64_t> masks_;
    std::array<std::uint64_t, 64> prefix_{};
    detail::MaxRepTester tester_;
    std::vector<int> deg_;
    bool stop_ = false;

    void link(int u, int v) {
        masks_[u] |= std::uint64_t{1} << v;
        masks_[v] |= std::uint64_t{1} << u;
        ++deg_[u];
        ++deg_[v];
    }
    void unlink(int u, int v) {
        masks_[u] &= ~(std::uint64_t{1} << v);
        masks_[v] &= ~(std::uint64_t{1} << u);
        --deg_[u];
        --deg_[v];
    }

    bool feasible_after(int j) const {
        // Vertices <= j still missing degree must be reachable from the
        // n-1-j later vertices, each of which can contribute one edge here
        // and has total capacity 3.
        const int later = n_ - 1 - j;
        int stubs = 0;
        for (int v = 0; v <= j; ++v) {
            const int need = 3 - deg_[v];
            if (need > later) return false;
            stubs += need;
        }
        return stubs <= 3 * later;
    }

    // True unless some relabelling of the placed vertices provably beats the
    // current prefix. Budgeted: an inconclusive answer just skips the prune;
    // the final column runs unbudgeted, so accepted graphs are exactly the
    // max representatives.
    bool prefix_may_be_max(int j) {
        const std::uint64_t keep =
            (j + 1 >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (j + 1)) - 1);
        for (int v = 0; v <= j; ++v) prefix_[v] = masks_[v] & keep;
        const auto budget = (j + 1 == n_) ? ~std::uint64_t{0} : std::uint64_t{400};
        return tester_.run(prefix_.data(), j + 1, budget) !=
               detail::MaxRepTester::Verdict::Beaten;
    }

    void emit_current() {
        std::vector<Edge> edges;
        for (int v = 0; v < n_; ++v)
            for (int w = v + 1; w < n_; ++w)
                if (masks_[v] >> w & 1) edges.emplace_back(v, w);
        if (!emit_(CubicGraph(SimpleGraph(n_, std::move(edges))))) stop_ = true;
    }

    void extend(int j) {
        if (stop_) return;
        if (j == n_) {
            for (int v = 0; v < n_; ++v)
                if (deg_[v] != 3) return;
            emit_current();
            return;
        }
        // Candidate extra down-neighbours for vertex j (vertex 0 is full).
        std::vector<int> cands;
        for (int v = 1; v < j; ++v)
            if (deg_[v] < 3) cands.push_back(v);
        const int later = n_ - 1 - j;
        const int max_take = 3 - deg_[j];
        int min_take = std::max(0, (3 - deg_[j]) - later);
        if (connected_ && deg_[j] == 0) min_take = std::max(min_take, 1);
        std::vector<int> chosen;
        choose(j, cands, 0, min_take, max_take, chosen);
    }

    void choose(int j, const std::vector<int>& cands, std::size_t from, int min_take, int max_take,
                std::vector<int>& chosen) {
        if (stop_) return;
        const int taken = static_cast<int>(chosen.size());
        if (taken >= min_take) {
            if (feasible_after(j) && prefix_may_be_max(j)) extend(j + 1);
            if (stop_) return;
        }
        if (taken == max_take) return;
        for (std::size_t i = from; i < cands.size(); ++i) {
            const int v = cands[i];
            if (deg_[v] == 3) continue;
            link(v, j);
            chosen.push_back(v);
            choose(j, cands, i + 1, min_take, max_take, chosen);
            chosen.pop_back();
            unlink(v, j);
            if (stop_) return;
        }
    }
};

}  // namespace detail

// Streams one canonical representative per isomorphism class in a fixed
// deterministic (generation) order. Return false from the callback to stop.
inline void enumerate_cubic(int n, bool connected_only,
                            const std::function<bool(const CubicGraph&)>& emit,
                            int ceiling = 20) {
    if (n < 0 || n % 2 != 0) throw std::invalid_argument("enumerate_cubic: n must be even and >= 0");
    if (n > ceiling) throw std::invalid_argument("enumerate_cubic: n above configured ceiling");
    detail::CubicEnumerator(n, connected_only, emit).run();
}

// Materialised variant, sorted by canonical code.
inline std::vector<CubicGraph> enumerate_cubic_sorted(int n, bool connected_only, int ceiling = 20) {
    std::vector<std::pair<CanonicalCode, CubicGraph>> all;
    enumerate_cubic(
        n, connected_only,
        [&](const CubicGraph& g) {
            all.emplace_back(canonical_code(g.graph()), g);
            return true;
        },
        ceiling);
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<CubicGraph> out;
    out.reserve(all.size());
    for (auto& [code, g] : all) out.push_back(std::move(g));
    return out;
}

inline std::size_t count_cubic(int n, bool connected_only, int ceiling = 20) {
    std::size_t count = 0;
    enumerate_cubic(
        n, connected_only,
        [&](const CubicGraph&) {
            ++count;
            return true;
        },
        ceiling);
    return count;
}

}  // namespace bisectlab
