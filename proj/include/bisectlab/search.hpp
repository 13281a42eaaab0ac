#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace bisectlab {

// Wall-clock budget shared by the exhaustive solvers. Solvers poll
// exhausted() about once every few thousand nodes; a tripped budget turns an
// exhaustive "absent" into "inconclusive", never the other way round.
class SearchBudget {
public:
    SearchBudget() = default;
    static SearchBudget with_millis(std::int64_t ms) {
        SearchBudget b;
        if (ms > 0) b.deadline_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
        return b;
    }

    bool limited() const { return deadline_.has_value(); }

    bool exhausted() const {
        if (!deadline_) return false;
        return std::chrono::steady_clock::now() >= *deadline_;
    }

    // Cheap amortised poll: hits the clock once per 4096 calls.
    bool poll() {
        if (!deadline_) return false;
        if ((++ticks_ & 0xfff) != 0) return false;
        return exhausted();
    }

private:
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::uint64_t ticks_ = 0;
};

enum class SearchStatus { Found, Absent, Inconclusive };

template <typename T>
struct SearchResult {
    SearchStatus status = SearchStatus::Absent;
    std::optional<T> witness;

    static SearchResult found(T w) { return {SearchStatus::Found, std::move(w)}; }
    static SearchResult absent() { return {SearchStatus::Absent, std::nullopt}; }
    static SearchResult inconclusive() { return {SearchStatus::Inconclusive, std::nullopt}; }

    explicit operator bool() const { return status == SearchStatus::Found; }
};

// Union-find with an undo trail, for backtracking solvers. No path
// compression so that undo is O(1) per union.
class UnionFindUndo {
public:
    explicit UnionFindUndo(int n) : parent_(n), size_(n, 1) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    // Returns false (and records nothing) if already in the same set.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        trail_.push_back(b);
        return true;
    }

    int set_size(int x) const { return size_[find(x)]; }

    std::size_t mark() const { return trail_.size(); }

    void rollback(std::size_t mark) {
        while (trail_.size() > mark) {
            int b = trail_.back();
            trail_.pop_back();
            size_[parent_[b]] -= size_[b];
            parent_[b] = b;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> trail_;
};

}  // namespace bisectlab
