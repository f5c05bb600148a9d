#pragma once

#include "kronbound/bigint.hpp"
#include "kronbound/partition.hpp"

#include <map>
#include <numeric>
#include <span>
#include <vector>

namespace kronbound {

/// Content of a tableau: entry k is the number of k's. Order matters, zeros allowed.
class WeightComposition {
public:
    WeightComposition() = default;
    WeightComposition(std::initializer_list<int> entries) : WeightComposition(std::vector<int>(entries)) {}
    explicit WeightComposition(std::vector<int> entries) : entries_(std::move(entries)) {
        for (int e : entries_)
            if (e < 0) throw InputError("weight entries must be non-negative");
        size_ = std::accumulate(entries_.begin(), entries_.end(), 0);
    }
    explicit WeightComposition(const Partition& p) : WeightComposition(p.vec()) {}

    std::span<const int> entries() const noexcept { return entries_; }
    int size() const noexcept { return size_; }

private:
    std::vector<int> entries_;
    int size_ = 0;
};

namespace detail {

// Extends `shape` (row lengths, padded to nu's length) by a horizontal strip
// of `cells` boxes that stays inside nu.
template <typename F>
void for_each_horizontal_strip(const std::vector<int>& shape, const Partition& nu, int cells, F&& emit) {
    std::vector<int> next = shape;
    const int rows = static_cast<int>(shape.size());
    auto rec = [&](auto&& self, int row, int left) -> void {
        if (row == rows) {
            if (left == 0) emit(next);
            return;
        }
        const int cap = std::min(nu[row], row == 0 ? nu[0] : shape[row - 1]);
        const int room = cap - shape[row];
        for (int add = std::min(room, left); add >= 0; --add) {
            next[row] = shape[row] + add;
            self(self, row + 1, left - add);
        }
        next[row] = shape[row];
    };
    rec(rec, 0, cells);
}

}  // namespace detail

/// K(nu, w): semistandard tableaux of shape nu with content w, built one
/// letter at a time as a chain of horizontal strips.
inline Count kostka(const Partition& nu, const WeightComposition& w) {
    if (nu.size() != w.size())
        throw InputError("kostka: |nu| = " + std::to_string(nu.size()) + " but weight sums to " +
                         std::to_string(w.size()));
    std::map<std::vector<int>, Count> states;
    states.emplace(std::vector<int>(static_cast<std::size_t>(nu.length()), 0), 1);
    for (int cells : w.entries()) {
        if (cells == 0) continue;
        std::map<std::vector<int>, Count> next;
        for (const auto& [shape, ways] : states)
            detail::for_each_horizontal_strip(shape, nu, cells,
                                              [&](const std::vector<int>& s) { next[s] += ways; });
        states = std::move(next);
        if (states.empty()) return 0;
    }
    Count total = 0;
    for (const auto& [shape, ways] : states) total += ways;
    return total;
}

inline Count kostka(const Partition& nu, const Partition& mu) { return kostka(nu, WeightComposition(mu)); }

/// Exact inverse of the Kostka matrix on partitions of n. Rows and columns are
/// indexed in reverse lexicographic order, a linear extension of dominance, so
/// K is upper unitriangular there. Entry (pi, nu) is zero unless pi dominates nu.
class InverseKostkaMatrix {
public:
    explicit InverseKostkaMatrix(int n) : n_(n), index_(generate_partitions(n)) {
        const std::size_t p = index_.size();
        for (std::size_t i = 0; i < p; ++i) position_.emplace(index_[i], i);
        std::vector<std::vector<Count>> k(p, std::vector<Count>(p));
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = i; j < p; ++j)
                if (dominance_leq(index_[j], index_[i])) k[i][j] = kostka(index_[i], index_[j]);
        entries_.assign(p, std::vector<Count>(p));
        for (std::size_t j = 0; j < p; ++j) {
            entries_[j][j] = 1;
            for (std::size_t i = j; i-- > 0;) {
                Count acc = 0;
                for (std::size_t t = i + 1; t <= j; ++t)
                    if (k[i][t] != 0) acc += k[i][t] * entries_[t][j];
                entries_[i][j] = -acc;
            }
        }
    }

    int n() const noexcept { return n_; }
    const std::vector<Partition>& index() const noexcept { return index_; }
    const Count& at(const Partition& pi, const Partition& nu) const {
        return entries_.at(position_.at(pi)).at(position_.at(nu));
    }
    const Count& at(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }

private:
    int n_;
    std::vector<Partition> index_;
    std::map<Partition, std::size_t> position_;
    std::vector<std::vector<Count>> entries_;
};

inline InverseKostkaMatrix inverse_kostka(int n) {
    if (n < 1) throw InputError("inverse_kostka needs n >= 1");
    return InverseKostkaMatrix(n);
}

/// Shared per-thread cache so repeated Vallejo evaluations reuse the matrix.
inline const InverseKostkaMatrix& cached_inverse_kostka(int n) {
    thread_local std::map<int, InverseKostkaMatrix> cache;
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    return cache.emplace(n, InverseKostkaMatrix(n)).first->second;
}

}  // namespace kronbound
