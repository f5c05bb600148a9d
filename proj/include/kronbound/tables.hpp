#pragma once

#include "kronbound/bigint.hpp"
#include "kronbound/limits.hpp"
#include "kronbound/partition.hpp"

#include <array>
#include <map>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

namespace kronbound {

/// Dense rows x cols array of non-negative integers.
struct Table2D {
    int rows = 0;
    int cols = 0;
    std::vector<int> entries;

    int at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }
    std::vector<int> row_sums() const {
        std::vector<int> s(static_cast<std::size_t>(rows), 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) s[i] += at(i, j);
        return s;
    }
    std::vector<int> col_sums() const {
        std::vector<int> s(static_cast<std::size_t>(cols), 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) s[j] += at(i, j);
        return s;
    }
};

/// Dense dx x dy x dz array. margin(a) sums over the 2D slices orthogonal to axis a.
struct Table3D {
    int dx = 0, dy = 0, dz = 0;
    std::vector<int> entries;

    Table3D() = default;
    Table3D(int x, int y, int z) : dx(x), dy(y), dz(z), entries(static_cast<std::size_t>(x) * y * z, 0) {}

    int& at(int i, int j, int k) { return entries[(static_cast<std::size_t>(i) * dy + j) * dz + k]; }
    int at(int i, int j, int k) const { return entries[(static_cast<std::size_t>(i) * dy + j) * dz + k]; }

    std::vector<int> margin(int axis) const {
        std::vector<int> s(static_cast<std::size_t>(axis == 0 ? dx : axis == 1 ? dy : dz), 0);
        for (int i = 0; i < dx; ++i)
            for (int j = 0; j < dy; ++j)
                for (int k = 0; k < dz; ++k) s[axis == 0 ? i : axis == 1 ? j : k] += at(i, j, k);
        return s;
    }

    friend bool operator==(const Table3D&, const Table3D&) = default;
    friend auto operator<=>(const Table3D&, const Table3D&) = default;
};

namespace detail {

// Rows are filled one at a time; the state is the sorted multiset of
// positive column deficits, which is all the remaining count depends on.
class TableCounter {
public:
    explicit TableCounter(std::vector<int> rows) : rows_(std::move(rows)), memo_(rows_.size()) {}

    Count count(std::vector<int> cols) {
        std::erase(cols, 0);
        std::sort(cols.begin(), cols.end(), std::greater<>());
        return solve(0, cols);
    }

private:
    Count solve(std::size_t r, const std::vector<int>& deficits) {
        if (r == rows_.size()) return deficits.empty() ? 1 : 0;
        if (r + 1 == rows_.size()) {
            const int left = std::accumulate(deficits.begin(), deficits.end(), 0);
            return left == rows_[r] ? 1 : 0;
        }
        auto& memo = memo_[r];
        if (auto it = memo.find(deficits); it != memo.end()) return it->second;
        Count total = 0;
        std::vector<int> take(deficits.size(), 0);
        std::vector<int> suffix(deficits.size() + 1, 0);
        for (std::size_t j = deficits.size(); j-- > 0;) suffix[j] = suffix[j + 1] + deficits[j];
        auto rec = [&](auto&& self, std::size_t j, int left) -> void {
            if (left == 0) {
                std::vector<int> next;
                next.reserve(deficits.size());
                for (std::size_t t = 0; t < deficits.size(); ++t)
                    if (deficits[t] - take[t] > 0) next.push_back(deficits[t] - take[t]);
                std::sort(next.begin(), next.end(), std::greater<>());
                total += solve(r + 1, next);
                return;
            }
            if (j == deficits.size() || suffix[j] < left) return;
            for (int v = std::min(left, deficits[j]); v >= 0; --v) {
                take[j] = v;
                self(self, j + 1, left - v);
            }
            take[j] = 0;
        };
        rec(rec, 0, rows_[r]);
        return memo.emplace(deficits, std::move(total)).first->second;
    }

    std::vector<int> rows_;
    std::vector<std::map<std::vector<int>, Count>> memo_;
};

// 0/1 matrices: columns are placed one at a time; the state is the sorted
// multiset of remaining row sums. Equal rows are interchangeable, so a column
// of sum c picks t_v rows from each group of equal value v.
class BinaryCounter {
public:
    explicit BinaryCounter(std::vector<int> cols) : cols_(std::move(cols)), memo_(cols_.size()) {}

    Count count(std::vector<int> rows) {
        std::erase(rows, 0);
        std::sort(rows.begin(), rows.end(), std::greater<>());
        return solve(0, rows);
    }

private:
    Count solve(std::size_t c, const std::vector<int>& rows) {
        if (c == cols_.size()) return rows.empty() ? 1 : 0;
        const int need = cols_[c];
        if (need > static_cast<int>(rows.size())) return 0;
        auto& memo = memo_[c];
        if (auto it = memo.find(rows); it != memo.end()) return it->second;
        std::vector<std::pair<int, int>> groups;  // (value, multiplicity)
        for (int v : rows) {
            if (!groups.empty() && groups.back().first == v) ++groups.back().second;
            else groups.emplace_back(v, 1);
        }
        Count total = 0;
        std::vector<int> pick(groups.size(), 0);
        auto rec = [&](auto&& self, std::size_t g, int left, Count ways) -> void {
            if (left == 0) {
                std::vector<int> next;
                for (std::size_t t = 0; t < groups.size(); ++t) {
                    for (int u = 0; u < pick[t]; ++u)
                        if (groups[t].first > 1) next.push_back(groups[t].first - 1);
                    for (int u = pick[t]; u < groups[t].second; ++u) next.push_back(groups[t].first);
                }
                std::sort(next.begin(), next.end(), std::greater<>());
                total += ways * solve(c + 1, next);
                return;
            }
            if (g == groups.size()) return;
            for (int t = std::min(left, groups[g].second); t >= 0; --t) {
                pick[g] = t;
                self(self, g + 1, left - t, ways * binomial(groups[g].second, t));
            }
            pick[g] = 0;
        };
        rec(rec, 0, need, Count(1));
        return memo.emplace(rows, std::move(total)).first->second;
    }

    std::vector<int> cols_;
    std::vector<std::map<std::vector<int>, Count>> memo_;
};

}  // namespace detail

/// Contingency tables with row sums `rows` and column sums `cols` (any order, zeros allowed).
inline Count count_tables_2d(std::span<const int> rows, std::span<const int> cols) {
    const int a = std::accumulate(rows.begin(), rows.end(), 0);
    const int b = std::accumulate(cols.begin(), cols.end(), 0);
    if (a != b) throw InputError("count_tables_2d: margins have different totals");
    std::vector<int> r(rows.begin(), rows.end());
    std::erase(r, 0);
    return detail::TableCounter(std::move(r)).count(std::vector<int>(cols.begin(), cols.end()));
}

/// T(lambda, mu).
inline Count count_tables_2d(const Partition& lambda, const Partition& mu) {
    require_same_size(lambda, mu);
    return count_tables_2d(lambda.parts(), mu.parts());
}

/// 0/1 tables with the given row and column sums.
inline Count count_binary_2d(std::span<const int> rows, std::span<const int> cols) {
    const int a = std::accumulate(rows.begin(), rows.end(), 0);
    const int b = std::accumulate(cols.begin(), cols.end(), 0);
    if (a != b) throw InputError("count_binary_2d: margins have different totals");
    std::vector<int> c(cols.begin(), cols.end());
    std::erase(c, 0);
    std::sort(c.begin(), c.end(), std::greater<>());
    return detail::BinaryCounter(std::move(c)).count(std::vector<int>(rows.begin(), rows.end()));
}

inline Count count_binary_2d(const Partition& lambda, const Partition& mu) {
    require_same_size(lambda, mu);
    return count_binary_2d(lambda.parts(), mu.parts());
}

/// Calls visit(const Table2D&) for every table with the given margins, row-major DFS.
template <typename Visitor>
void for_each_table_2d(std::span<const int> rows, std::span<const int> cols, Visitor&& visit,
                       long long max_states = Limits{}.max_states) {
    if (std::accumulate(rows.begin(), rows.end(), 0) != std::accumulate(cols.begin(), cols.end(), 0)) return;
    StateBudget budget(max_states, "for_each_table_2d");
    Table2D t{static_cast<int>(rows.size()), static_cast<int>(cols.size()), {}};
    t.entries.assign(rows.size() * cols.size(), 0);
    std::vector<int> col_left(cols.begin(), cols.end());
    const int nr = t.rows, nc = t.cols;
    auto rec = [&](auto&& self, int i, int j, int row_left) -> void {
        if (i == nr) {
            budget.tick();
            visit(static_cast<const Table2D&>(t));
            return;
        }
        if (j == nc) {
            self(self, i + 1, 0, i + 1 < nr ? rows[i + 1] : 0);
            return;
        }
        int lo = 0, hi = std::min(row_left, col_left[j]);
        if (j == nc - 1) lo = row_left;
        if (i == nr - 1) lo = std::max(lo, col_left[j]);
        for (int v = hi; v >= lo; --v) {
            t.entries[static_cast<std::size_t>(i) * nc + j] = v;
            col_left[j] -= v;
            self(self, i, j + 1, row_left - v);
            col_left[j] += v;
        }
        t.entries[static_cast<std::size_t>(i) * nc + j] = 0;
    };
    if (nr == 0 || nc == 0) {
        budget.tick();
        visit(static_cast<const Table2D&>(t));
        return;
    }
    rec(rec, 0, 0, rows[0]);
}

namespace detail {

// For A in T(mu, nu), the multiset of A's positive entries as a partition,
// with how many tables share it. Symmetric in (mu, nu).
inline const std::map<Partition, Count>& slice_histogram(const Partition& mu, const Partition& nu,
                                                         long long max_states) {
    thread_local std::map<std::pair<Partition, Partition>, std::map<Partition, Count>> memo;
    auto key = mu <= nu ? std::make_pair(mu, nu) : std::make_pair(nu, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::map<Partition, Count> hist;
    for_each_table_2d(
        key.first.parts(), key.second.parts(),
        [&](const Table2D& t) { ++hist[Partition::from_multiset(t.entries)]; }, max_states);
    return memo.emplace(std::move(key), std::move(hist)).first->second;
}

inline const Count& cached_tables_2d(const Partition& lambda, const Partition& kappa) {
    thread_local std::map<std::pair<Partition, Partition>, Count> memo;
    auto key = lambda <= kappa ? std::make_pair(lambda, kappa) : std::make_pair(kappa, lambda);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Count value = count_tables_2d(key.first, key.second);
    return memo.emplace(std::move(key), std::move(value)).first->second;
}

inline const Count& cached_binary_2d(const Partition& lambda, const Partition& kappa) {
    thread_local std::map<std::pair<Partition, Partition>, Count> memo;
    auto key = std::make_pair(lambda, kappa);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Count value = count_binary_2d(lambda, kappa);
    return memo.emplace(std::move(key), std::move(value)).first->second;
}

// Picks the axis whose complementary pair has the fewest 2D tables to enumerate.
inline std::array<const Partition*, 3> slice_order(const Partition& a, const Partition& b, const Partition& c,
                                                   const Limits& limits, const char* what) {
    if (a.size() > limits.table_n)
        throw LimitError(std::string(what) + ": n = " + std::to_string(a.size()) + " exceeds table_n = " +
                         std::to_string(limits.table_n));
    const Count tbc = cached_tables_2d(b, c), tac = cached_tables_2d(a, c), tab = cached_tables_2d(a, b);
    std::array<const Partition*, 3> order{&a, &b, &c};
    Count best = tbc;
    if (tac < best) { best = tac; order = {&b, &a, &c}; }
    if (tab < best) { best = tab; order = {&c, &a, &b}; }
    if (best > limits.max_states) throw LimitError(std::string(what) + ": too many slice tables");
    return order;
}

}  // namespace detail

/// T(lambda, mu, nu) = sum over A in T(mu, nu) of T(lambda, A).
inline Count count_tables_3d(const Partition& lambda, const Partition& mu, const Partition& nu,
                             const Limits& limits = {}) {
    require_same_size(lambda, mu, nu);
    const auto order = detail::slice_order(lambda, mu, nu, limits, "count_tables_3d");
    Count total = 0;
    for (const auto& [kappa, mult] : detail::slice_histogram(*order[1], *order[2], limits.max_states))
        total += mult * detail::cached_tables_2d(*order[0], kappa);
    return total;
}

/// B(lambda, mu, nu): 0/1 tables, by the same slice decomposition with a
/// binary inner count.
inline Count count_binary_3d(const Partition& lambda, const Partition& mu, const Partition& nu,
                             const Limits& limits = {}) {
    require_same_size(lambda, mu, nu);
    const auto order = detail::slice_order(lambda, mu, nu, limits, "count_binary_3d");
    Count total = 0;
    for (const auto& [kappa, mult] : detail::slice_histogram(*order[1], *order[2], limits.max_states)) {
        if (kappa.first() > order[0]->length()) continue;
        total += mult * detail::cached_binary_2d(*order[0], kappa);
    }
    return total;
}

}  // namespace kronbound
