#pragma once

#include "kronbound/bigint.hpp"
#include "kronbound/limits.hpp"
#include "kronbound/partition.hpp"
#include "kronbound/tables.hpp"

#include <compare>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace kronbound {

struct MarginTriple {
    Partition x, y, z;

    friend bool operator==(const MarginTriple&, const MarginTriple&) = default;
    friend auto operator<=>(const MarginTriple&, const MarginTriple&) = default;
};

/// A downward-closed 0/1 table, stored through its column heights: cell
/// (i, j, k) is filled iff k < height(i, j). The height array is a plane
/// partition (rows and columns weakly decrease).
class Pyramid {
public:
    Pyramid() = default;
    explicit Pyramid(std::vector<std::vector<int>> heights) : heights_(std::move(heights)) {
        while (!heights_.empty() && heights_.back().empty()) heights_.pop_back();
        for (std::size_t i = 0; i < heights_.size(); ++i) {
            auto& row = heights_[i];
            while (!row.empty() && row.back() == 0) row.pop_back();
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (row[j] <= 0 || (j > 0 && row[j] > row[j - 1]) ||
                    (i > 0 && (j >= heights_[i - 1].size() || row[j] > heights_[i - 1][j])))
                    throw InputError("height array is not a plane partition");
            }
            if (row.empty()) throw InputError("height array has an empty interior row");
        }
    }

    /// Recovers the height array of a 0/1 table; nullopt unless it is a pyramid.
    static std::optional<Pyramid> from_table(const Table3D& t) {
        std::vector<std::vector<int>> h(static_cast<std::size_t>(t.dx), std::vector<int>(static_cast<std::size_t>(t.dy), 0));
        for (int i = 0; i < t.dx; ++i)
            for (int j = 0; j < t.dy; ++j)
                for (int k = 0; k < t.dz; ++k) {
                    const int v = t.at(i, j, k);
                    if (v != 0 && v != 1) return std::nullopt;
                    if (v == 1) {
                        if ((i > 0 && t.at(i - 1, j, k) != 1) || (j > 0 && t.at(i, j - 1, k) != 1) ||
                            (k > 0 && t.at(i, j, k - 1) != 1))
                            return std::nullopt;
                        h[i][j] = k + 1;
                    }
                }
        return Pyramid(std::move(h));
    }

    const std::vector<std::vector<int>>& heights() const noexcept { return heights_; }

    int size() const {
        int s = 0;
        for (const auto& row : heights_)
            for (int v : row) s += v;
        return s;
    }

    MarginTriple margins() const {
        std::vector<int> rows, cols, levels;
        for (std::size_t i = 0; i < heights_.size(); ++i) {
            int sum = 0;
            for (std::size_t j = 0; j < heights_[i].size(); ++j) {
                const int v = heights_[i][j];
                sum += v;
                if (cols.size() <= j) cols.resize(j + 1, 0);
                cols[j] += v;
                if (static_cast<int>(levels.size()) < v) levels.resize(static_cast<std::size_t>(v), 0);
                for (int k = 0; k < v; ++k) ++levels[k];
            }
            rows.push_back(sum);
        }
        return {Partition(rows), Partition(cols), Partition(levels)};
    }

    Table3D to_table() const {
        const MarginTriple m = margins();
        Table3D t(m.x.length(), m.y.length(), m.z.length());
        for (std::size_t i = 0; i < heights_.size(); ++i)
            for (std::size_t j = 0; j < heights_[i].size(); ++j)
                for (int k = 0; k < heights_[i][j]; ++k) t.at(static_cast<int>(i), static_cast<int>(j), k) = 1;
        return t;
    }

    /// Swaps the first two coordinates.
    Pyramid transposed() const {
        std::vector<std::vector<int>> h;
        for (std::size_t i = 0; i < heights_.size(); ++i)
            for (std::size_t j = 0; j < heights_[i].size(); ++j) {
                if (h.size() <= j) h.resize(j + 1);
                h[j].push_back(heights_[i][j]);
            }
        return Pyramid(std::move(h));
    }

    /// Cyclic relabelling of the axes (x, y, z) -> (y, z, x).
    Pyramid rotated() const {
        const Table3D t = to_table();
        Table3D r(t.dy, t.dz, t.dx);
        for (int i = 0; i < t.dx; ++i)
            for (int j = 0; j < t.dy; ++j)
                for (int k = 0; k < t.dz; ++k) r.at(j, k, i) = t.at(i, j, k);
        return *from_table(r);
    }

    friend bool operator==(const Pyramid&, const Pyramid&) = default;
    friend auto operator<=>(const Pyramid&, const Pyramid&) = default;

private:
    std::vector<std::vector<int>> heights_;
};

inline bool is_pyramid(const Table3D& t) { return Pyramid::from_table(t).has_value(); }

/// Calls visit(const Pyramid&) for every plane partition of n.
template <typename Visitor>
void for_each_plane_partition(int n, Visitor&& visit, const Limits& limits = {}) {
    if (n < 0) throw InputError("plane partition size must be non-negative");
    if (n > limits.pyramid_n)
        throw LimitError("plane partitions of " + std::to_string(n) + " exceed pyramid_n = " +
                         std::to_string(limits.pyramid_n));
    StateBudget budget(limits.max_states, "for_each_plane_partition");
    std::vector<std::vector<int>> h;
    auto rec = [&](auto&& self, int remaining) -> void {
        // h.back() is the row being built
        const std::size_t j = h.back().size();
        if (j > 0) {
            // close this row
            if (remaining == 0) {
                budget.tick();
                visit(Pyramid(h));
            } else {
                h.push_back({});
                self(self, remaining);
                h.pop_back();
            }
        }
        const std::size_t i = h.size() - 1;
        int cap = remaining;
        if (j > 0) cap = std::min(cap, h[i][j - 1]);
        if (i > 0) {
            if (j >= h[i - 1].size()) return;
            cap = std::min(cap, h[i - 1][j]);
        }
        for (int v = cap; v >= 1; --v) {
            h[i].push_back(v);
            self(self, remaining - v);
            h[i].pop_back();
        }
    };
    if (n == 0) {
        budget.tick();
        visit(Pyramid());
        return;
    }
    h.push_back({});
    rec(rec, n);
}

/// Number of pyramids (plane partitions of n) per margin triple.
inline std::map<MarginTriple, Count> pyramid_margin_histogram(int n, const Limits& limits = {}) {
    std::map<MarginTriple, Count> hist;
    for_each_plane_partition(n, [&](const Pyramid& p) { ++hist[p.margins()]; }, limits);
    return hist;
}

/// All pyramids with margins (lambda, mu, nu): plane partitions whose row sums
/// are lambda, column sums mu and level sizes nu, found by a margin-pruned search.
template <typename Visitor>
void for_each_pyramid(const Partition& lambda, const Partition& mu, const Partition& nu, Visitor&& visit,
                      const Limits& limits = {}) {
    require_same_size(lambda, mu, nu);
    StateBudget budget(limits.max_states * 4, "for_each_pyramid");
    const int rows = lambda.length();
    if (rows == 0) {
        visit(Pyramid());
        return;
    }
    std::vector<std::vector<int>> h(static_cast<std::size_t>(rows));
    std::vector<int> col(static_cast<std::size_t>(mu.length()), 0);
    std::vector<int> level(static_cast<std::size_t>(nu.length()), 0);
    auto rec = [&](auto&& self, int i, int row_left) -> void {
        budget.tick();
        auto& row = h[i];
        const std::size_t j = row.size();
        if (row_left == 0) {
            if (i + 1 == rows) {
                if (col == mu.vec() && level == nu.vec()) visit(Pyramid(h));
            } else {
                self(self, i + 1, lambda[i + 1]);
            }
            return;
        }
        const std::size_t max_len = i == 0 ? static_cast<std::size_t>(mu.length()) : h[i - 1].size();
        if (j >= max_len) return;
        int cap = std::min(row_left, mu[j] - col[j]);
        cap = std::min(cap, nu.length());
        if (j > 0) cap = std::min(cap, row[j - 1]);
        if (i > 0) cap = std::min(cap, h[i - 1][j]);
        const int slots = static_cast<int>(max_len - j);
        for (int v = cap; v >= 1; --v) {
            if (static_cast<long long>(v) * slots < row_left) break;
            bool ok = true;
            for (int k = 0; k < v; ++k)
                if (level[k] + 1 > nu[k]) { ok = false; break; }
            if (!ok) continue;
            for (int k = 0; k < v; ++k) ++level[k];
            col[j] += v;
            row.push_back(v);
            self(self, i, row_left - v);
            row.pop_back();
            col[j] -= v;
            for (int k = 0; k < v; ++k) --level[k];
        }
    };
    rec(rec, 0, lambda[0]);
}

inline std::vector<Pyramid> enumerate_pyramids(const Partition& lambda, const Partition& mu, const Partition& nu,
                                               const Limits& limits = {}) {
    std::vector<Pyramid> out;
    for_each_pyramid(lambda, mu, nu, [&](const Pyramid& p) { out.push_back(p); }, limits);
    return out;
}

/// Pyr(lambda, mu, nu).
inline Count count_pyramids(const Partition& lambda, const Partition& mu, const Partition& nu,
                            const Limits& limits = {}) {
    Count total = 0;
    for_each_pyramid(lambda, mu, nu, [&](const Pyramid&) { ++total; }, limits);
    return total;
}

}  // namespace kronbound
