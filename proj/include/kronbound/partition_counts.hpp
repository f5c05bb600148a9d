#pragma once

#include "kronbound/bigint.hpp"
#include "kronbound/errors.hpp"

#include <mutex>
#include <vector>

namespace kronbound {

/// p(n) by Euler's pentagonal recurrence. The coefficient table is shared and
/// grown on demand.
inline Count count_partitions(int n) {
    if (n < 0) throw InputError("count_partitions: n must be non-negative");
    static std::mutex mutex;
    static std::vector<Count> table{1};
    std::lock_guard lock(mutex);
    for (int m = static_cast<int>(table.size()); m <= n; ++m) {
        Count total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            if (g1 > m) break;
            const int g2 = k * (3 * k + 1) / 2;
            const bool plus = (k % 2) == 1;
            if (plus) total += table[m - g1]; else total -= table[m - g1];
            if (g2 <= m) {
                if (plus) total += table[m - g2]; else total -= table[m - g2];
            }
        }
        table.push_back(std::move(total));
    }
    return table[n];
}

/// p2(n), the number of plane partitions of n: coefficients of
/// prod_k (1 - q^k)^(-k), via n p2(n) = sum_k sigma_2(k) p2(n - k).
inline Count count_plane_partitions(int n) {
    if (n < 0) throw InputError("count_plane_partitions: n must be non-negative");
    static std::mutex mutex;
    static std::vector<Count> table{1};
    static std::vector<long long> sigma2{0};
    std::lock_guard lock(mutex);
    if (static_cast<int>(sigma2.size()) <= n) {
        sigma2.assign(static_cast<std::size_t>(n) + 1, 0);
        for (long long d = 1; d <= n; ++d)
            for (long long m = d; m <= n; m += d) sigma2[m] += d * d;
    }
    for (int m = static_cast<int>(table.size()); m <= n; ++m) {
        Count total = 0;
        for (int k = 1; k <= m; ++k) total += table[m - k] * sigma2[k];
        if (total % m != 0) throw ConsistencyError("plane partition recurrence is not integral");
        table.push_back(total / m);
    }
    return table[n];
}

}  // namespace kronbound
