#pragma once

#include "kronbound/bigint.hpp"
#include "kronbound/partition.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace kronbound {

namespace detail {

// Counts LR tableaux of shape lambda/mu and content nu: rows weakly increase,
// columns strictly increase, and the reverse reading word (right to left,
// top to bottom) is a lattice word.
inline long long count_lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu) {
    const int rows = lambda.length();
    for (int i = 0; i < std::max(rows, mu.length()); ++i)
        if (mu[i] > lambda[i]) return 0;
    if (nu.length() > rows) return 0;

    struct Cell { int row, col; };
    std::vector<Cell> cells;
    for (int i = 0; i < rows; ++i)
        for (int j = lambda[i] - 1; j >= mu[i]; --j) cells.push_back({i, j});

    std::vector<std::vector<int>> fill(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) fill[i].assign(static_cast<std::size_t>(lambda[i]), 0);
    std::vector<int> used(static_cast<std::size_t>(nu.length()) + 1, 0);
    const int letters = nu.length();

    long long total = 0;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        const auto [r, c] = cells[idx];
        int hi = letters;
        if (c + 1 < lambda[r] && c + 1 >= mu[r]) hi = std::min(hi, fill[r][c + 1]);
        hi = std::min(hi, r + 1);
        int lo = 1;
        if (r > 0 && c >= mu[r - 1]) lo = fill[r - 1][c] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (used[v] >= nu[v - 1]) continue;
            if (v > 1 && used[v] + 1 > used[v - 1]) continue;
            ++used[v];
            fill[r][c] = v;
            self(self, idx + 1);
            --used[v];
        }
        fill[r][c] = 0;
    };
    rec(rec, 0);
    return total;
}

}  // namespace detail

/// c^lambda_{mu,nu}.
inline Count lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size())
        throw InputError("lr_coefficient: |lambda| must equal |mu| + |nu|");
    return detail::count_lr_tableaux(lambda, mu, nu);
}

using SchurExpansion = std::map<Partition, Count>;

/// s_mu * s_nu expanded in Schur functions (memoized per thread).
inline const SchurExpansion& lr_product(const Partition& mu, const Partition& nu) {
    thread_local std::map<std::pair<Partition, Partition>, SchurExpansion> memo;
    auto key = mu <= nu ? std::make_pair(mu, nu) : std::make_pair(nu, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    SchurExpansion out;
    const int n = mu.size() + nu.size();
    const int max_len = mu.length() + nu.length();
    for (const Partition& lambda : generate_partitions(n, max_len, mu.first() + nu.first())) {
        bool contains = true;
        for (int i = 0; i < std::max(mu.length(), nu.length()); ++i)
            if (lambda[i] < mu[i] || lambda[i] < nu[i]) contains = false;
        if (!contains) continue;
        const long long c = detail::count_lr_tableaux(lambda, key.first, key.second);
        if (c != 0) out.emplace(lambda, c);
    }
    return memo.emplace(std::move(key), std::move(out)).first->second;
}

/// Expansion of s_{rho^1} * ... * s_{rho^s}, folding left to right. Shapes not
/// contained in `bound` (when given) are dropped at every step.
inline SchurExpansion multi_lr_expansion(const std::vector<Partition>& rhos, const Partition* bound = nullptr) {
    SchurExpansion current{{Partition(), 1}};
    for (const Partition& rho : rhos) {
        SchurExpansion next;
        for (const auto& [kappa, coeff] : current) {
            for (const auto& [shape, c] : lr_product(kappa, rho)) {
                if (bound) {
                    bool inside = shape.length() <= bound->length();
                    for (int i = 0; inside && i < shape.length(); ++i) inside = shape[i] <= (*bound)[i];
                    if (!inside) continue;
                }
                next[shape] += coeff * c;
            }
        }
        current = std::move(next);
    }
    return current;
}

/// c(lambda | rho^1, ..., rho^s): multiplicity of s_lambda in the product.
inline Count multi_lr(const Partition& lambda, const std::vector<Partition>& rhos) {
    int total = 0;
    for (const Partition& rho : rhos) total += rho.size();
    if (total != lambda.size()) throw InputError("multi_lr: |lambda| must equal the sum of the block sizes");
    const SchurExpansion expansion = multi_lr_expansion(rhos, &lambda);
    auto it = expansion.find(lambda);
    return it == expansion.end() ? Count(0) : it->second;
}

}  // namespace kronbound
