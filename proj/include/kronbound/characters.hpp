#pragma once

#include "kronbound/bigint.hpp"
#include "kronbound/partition.hpp"

#include <map>
#include <utility>
#include <vector>

namespace kronbound {

/// f^lambda = n! / prod(hook lengths).
inline Count dim_irrep(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    Count hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    return factorial(lambda.size()) / hooks;
}

/// z_mu = prod_k k^{m_k} m_k!, the centralizer order of the class of cycle type mu.
inline Count centralizer_order(const Partition& mu) {
    Count z = 1;
    int i = 0;
    while (i < mu.length()) {
        int j = i;
        while (j < mu.length() && mu[j] == mu[i]) ++j;
        const int mult = j - i;
        for (int t = 0; t < mult; ++t) z *= mu[i];
        z *= factorial(mult);
        i = j;
    }
    return z;
}

inline Count class_size(const Partition& mu) { return factorial(mu.size()) / centralizer_order(mu); }

namespace detail {

// Every way to strip a border strip of size k from lambda, paired with the
// sign (-1)^(height). Works on the beta-set lambda_i + (len - i).
inline std::vector<std::pair<Partition, int>> remove_border_strips(const Partition& lambda, int k) {
    const int len = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
    std::vector<std::pair<Partition, int>> out;
    for (int i = 0; i < len; ++i) {
        const int target = beta[i] - k;
        if (target < 0) continue;
        bool occupied = false;
        int between = 0;
        for (int j = 0; j < len; ++j) {
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++between;
        }
        if (occupied) continue;
        std::vector<int> next = beta;
        next[i] = target;
        std::sort(next.begin(), next.end(), std::greater<>());
        std::vector<int> parts(static_cast<std::size_t>(len));
        for (int j = 0; j < len; ++j) parts[j] = next[j] - (len - 1 - j);
        out.emplace_back(Partition(std::move(parts)), between % 2 == 0 ? 1 : -1);
    }
    return out;
}

inline const Count& character_memo(const Partition& lambda, const Partition& mu) {
    // Per-thread memo: concurrent callers never share mutable state.
    thread_local std::map<std::pair<Partition, Partition>, Count> memo;
    auto key = std::make_pair(lambda, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Count value = 0;
    if (mu.empty()) {
        value = lambda.empty() ? 1 : 0;
    } else {
        const int k = mu[0];
        const Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
        for (const auto& [smaller, sign] : remove_border_strips(lambda, k)) {
            const Count& sub = character_memo(smaller, rest);
            if (sign > 0) value += sub; else value -= sub;
        }
    }
    return memo.emplace(std::move(key), std::move(value)).first->second;
}

}  // namespace detail

/// chi^lambda on the class of cycle type mu (Murnaghan-Nakayama).
inline Count character(const Partition& lambda, const Partition& mu) {
    require_same_size(lambda, mu);
    return detail::character_memo(lambda, mu);
}

}  // namespace kronbound
