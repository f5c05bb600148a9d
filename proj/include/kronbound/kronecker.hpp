#pragma once

#include "kronbound/characters.hpp"
#include "kronbound/kostka.hpp"
#include "kronbound/littlewood_richardson.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace kronbound {

/// g(lambda, mu, nu) = (1/n!) sum over classes rho of |C_rho| chi^lambda chi^mu chi^nu.
inline Count kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) {
    require_same_size(lambda, mu, nu);
    const int n = lambda.size();
    const Count n_fact = factorial(n);
    Count total = 0;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        const Partition rho(parts);
        const Count& a = detail::character_memo(lambda, rho);
        if (a == 0) return;
        const Count& b = detail::character_memo(mu, rho);
        if (b == 0) return;
        const Count& c = detail::character_memo(nu, rho);
        total += (n_fact / centralizer_order(rho)) * a * b * c;
    });
    if (total % n_fact != 0)
        throw ConsistencyError("class-weighted character sum is not divisible by n! for " + lambda.to_string() +
                               " | " + mu.to_string() + " | " + nu.to_string());
    total /= n_fact;
    if (total < 0) throw ConsistencyError("negative Kronecker coefficient");
    return total;
}

namespace detail {

// For each tuple (rho^1 |- pi_1, ..., rho^s |- pi_s), the full Schur expansion
// of s_{rho^1} ... s_{rho^s}.
inline const std::vector<SchurExpansion>& block_expansions(const Partition& pi) {
    thread_local std::map<Partition, std::vector<SchurExpansion>> memo;
    if (auto it = memo.find(pi); it != memo.end()) return it->second;
    std::vector<std::vector<Partition>> choices;
    for (int part : pi.parts()) choices.push_back(generate_partitions(part));
    std::vector<SchurExpansion> out;
    std::vector<Partition> tuple(choices.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == choices.size()) {
            out.push_back(multi_lr_expansion(tuple));
            return;
        }
        for (const Partition& rho : choices[i]) {
            tuple[i] = rho;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return memo.emplace(pi, std::move(out)).first->second;
}

}  // namespace detail

/// LR(lambda, mu | pi) = sum over rho^i |- pi_i of c(lambda|rho) c(mu|rho).
inline Count multi_lr_pair_sum(const Partition& lambda, const Partition& mu, const Partition& pi) {
    Count total = 0;
    for (const SchurExpansion& e : detail::block_expansions(pi)) {
        auto a = e.find(lambda);
        if (a == e.end()) continue;
        auto b = e.find(mu);
        if (b == e.end()) continue;
        total += a->second * b->second;
    }
    return total;
}

/// Vallejo's identity g = sum_{pi dominating nu} Kinv(pi, nu) LR(lambda, mu | pi),
/// evaluated term by term.
inline Count kronecker_via_vallejo(const Partition& lambda, const Partition& mu, const Partition& nu) {
    require_same_size(lambda, mu, nu);
    const int n = lambda.size();
    if (n == 0) return 1;
    const InverseKostkaMatrix& kinv = cached_inverse_kostka(n);
    Count total = 0;
    for (const Partition& pi : kinv.index()) {
        if (!dominance_leq(nu, pi)) continue;
        const Count& coeff = kinv.at(pi, nu);
        if (coeff == 0) continue;
        total += coeff * multi_lr_pair_sum(lambda, mu, pi);
    }
    if (total < 0) throw ConsistencyError("Vallejo sum is negative for " + lambda.to_string());
    return total;
}

/// n* = |alpha| + |beta| + |gamma| + max first row; every alpha[n] is a
/// partition from here on and the sequence has stabilised.
inline int reduced_kronecker_index(const Partition& alpha, const Partition& beta, const Partition& gamma) {
    return alpha.size() + beta.size() + gamma.size() + std::max({alpha.first(), beta.first(), gamma.first()});
}

/// Stable limit of g(alpha[n], beta[n], gamma[n]); checked at n* and n*+1.
inline Count reduced_kronecker(const Partition& alpha, const Partition& beta, const Partition& gamma) {
    const int n = reduced_kronecker_index(alpha, beta, gamma);
    const Count at_n = kronecker(pad_first_row(alpha, n), pad_first_row(beta, n), pad_first_row(gamma, n));
    const Count at_next =
        kronecker(pad_first_row(alpha, n + 1), pad_first_row(beta, n + 1), pad_first_row(gamma, n + 1));
    if (at_n != at_next)
        throw ConsistencyError("reduced Kronecker coefficient did not stabilise at n = " + std::to_string(n));
    return at_n;
}

}  // namespace kronbound
