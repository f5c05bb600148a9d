#pragma once

// Slow reference implementations, deliberately written differently from the
// library code they check.

#include "kronbound/bigint.hpp"
#include "kronbound/partition.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using kronbound::Count;
using kronbound::Partition;

// standard Young tableaux by removing a corner cell
inline long long syt_count(std::vector<int> shape) {
    static std::map<std::vector<int>, long long> memo;
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (shape.empty()) return 1;
    if (auto it = memo.find(shape); it != memo.end()) return it->second;
    long long total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        const bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
        if (!corner) continue;
        auto smaller = shape;
        --smaller[i];
        total += syt_count(smaller);
    }
    memo[shape] = total;
    return total;
}

// all permutations of {0..n-1}, grouped by cycle type
inline std::map<Partition, long long> class_sizes_by_permutation(int n) {
    static std::map<int, std::map<Partition, long long>> memo;
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::map<Partition, long long> out;
    do {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        std::vector<int> cycles;
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = perm[j]) {
                seen[j] = true;
                ++len;
            }
            cycles.push_back(len);
        }
        ++out[Partition::from_multiset(cycles)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    memo[n] = out;
    return out;
}

using Poly = std::map<std::vector<int>, long long>;

// Frobenius: chi^lambda(mu) = [x^(lambda + delta)] a_delta * p_mu in l(lambda) variables
inline long long frobenius_character(const Partition& lambda, const Partition& mu) {
    static std::map<std::pair<Partition, Partition>, long long> memo;
    if (auto it = memo.find({lambda, mu}); it != memo.end()) return it->second;
    const int vars = std::max(1, lambda.length());
    Poly p{{std::vector<int>(static_cast<std::size_t>(vars), 0), 1}};
    for (int part : mu.parts()) {
        Poly next;
        for (const auto& [mono, c] : p)
            for (int v = 0; v < vars; ++v) {
                auto m = mono;
                m[v] += part;
                next[m] += c;
            }
        p.swap(next);
    }
    std::vector<int> target(static_cast<std::size_t>(vars));
    for (int i = 0; i < vars; ++i) target[i] = lambda[i] + vars - 1 - i;
    std::vector<int> sigma(static_cast<std::size_t>(vars));
    std::iota(sigma.begin(), sigma.end(), 0);
    long long total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < vars; ++i)
            for (int j = i + 1; j < vars; ++j)
                if (sigma[i] > sigma[j]) ++inversions;
        std::vector<int> need(static_cast<std::size_t>(vars));
        bool ok = true;
        for (int i = 0; i < vars; ++i) {
            need[i] = target[i] - (vars - 1 - sigma[i]);
            if (need[i] < 0) ok = false;
        }
        if (!ok) continue;
        auto it = p.find(need);
        if (it != p.end()) total += (inversions % 2 ? -1 : 1) * it->second;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    memo[{lambda, mu}] = total;
    return total;
}

inline long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// g = (1/n!) sum over permutations of chi chi chi, classes counted by brute force
inline long long kronecker(const Partition& a, const Partition& b, const Partition& c) {
    const int n = a.size();
    long long total = 0;
    for (const auto& [mu, size] : class_sizes_by_permutation(n))
        total += size * frobenius_character(a, mu) * frobenius_character(b, mu) * frobenius_character(c, mu);
    return total / factorial(n);
}

// semistandard tableaux of a shape with a given content (any order), by filling cells
inline long long kostka(const Partition& shape, const std::vector<int>& content) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < shape.length(); ++i)
        for (int j = 0; j < shape[i]; ++j) cells.push_back({i, j});
    std::vector<std::vector<int>> t(static_cast<std::size_t>(shape.length()));
    for (int i = 0; i < shape.length(); ++i) t[i].assign(static_cast<std::size_t>(shape[i]), 0);
    std::vector<int> left = content;
    const int k = static_cast<int>(content.size());
    long long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const auto [i, j] = cells[idx];
        for (int v = 1; v <= k; ++v) {
            if (left[v - 1] == 0) continue;
            if (j > 0 && t[i][j - 1] > v) continue;
            if (i > 0 && t[i - 1][j] >= v) continue;
            t[i][j] = v;
            --left[v - 1];
            rec(idx + 1);
            ++left[v - 1];
        }
        t[i][j] = 0;
    };
    if (std::accumulate(content.begin(), content.end(), 0) != shape.size()) return 0;
    rec(0);
    return count;
}

// c^lambda_{mu nu} through restriction of characters to S_a x S_b
inline long long lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
    const int a = mu.size(), b = nu.size();
    if (lambda.size() != a + b) return 0;
    const auto ca = class_sizes_by_permutation(a);
    const auto cb = class_sizes_by_permutation(b);
    long long total = 0;
    for (const auto& [rho, sr] : ca)
        for (const auto& [sigma, ss] : cb) {
            std::vector<int> joined = rho.vec();
            joined.insert(joined.end(), sigma.vec().begin(), sigma.vec().end());
            total += sr * ss * frobenius_character(lambda, Partition::from_multiset(joined)) *
                     frobenius_character(mu, rho) * frobenius_character(nu, sigma);
        }
    return total / (factorial(a) * factorial(b));
}

// multi-LR through restriction to a Young subgroup
inline long long multi_lr(const Partition& lambda, const std::vector<Partition>& rhos) {
    std::vector<std::vector<std::pair<Partition, long long>>> classes;
    long long denom = 1;
    int total_size = 0;
    for (const auto& r : rhos) {
        const auto cs = class_sizes_by_permutation(r.size());
        classes.emplace_back(cs.begin(), cs.end());
        denom *= factorial(r.size());
        total_size += r.size();
    }
    if (total_size != lambda.size()) return 0;
    long long total = 0;
    std::vector<int> joined;
    std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long weight) {
        if (i == rhos.size()) {
            total += weight * frobenius_character(lambda, Partition::from_multiset(joined));
            return;
        }
        for (const auto& [cls, size] : classes[i]) {
            const std::size_t mark = joined.size();
            joined.insert(joined.end(), cls.vec().begin(), cls.vec().end());
            rec(i + 1, weight * size * frobenius_character(rhos[i], cls));
            joined.resize(mark);
        }
    };
    rec(0, 1);
    return total / denom;
}

// all non-negative integer arrays with the given margins, cell by cell;
// `cap` bounds every entry (1 for binary arrays)
inline long long tables(const std::vector<std::vector<int>>& margins, int cap) {
    const int axes = static_cast<int>(margins.size());
    std::vector<int> dims;
    for (const auto& m : margins) dims.push_back(static_cast<int>(m.size()));
    int cells = 1;
    for (int d : dims) cells *= d;
    std::vector<std::vector<int>> left = margins;
    long long count = 0;
    std::function<void(int)> rec = [&](int c) {
        if (c == cells) {
            for (const auto& m : left)
                for (int v : m)
                    if (v != 0) return;
            ++count;
            return;
        }
        std::vector<int> idx(static_cast<std::size_t>(axes));
        int rest = c;
        for (int a = axes - 1; a >= 0; --a) {
            idx[a] = rest % dims[a];
            rest /= dims[a];
        }
        int hi = cap;
        for (int a = 0; a < axes; ++a) hi = std::min(hi, left[a][idx[a]]);
        for (int v = 0; v <= hi; ++v) {
            for (int a = 0; a < axes; ++a) left[a][idx[a]] -= v;
            rec(c + 1);
            for (int a = 0; a < axes; ++a) left[a][idx[a]] += v;
        }
    };
    rec(0);
    return count;
}

inline long long tables(const std::vector<Partition>& margins, int cap) {
    std::vector<std::vector<int>> m;
    for (const auto& p : margins) m.push_back(p.vec());
    return tables(m, cap);
}

using Cells = std::set<std::array<int, 3>>;

// plane partitions of every size up to n, grown one addable cube at a time
inline std::vector<std::set<Cells>> plane_partitions_by_growth(int n) {
    std::vector<std::set<Cells>> by_size(static_cast<std::size_t>(n + 1));
    by_size[0].insert(Cells{});
    for (int s = 0; s < n; ++s)
        for (const auto& shape : by_size[s]) {
            std::vector<std::array<int, 3>> candidates{{0, 0, 0}};
            for (const auto& c : shape)
                for (int a = 0; a < 3; ++a) {
                    auto d = c;
                    ++d[a];
                    candidates.push_back(d);
                }
            for (const auto& c : candidates) {
                if (shape.count(c)) continue;
                bool addable = true;
                for (int a = 0; a < 3; ++a) {
                    if (c[a] == 0) continue;
                    auto d = c;
                    --d[a];
                    if (!shape.count(d)) addable = false;
                }
                if (!addable) continue;
                auto grown = shape;
                grown.insert(c);
                by_size[s + 1].insert(grown);
            }
        }
    return by_size;
}

inline std::array<Partition, 3> margins_of(const Cells& cells) {
    std::array<std::vector<int>, 3> m;
    for (const auto& c : cells)
        for (int a = 0; a < 3; ++a) {
            if (static_cast<int>(m[a].size()) <= c[a]) m[a].resize(static_cast<std::size_t>(c[a] + 1), 0);
            ++m[a][c[a]];
        }
    return {Partition::from_multiset(m[0]), Partition::from_multiset(m[1]), Partition::from_multiset(m[2])};
}

// partitions of n into parts <= k
inline Count partitions(int n) {
    std::vector<std::vector<Count>> t(static_cast<std::size_t>(n + 1), std::vector<Count>(static_cast<std::size_t>(n + 1), 0));
    for (int k = 0; k <= n; ++k) t[0][k] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k) t[m][k] = t[m][k - 1] + (m >= k ? t[m - k][k] : Count(0));
    return t[n][n];
}

// dominance by prefix sums over the longer length, written independently
inline bool dominated(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    for (int i = 0; i < std::max(a.length(), b.length()); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa > sb) return false;
    }
    return true;
}

// random partition of n from a random composition; fixed seed per caller
inline Partition random_partition(int n, std::mt19937& rng) {
    std::vector<int> parts;
    int left = n;
    while (left > 0) {
        std::uniform_int_distribution<int> d(1, left);
        const int v = d(rng);
        parts.push_back(v);
        left -= v;
    }
    return Partition::from_multiset(parts);
}

}  // namespace oracle
