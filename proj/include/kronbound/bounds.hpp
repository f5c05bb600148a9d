#pragma once

#include "kronbound/barvinok.hpp"
#include "kronbound/bigint.hpp"
#include "kronbound/characters.hpp"
#include "kronbound/errors.hpp"
#include "kronbound/kostka.hpp"
#include "kronbound/kronecker.hpp"
#include "kronbound/limits.hpp"
#include "kronbound/partition.hpp"
#include "kronbound/partition_counts.hpp"
#include "kronbound/pyramids.hpp"
#include "kronbound/tables.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace kronbound {

/// A bound value: an exact integer when one was computed, otherwise only its log.
struct BoundValue {
    std::optional<Count> exact;
    double log_value = 0.0;
    std::string method;

    static BoundValue from_count(Count c, std::string method) {
        const double lv = log_count(c);
        return {std::move(c), lv, std::move(method)};
    }
    static BoundValue from_log(double lv, std::string method) { return {std::nullopt, lv, std::move(method)}; }

    std::string approx() const { return exact ? kronbound::approx(*exact) : approx_from_log(log_value); }
};

/// c <= exp(log_value), with a relative slack for rounding in the log.
inline bool count_le_log(const Count& c, double log_value, double slack = 1e-9) {
    if (c <= 0) return true;
    return log_count(c) <= log_value + slack * std::max(1.0, std::abs(log_value));
}

/// exp(log_value) <= c, same slack.
inline bool log_le_count(double log_value, const Count& c, double slack = 1e-9) {
    if (c <= 0) return log_value == -INFINITY;
    return log_value <= log_count(c) + slack * std::max(1.0, std::abs(log_value));
}

/// a <= b for two bound values, exactly when both are integers.
inline bool bound_le(const BoundValue& a, const BoundValue& b, double slack = 1e-9) {
    if (a.exact && b.exact) return *a.exact <= *b.exact;
    if (a.exact) return count_le_log(*a.exact, b.log_value, slack);
    if (b.exact) return log_le_count(a.log_value, *b.exact, slack);
    return a.log_value <= b.log_value + slack * std::max(1.0, std::abs(b.log_value));
}

/// floor(f^mu f^nu / f^lambda) with the arguments reordered so f^lambda is the largest.
inline Count bound_dimension(const Partition& lambda, const Partition& mu, const Partition& nu) {
    require_same_size(lambda, mu, nu);
    std::array<Count, 3> f{dim_irrep(lambda), dim_irrep(mu), dim_irrep(nu)};
    std::sort(f.begin(), f.end());
    return f[0] * f[1] / f[2];
}

/// Near-uniform partition of n into min(parts, n) parts.
inline Partition near_uniform(int n, long long parts) {
    if (n == 0) return Partition();
    const int k = static_cast<int>(std::min<long long>(parts, n));
    std::vector<int> v(static_cast<std::size_t>(k), n / k);
    for (int i = 0; i < n % k; ++i) ++v[static_cast<std::size_t>(i)];
    return Partition(v);
}

/// sum over B in T(lambda, mu) of K(nu, B), with B read as a composition.
inline Count kostka_chain_sum(const Partition& lambda, const Partition& mu, const Partition& nu,
                              const Limits& limits = {}) {
    require_same_size(lambda, mu, nu);
    std::map<Partition, Count> by_content;
    for_each_table_2d(
        lambda.parts(), mu.parts(), [&](const Table2D& t) { ++by_content[Partition::from_multiset(t.entries)]; },
        limits.max_states);
    Count total = 0;
    for (const auto& [content, mult] : by_content) total += mult * kostka(nu, content);
    return total;
}

/// T(lambda, mu) K(nu, tau) with tau near-uniform on l(lambda) l(mu) parts, or
/// the closed form E(lmr, n) E(lm, n) when n exceeds exact_n.
inline BoundValue bound_kostka_chain(const Partition& lambda, const Partition& mu, const Partition& nu,
                                     const Limits& limits = {}) {
    require_same_size(lambda, mu, nu);
    const int n = lambda.size();
    const long long lm = static_cast<long long>(lambda.length()) * mu.length();
    if (n == 0) return BoundValue::from_count(1, "exact");
    if (n <= limits.exact_n)
        return BoundValue::from_count(count_tables_2d(lambda, mu) * kostka(nu, near_uniform(n, lm)), "exact");
    const double lmr = static_cast<double>(lm) * nu.length();
    return BoundValue::from_log(closed_form_E(lmr, n).log_value + closed_form_E(static_cast<double>(lm), n).log_value,
                                "closed_form");
}

/// E(lmr, n): the closed form for T(lambda, mu, nu).
inline LogBound ct3_closed_form(const Partition& lambda, const Partition& mu, const Partition& nu) {
    require_same_size(lambda, mu, nu);
    if (lambda.size() == 0) return {0.0};
    const double lmr = static_cast<double>(lambda.length()) * mu.length() * nu.length();
    return closed_form_E(lmr, lambda.size());
}

/// T(lambda, mu, nu) when countable, otherwise the closed form.
inline BoundValue bound_ct3(const Partition& lambda, const Partition& mu, const Partition& nu,
                            const Limits& limits = {}) {
    require_same_size(lambda, mu, nu);
    if (lambda.size() <= limits.table_n) {
        try {
            return BoundValue::from_count(count_tables_3d(lambda, mu, nu, limits), "exact");
        } catch (const LimitError&) {
        }
    }
    return BoundValue::from_log(ct3_closed_form(lambda, mu, nu).log_value, "closed_form");
}

/// B(lambda', mu', nu').
inline Count bound_binary(const Partition& lambda, const Partition& mu, const Partition& nu,
                          const Limits& limits = {}) {
    require_same_size(lambda, mu, nu);
    if (lambda.size() > limits.table_n)
        throw LimitError("binary count of size " + std::to_string(lambda.size()) + " exceeds table_n = " +
                         std::to_string(limits.table_n));
    return count_binary_3d(conjugate(lambda), conjugate(mu), conjugate(nu), limits);
}

struct ReducedTerm {
    int n = 0;
    int v = 0;
    double log_value = 0.0;
};

struct ReducedBound {
    LogBound bound;
    std::vector<ReducedTerm> terms;
};

/// Upper bound for the reduced Kronecker coefficient, with v = (N - n) / 2.
inline ReducedBound bound_reduced(const Partition& alpha, const Partition& beta, const Partition& gamma) {
    const int a = alpha.size(), b = beta.size(), c = gamma.size();
    const long long l = alpha.length(), m = beta.length(), r = gamma.length();
    const int total = a + b + c;
    // E(s, w) with s = 0 only counts the empty table
    auto log_e = [](long long s, int w) -> std::optional<double> {
        if (w == 0) return 0.0;
        if (s == 0) return std::nullopt;
        return closed_form_E(static_cast<double>(s), w).log_value;
    };
    ReducedBound out;
    for (int n = total % 2; n <= std::min({a, b, c}); n += 2) {
        const int v = (total - n) / 2;
        if (v - a < 0 || v - b < 0 || v - c < 0) continue;
        double sum = 0.0;
        bool ok = true;
        for (auto part : {log_e(l * m * r, n), log_e(l * m, v - c), log_e(l * r, v - b), log_e(m * r, v - a)}) {
            if (!part) { ok = false; break; }
            sum += *part;
        }
        if (ok) out.terms.push_back({n, v, sum});
    }
    if (out.terms.empty()) {
        out.bound.log_value = -INFINITY;
        return out;
    }
    double top = -INFINITY;
    for (const auto& t : out.terms) top = std::max(top, t.log_value);
    double acc = 0.0;
    for (const auto& t : out.terms) acc += std::exp(t.log_value - top);
    out.bound.log_value = top + std::log(acc);
    return out;
}

struct MultiLrBound {
    LogBound bound;
    std::array<int, 3> order{0, 1, 2};   // positions of the arguments used as (lambda, mu, nu)
};

inline double multi_lr_log(const Partition& lambda, const Partition& mu, const Partition& nu) {
    const int n = lambda.size();
    const double l = lambda.length(), m = mu.length(), r = nu.length();
    const double log_p = log_count(count_partitions(n));
    return std::lgamma(r + 1.0) + (3.0 * r - 2.0) * log_p + (r - 1.0) * std::log(static_cast<double>(n)) +
           r * l * l / 2.0 * std::log(l + lambda.first()) + r * m * m / 2.0 * std::log(m + mu.first());
}

/// Multi-LR bound, minimized over the six orderings of the triple.
inline MultiLrBound bound_multi_lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
    require_same_size(lambda, mu, nu);
    if (lambda.size() == 0) return {};
    const std::array<const Partition*, 3> args{&lambda, &mu, &nu};
    std::array<int, 3> perm{0, 1, 2};
    MultiLrBound best;
    best.bound.log_value = INFINITY;
    do {
        const double v = multi_lr_log(*args[perm[0]], *args[perm[1]], *args[perm[2]]);
        if (v < best.bound.log_value) {
            best.bound.log_value = v;
            best.order = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Pyr(lambda', mu', nu'), a lower bound.
inline Count lower_bound_pyramid(const Partition& lambda, const Partition& mu, const Partition& nu,
                                 const Limits& limits = {}) {
    require_same_size(lambda, mu, nu);
    if (lambda.size() > limits.pyramid_n)
        throw LimitError("pyramid count of size " + std::to_string(lambda.size()) + " exceeds pyramid_n = " +
                         std::to_string(limits.pyramid_n));
    return count_pyramids(conjugate(lambda), conjugate(mu), conjugate(nu), limits);
}

enum class BoundKind { Upper, Lower };

struct BoundEntry {
    std::string name;
    BoundKind kind = BoundKind::Upper;
    BoundValue value;
};

struct UnavailableBound {
    std::string name;
    std::string reason;
};

struct BoundReport {
    std::array<Partition, 3> triple;
    std::optional<Count> exact;
    std::vector<BoundEntry> bounds;
    std::vector<UnavailableBound> unavailable;
    std::string tightest;

    const BoundEntry* find(const std::string& name) const {
        for (const auto& b : bounds)
            if (b.name == name) return &b;
        return nullptr;
    }
};

inline const std::vector<std::string>& bound_names() {
    static const std::vector<std::string> names{"dimension", "kostka_chain", "ct3",      "ct3_closed_form",
                                                "barvinok_3d", "binary",     "multi_lr", "pyramid"};
    return names;
}

/// Every applicable bound, plus the exact coefficient when n <= exact_n. An
/// empty `only` keeps all bounds.
inline BoundReport compare_all(const Partition& lambda, const Partition& mu, const Partition& nu,
                               const Limits& limits = {}, const std::vector<std::string>& only = {}) {
    require_same_size(lambda, mu, nu);
    for (const auto& name : only)
        if (std::find(bound_names().begin(), bound_names().end(), name) == bound_names().end())
            throw InputError("unknown bound '" + name + "'");
    BoundReport report;
    report.triple = {lambda, mu, nu};
    const int n = lambda.size();
    if (n <= limits.exact_n) report.exact = kronecker(lambda, mu, nu);

    auto wanted = [&](const std::string& name) {
        return only.empty() || std::find(only.begin(), only.end(), name) != only.end();
    };
    auto attempt = [&](const std::string& name, BoundKind kind, const std::function<BoundValue()>& run) {
        if (!wanted(name)) return;
        try {
            report.bounds.push_back({name, kind, run()});
        } catch (const LimitError& e) {
            report.unavailable.push_back({name, e.what()});
        } catch (const ConvergenceError& e) {
            report.unavailable.push_back({name, e.what()});
        } catch (const InputError& e) {
            report.unavailable.push_back({name, e.what()});
        }
    };

    attempt("dimension", BoundKind::Upper,
            [&] { return BoundValue::from_count(bound_dimension(lambda, mu, nu), "exact"); });
    attempt("kostka_chain", BoundKind::Upper, [&] { return bound_kostka_chain(lambda, mu, nu, limits); });
    attempt("ct3", BoundKind::Upper, [&] { return bound_ct3(lambda, mu, nu, limits); });
    attempt("ct3_closed_form", BoundKind::Upper,
            [&] { return BoundValue::from_log(ct3_closed_form(lambda, mu, nu).log_value, "closed_form"); });
    attempt("barvinok_3d", BoundKind::Upper, [&] {
        if (n == 0) return BoundValue::from_count(1, "exact");
        return BoundValue::from_log(maximize_g_3d(lambda, mu, nu).bound.log_value, "barvinok");
    });
    attempt("binary", BoundKind::Upper,
            [&] { return BoundValue::from_count(bound_binary(lambda, mu, nu, limits), "exact"); });
    attempt("multi_lr", BoundKind::Upper, [&] {
        const auto b = bound_multi_lr(lambda, mu, nu);
        const auto& o = b.order;
        return BoundValue::from_log(b.bound.log_value, "closed_form:order=" + std::to_string(o[0]) +
                                                           std::to_string(o[1]) + std::to_string(o[2]));
    });
    attempt("pyramid", BoundKind::Lower,
            [&] { return BoundValue::from_count(lower_bound_pyramid(lambda, mu, nu, limits), "exact"); });

    const BoundEntry* best = nullptr;
    for (const auto& b : report.bounds)
        if (b.kind == BoundKind::Upper && (!best || !bound_le(best->value, b.value, 0.0)))
            best = &b;
    if (best) report.tightest = best->name;
    return report;
}

/// Names of bounds in the report that contradict the exact value.
inline std::vector<std::string> report_violations(const BoundReport& report) {
    std::vector<std::string> out;
    if (!report.exact) return out;
    const BoundValue g = BoundValue::from_count(*report.exact, "exact");
    for (const auto& b : report.bounds) {
        const bool ok = b.kind == BoundKind::Upper ? bound_le(g, b.value) : bound_le(b.value, g);
        if (!ok) out.push_back(b.name);
    }
    return out;
}

}  // namespace kronbound
