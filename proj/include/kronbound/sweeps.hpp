#pragma once

#include "kronbound/barvinok.hpp"
#include "kronbound/bounds.hpp"
#include "kronbound/characters.hpp"
#include "kronbound/kostka.hpp"
#include "kronbound/kronecker.hpp"
#include "kronbound/limits.hpp"
#include "kronbound/partition.hpp"
#include "kronbound/tables.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace kronbound {

struct Violation {
    std::string item;    // the triple or pair, e.g. "(2,1) (2,1) (2,1)"
    std::string check;   // which inequality or identity
    std::string lhs;
    std::string rhs;

    friend bool operator==(const Violation&, const Violation&) = default;
    friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct SweepResult {
    int n = 0;
    std::string suite;
    long long checked = 0;
    std::vector<Violation> violations;
    std::map<std::string, long long> tightest;   // sandwich only: how often each bound was smallest
    double wall_seconds = 0.0;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"sandwich", "rsk",      "dominance", "majorization",
                                                "barvinok", "vallejo", "symmetry"};
    return names;
}

namespace detail {

struct SweepChunk {
    long long checked = 0;
    std::vector<Violation> violations;
    std::map<std::string, long long> tightest;

    void check(bool ok, const std::string& item, const std::string& what, const std::string& lhs,
               const std::string& rhs) {
        ++checked;
        if (!ok) violations.push_back({item, what, lhs, rhs});
    }
};

inline std::string show(const Partition& a) { return a.to_string(); }
inline std::string show(const Partition& a, const Partition& b) { return a.to_string() + " " + b.to_string(); }
inline std::string show(const Partition& a, const Partition& b, const Partition& c) {
    return a.to_string() + " " + b.to_string() + " " + c.to_string();
}
inline std::string show(const BoundValue& v) { return v.exact ? to_decimal(*v.exact) : "exp(" + std::to_string(v.log_value) + ")"; }

/// Runs body(i, chunk) for i in [0, count) on `workers` threads; the merged
/// result does not depend on the worker count.
inline SweepChunk run_parallel(std::size_t count, int workers,
                               const std::function<void(std::size_t, SweepChunk&)>& body) {
    workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(count, 1))));
    std::vector<SweepChunk> chunks(static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    auto work = [&](int w) {
        try {
            for (std::size_t i = static_cast<std::size_t>(w); i < count; i += static_cast<std::size_t>(workers))
                body(i, chunks[static_cast<std::size_t>(w)]);
        } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    SweepChunk out;
    for (auto& c : chunks) {
        out.checked += c.checked;
        out.violations.insert(out.violations.end(), c.violations.begin(), c.violations.end());
        for (const auto& [k, v] : c.tightest) out.tightest[k] += v;
    }
    std::sort(out.violations.begin(), out.violations.end());
    return out;
}

inline SweepChunk sweep_sandwich(int n, int workers, const Limits& limits) {
    const auto parts = generate_partitions(n);
    const std::size_t p = parts.size();
    return run_parallel(p * p * p, workers, [&](std::size_t idx, SweepChunk& c) {
        const Partition& a = parts[idx / (p * p)];
        const Partition& b = parts[(idx / p) % p];
        const Partition& d = parts[idx % p];
        const std::string item = show(a, b, d);
        const BoundValue g = BoundValue::from_count(kronecker(a, b, d), "exact");
        const BoundValue lower = BoundValue::from_count(lower_bound_pyramid(a, b, d, limits), "exact");
        c.check(bound_le(lower, g), item, "pyramid <= g", show(lower), show(g));
        const std::vector<std::pair<std::string, BoundValue>> uppers{
            {"dimension", BoundValue::from_count(bound_dimension(a, b, d), "exact")},
            {"ct3", BoundValue::from_count(count_tables_3d(a, b, d, limits), "exact")},
            {"binary", BoundValue::from_count(bound_binary(a, b, d, limits), "exact")},
            {"ct3_closed_form", BoundValue::from_log(ct3_closed_form(a, b, d).log_value, "closed_form")},
            {"multi_lr", BoundValue::from_log(bound_multi_lr(a, b, d).bound.log_value, "closed_form")},
            {"kostka_chain", bound_kostka_chain(a, b, d, limits)},
        };
        const std::pair<std::string, BoundValue>* best = nullptr;
        for (const auto& u : uppers) {
            c.check(bound_le(g, u.second), item, "g <= " + u.first, show(g), show(u.second));
            if (!best || !bound_le(best->second, u.second, 0.0)) best = &u;
        }
        ++c.tightest[best->first];
    });
}

inline SweepChunk sweep_vallejo(int n, int workers) {
    const auto parts = generate_partitions(n);
    const std::size_t p = parts.size();
    return run_parallel(p * p * p, workers, [&](std::size_t idx, SweepChunk& c) {
        const Partition& a = parts[idx / (p * p)];
        const Partition& b = parts[(idx / p) % p];
        const Partition& d = parts[idx % p];
        const Count direct = kronecker(a, b, d), via = kronecker_via_vallejo(a, b, d);
        c.check(direct == via, show(a, b, d), "character formula == Vallejo sum", to_decimal(direct),
                to_decimal(via));
    });
}

inline SweepChunk sweep_rsk(int n, int workers) {
    const auto parts = generate_partitions(n);
    const std::size_t p = parts.size();
    return run_parallel(p * p, workers, [&](std::size_t idx, SweepChunk& c) {
        const Partition& a = parts[idx / p];
        const Partition& b = parts[idx % p];
        Count sum = 0;
        for (const auto& shape : parts) sum += kostka(shape, a) * kostka(shape, b);
        const Count t = count_tables_2d(a, b);
        c.check(t == sum, show(a, b), "T == sum of Kostka products", to_decimal(t), to_decimal(sum));
        const Count k = kostka(a, b);
        c.check(k <= t, show(a, b), "K <= T", to_decimal(k), to_decimal(t));
        const Count bin = count_binary_2d(conjugate(a), b);
        c.check(k <= bin, show(a, b), "K <= B(shape', content)", to_decimal(k), to_decimal(bin));
    });
}

inline SweepChunk sweep_dominance(int n, int workers) {
    const auto parts = generate_partitions(n);
    const std::size_t p = parts.size();
    return run_parallel(p, workers, [&](std::size_t idx, SweepChunk& c) {
        const Partition& shape = parts[idx];
        for (const auto& lo : parts)
            for (const auto& hi : parts) {
                if (!dominance_leq(lo, hi)) continue;
                const Count kl = kostka(shape, lo), kh = kostka(shape, hi);
                c.check(kl >= kh, show(shape, lo, hi), "K(shape, lower) >= K(shape, higher)", to_decimal(kl),
                        to_decimal(kh));
            }
    });
}

/// Pairs (hi, lo) with lo dominated by hi, optionally of equal length.
inline std::vector<std::pair<std::size_t, std::size_t>> comparable_pairs(const std::vector<Partition>& parts,
                                                                         bool equal_length) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j)
            if (dominance_leq(parts[j], parts[i]) && (!equal_length || parts[i].length() == parts[j].length()))
                out.push_back({i, j});
    return out;
}

/// T monotone under majorization (2D always, 3D while n <= table_n), and the
/// Barvinok value G in 2D on equal-length pairs.
inline SweepChunk sweep_majorization(int n, int workers, const Limits& limits) {
    const auto parts = generate_partitions(n);
    const std::size_t p = parts.size();
    std::vector<Count> t2(p * p);
    std::vector<double> g2(p * p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            t2[i * p + j] = count_tables_2d(parts[i], parts[j]);
            g2[i * p + j] = maximize_g_2d(parts[i], parts[j]).bound.log_value;
        }
    const auto pairs = comparable_pairs(parts, false);
    const auto equal_pairs = comparable_pairs(parts, true);
    const bool three = n <= 8;
    std::vector<Count> t3;
    if (three) {
        t3.resize(p * p * p);
        for (std::size_t i = 0; i < p * p * p; ++i)
            t3[i] = count_tables_3d(parts[i / (p * p)], parts[(i / p) % p], parts[i % p], limits);
    }
    return run_parallel(pairs.size(), workers, [&](std::size_t idx, SweepChunk& c) {
        const auto [l, a] = pairs[idx];
        for (const auto& [m, b] : pairs) {
            ++c.checked;
            if (!(t2[l * p + m] <= t2[a * p + b]))
                c.violations.push_back({show(parts[l], parts[m]) + " vs " + show(parts[a], parts[b]),
                                        "T majorization", to_decimal(t2[l * p + m]), to_decimal(t2[a * p + b])});
            if (!three) continue;
            for (const auto& [r, d] : pairs) {
                const Count& hi = t3[(l * p + m) * p + r];
                const Count& lo = t3[(a * p + b) * p + d];
                ++c.checked;
                if (!(hi <= lo))
                    c.violations.push_back(
                        {show(parts[l], parts[m], parts[r]) + " vs " + show(parts[a], parts[b], parts[d]),
                         "T3 majorization", to_decimal(hi), to_decimal(lo)});
            }
        }
        if (parts[l].length() != parts[a].length()) return;
        for (const auto& [m, b] : equal_pairs) {
            const double hi = g2[l * p + m], lo = g2[a * p + b];
            ++c.checked;
            if (!(hi <= lo + 1e-9))
                c.violations.push_back({show(parts[l], parts[m]) + " vs " + show(parts[a], parts[b]),
                                        "G majorization", std::to_string(hi), std::to_string(lo)});
        }
    });
}

inline SweepChunk sweep_barvinok(int n, int workers, const Limits& limits) {
    const auto parts = generate_partitions(n);
    const std::size_t p = parts.size();
    SweepChunk two = run_parallel(p * p, workers, [&](std::size_t idx, SweepChunk& c) {
        const Partition& a = parts[idx / p];
        const Partition& b = parts[idx % p];
        const Count t = count_tables_2d(a, b);
        const double g = maximize_g_2d(a, b).bound.log_value;
        c.check(count_le_log(t, g), show(a, b), "T <= exp g", to_decimal(t), std::to_string(g));
    });
    if (n > 8) return two;
    SweepChunk three = run_parallel(p * p * p, workers, [&](std::size_t idx, SweepChunk& c) {
        const Partition& a = parts[idx / (p * p)];
        const Partition& b = parts[(idx / p) % p];
        const Partition& d = parts[idx % p];
        const std::string item = show(a, b, d);
        const Count t = count_tables_3d(a, b, d, limits);
        const double g = maximize_g_3d(a, b, d).bound.log_value;
        c.check(count_le_log(t, g), item, "T3 <= exp g", to_decimal(t), std::to_string(g));
        const double closed = ct3_closed_form(a, b, d).log_value;
        c.check(g <= closed + 1e-9 * std::max(1.0, closed), item, "exp g <= E(lmr, n)", std::to_string(g),
                std::to_string(closed));
        const Count bin = count_binary_3d(a, b, d, limits);
        try {
            const double h = maximize_h_binary(a, b, d).bound.log_value;
            c.check(count_le_log(bin, h), item, "B <= exp h", to_decimal(bin), std::to_string(h));
        } catch (const InputError&) {
            c.check(bin == 0, item, "B = 0 on an empty binary polytope", to_decimal(bin), "0");
        } catch (const ConvergenceError& e) {
            c.check(false, item, "binary solver converged", to_decimal(bin),
                    "residual " + std::to_string(e.best_residual()));
        }
    });
    two.checked += three.checked;
    two.violations.insert(two.violations.end(), three.violations.begin(), three.violations.end());
    std::sort(two.violations.begin(), two.violations.end());
    return two;
}

inline SweepChunk sweep_symmetry(int n, int workers, const Limits& limits) {
    const auto parts = generate_partitions(n);
    const std::size_t p = parts.size();
    return run_parallel(p * p * p, workers, [&](std::size_t idx, SweepChunk& c) {
        const Partition& a = parts[idx / (p * p)];
        const Partition& b = parts[(idx / p) % p];
        const Partition& d = parts[idx % p];
        const std::string item = show(a, b, d);
        const Count g = kronecker(a, b, d);
        std::array<const Partition*, 3> args{&a, &b, &d};
        std::array<int, 3> perm{0, 1, 2};
        while (std::next_permutation(perm.begin(), perm.end())) {
            const Count h = kronecker(*args[perm[0]], *args[perm[1]], *args[perm[2]]);
            c.check(g == h, item, "g permutation invariant", to_decimal(g), to_decimal(h));
        }
        const Count tr = kronecker(conjugate(a), conjugate(b), d);
        c.check(g == tr, item, "g(a', b', c) == g(a, b, c)", to_decimal(g), to_decimal(tr));
        const Count t = count_tables_3d(a, b, d, limits), t_rot = count_tables_3d(b, d, a, limits);
        c.check(t == t_rot, item, "T3 margin permutation", to_decimal(t), to_decimal(t_rot));
        const Count bb = count_binary_3d(a, b, d, limits), b_rot = count_binary_3d(d, a, b, limits);
        c.check(bb == b_rot, item, "B margin permutation", to_decimal(bb), to_decimal(b_rot));
    });
}

}  // namespace detail

/// Runs one invariant suite over all partitions of n.
inline SweepResult verify(int n, const std::string& suite, int workers = 1, const Limits& limits = {}) {
    if (n < 1) throw InputError("verify needs n >= 1");
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw InputError("unknown suite '" + suite + "'");
    const auto start = std::chrono::steady_clock::now();
    auto need = [&](int cap, const char* key) {
        if (n > cap)
            throw LimitError("suite " + suite + " at n = " + std::to_string(n) + " exceeds " + key + " = " +
                             std::to_string(cap));
    };
    detail::SweepChunk chunk;
    if (suite == "sandwich") {
        need(limits.exact_n, "exact_n");
        need(limits.table_n, "table_n");
        chunk = detail::sweep_sandwich(n, workers, limits);
    } else if (suite == "vallejo") {
        need(limits.exact_n, "exact_n");
        chunk = detail::sweep_vallejo(n, workers);
    } else if (suite == "rsk") {
        need(limits.table_n, "table_n");
        chunk = detail::sweep_rsk(n, workers);
    } else if (suite == "dominance") {
        need(limits.exact_n, "exact_n");
        chunk = detail::sweep_dominance(n, workers);
    } else if (suite == "majorization") {
        need(limits.table_n, "table_n");
        chunk = detail::sweep_majorization(n, workers, limits);
    } else if (suite == "barvinok") {
        need(limits.table_n, "table_n");
        chunk = detail::sweep_barvinok(n, workers, limits);
    } else {
        need(limits.exact_n, "exact_n");
        need(limits.table_n, "table_n");
        chunk = detail::sweep_symmetry(n, workers, limits);
    }
    SweepResult result;
    result.n = n;
    result.suite = suite;
    result.checked = chunk.checked;
    result.violations = std::move(chunk.violations);
    result.tightest = std::move(chunk.tightest);
    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace kronbound
