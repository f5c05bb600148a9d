#pragma once

#include "kronbound/bigint.hpp"
#include "kronbound/errors.hpp"
#include "kronbound/partition.hpp"
#include "kronbound/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace kronbound {

/// Natural log of an upper bound; the value itself is exponentiated only for display.
struct LogBound {
    double log_value = 0.0;

    double value() const { return std::exp(log_value); }
    std::string approx(int digits = 3) const { return approx_from_log(log_value, digits); }
};

/// Real point of a (2D or 3D) transportation polytope.
struct PolytopePoint {
    std::vector<int> dims;
    std::vector<double> entries;            // row-major over dims
    std::vector<double> margin_residuals;   // max |slice sum - target| per axis
    double objective = 0.0;

    double max_residual() const {
        return margin_residuals.empty() ? 0.0 : *std::max_element(margin_residuals.begin(), margin_residuals.end());
    }
};

struct SolverOptions {
    double tol = 1e-10;
    int max_sweeps = 100000;
    int stall_sweeps = 5000;
};

struct SolveResult {
    PolytopePoint point;
    LogBound bound;
    int sweeps = 0;
    bool used_fallback = false;
};

/// f(z) = (z+1) log(z+1) - z log z, the per-cell term of the counting objective.
inline double counting_entropy(double z) {
    if (z <= 0.0) return 0.0;
    return (z + 1.0) * std::log1p(z) - z * std::log(z);
}

/// z log(1/z) + (1-z) log(1/(1-z)), the per-cell term of the binary objective.
inline double binary_entropy(double z) {
    if (z <= 0.0 || z >= 1.0) return 0.0;
    return -z * std::log(z) - (1.0 - z) * std::log1p(-z);
}

namespace detail {

enum class Objective { Counting, Binary };

class TransportSolver {
public:
    TransportSolver(std::vector<std::vector<double>> margins, Objective kind, SolverOptions opts)
        : margins_(std::move(margins)), kind_(kind), opts_(opts) {
        axes_ = static_cast<int>(margins_.size());
        for (const auto& m : margins_) dims_.push_back(static_cast<int>(m.size()));
        cells_ = 1;
        for (int d : dims_) cells_ *= static_cast<std::size_t>(d);
        strides_.assign(static_cast<std::size_t>(axes_), 1);
        for (int a = axes_ - 2; a >= 0; --a) strides_[a] = strides_[a + 1] * static_cast<std::size_t>(dims_[a + 1]);
        slices_.resize(static_cast<std::size_t>(axes_));
        for (int a = 0; a < axes_; ++a) slices_[a].resize(static_cast<std::size_t>(dims_[a]));
        for (std::size_t c = 0; c < cells_; ++c)
            for (int a = 0; a < axes_; ++a) slices_[a][index(c, a)].push_back(c);
        fixed_.assign(cells_, -1.0);
    }

    SolveResult run() {
        check_totals();
        if (kind_ == Objective::Binary) propagate_forced_cells();
        SolveResult result;
        const bool binary = kind_ == Objective::Binary;
        bool done = dual_ascent(result.sweeps, binary ? std::min(kProbeSweeps, opts_.max_sweeps) : opts_.max_sweeps);
        if (!done && binary) {
            // a stall here usually means the maximizer sits on a proper face
            fix_implicit_cells();
            int more = 0;
            done = dual_ascent(more, opts_.max_sweeps);
            result.sweeps += more;
        }
        if (!done) {
            result.used_fallback = true;
            projected_gradient();
        }
        result.point = point();
        result.bound.log_value = result.point.objective;
        if (result.point.max_residual() > opts_.tol)
            throw ConvergenceError("transportation solver did not reach the margin tolerance (residual " +
                                       std::to_string(result.point.max_residual()) + ")",
                                   result.point.max_residual());
        return result;
    }

private:
    std::size_t index(std::size_t cell, int axis) const { return (cell / strides_[axis]) % dims_[axis]; }

    double phi(double q) const { return kind_ == Objective::Counting ? q / (1.0 - q) : q / (1.0 + q); }
    double dphi(double q) const {
        return kind_ == Objective::Counting ? q / ((1.0 - q) * (1.0 - q)) : q / ((1.0 + q) * (1.0 + q));
    }

    void check_totals() const {
        const double total = std::accumulate(margins_[0].begin(), margins_[0].end(), 0.0);
        for (const auto& m : margins_) {
            const double t = std::accumulate(m.begin(), m.end(), 0.0);
            if (std::abs(t - total) > 1e-9 * std::max(1.0, total)) throw InputError("margins have different totals");
            for (double v : m)
                if (!(v > 0.0)) throw InputError("margins must be strictly positive (trim zero parts)");
        }
    }

    // Cells forced to 0 or 1 by a saturated or empty slice are fixed before
    // the iteration, so the dual variables stay finite.
    void propagate_forced_cells() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int a = 0; a < axes_; ++a)
                for (int i = 0; i < dims_[a]; ++i) {
                    double target = margins_[a][i];
                    int free = 0;
                    for (std::size_t c : slices_[a][i]) {
                        if (fixed_[c] < 0) ++free;
                        else target -= fixed_[c];
                    }
                    if (free == 0 && std::abs(target) <= 1e-9) continue;
                    if (target < -1e-9 || target > free + 1e-9)
                        throw InputError("binary polytope is empty: slice " + std::to_string(i) + " of axis " +
                                         std::to_string(a) + " cannot reach its margin");
                    double value = -1.0;
                    if (target < 1e-12) value = 0.0;
                    else if (target > free - 1e-12) value = 1.0;
                    if (value < 0.0) continue;
                    for (std::size_t c : slices_[a][i])
                        if (fixed_[c] < 0) fixed_[c] = value;
                    changed = true;
                }
        }
    }

    double slice_target(int a, int i) const {
        double t = margins_[a][i];
        for (std::size_t c : slices_[a][i])
            if (fixed_[c] >= 0) t -= fixed_[c];
        return t;
    }

    double cell_q(std::size_t c) const {
        double q = 1.0;
        for (int a = 0; a < axes_; ++a) q *= factors_[a][index(c, a)];
        return q;
    }

    double cell_value(std::size_t c) const { return fixed_[c] >= 0 ? fixed_[c] : phi(cell_q(c)); }

    double residual() const {
        double worst = 0.0;
        for (int a = 0; a < axes_; ++a)
            for (int i = 0; i < dims_[a]; ++i) {
                double s = 0.0;
                for (std::size_t c : slices_[a][i]) s += cell_value(c);
                worst = std::max(worst, std::abs(s - margins_[a][i]));
            }
        return worst;
    }

    // Solves sum_c phi(s r_c) = target for s, in the variable t = log s.
    double solve_scale(const std::vector<double>& r, double target, double current) const {
        double r_max = 0.0;
        for (double x : r) r_max = std::max(r_max, x);
        if (r.empty() || r_max <= 0.0) return current;
        auto eval = [&](double t, double& deriv) {
            double f = -target;
            deriv = 0.0;
            const double s = std::exp(t);
            for (double x : r) {
                const double q = s * x;
                f += phi(q);
                deriv += dphi(q);
            }
            return f;
        };
        double hi, lo;
        double dummy;
        if (kind_ == Objective::Counting) {
            hi = -std::log(r_max);
        } else {
            hi = -std::log(r_max) + 1.0;
            while (eval(hi, dummy) < 0.0) hi += 2.0;
        }
        lo = hi - 40.0;
        while (eval(lo, dummy) > 0.0) lo -= 40.0;
        double t = std::log(current);
        if (!(t > lo && t < hi)) t = 0.5 * (lo + hi);
        for (int it = 0; it < 200; ++it) {
            double d = 0.0;
            const double f = eval(t, d);
            if (std::abs(f) <= 1e-15 * std::max(1.0, target)) break;
            if (f > 0.0) hi = t; else lo = t;
            double next = t - f / d;
            if (!(next > lo && next < hi) || d <= 0.0) next = 0.5 * (lo + hi);
            if (std::abs(next - t) < 1e-16 * std::max(1.0, std::abs(t))) { t = next; break; }
            t = next;
        }
        return std::exp(t);
    }

    static constexpr int kProbeSweeps = 2000;

    // Cells that are 0 or 1 on the whole polytope. Homogenised LP: maximise
    // sum t_c with t_c <= y_c, t_c <= s - y_c, t_c <= 1 and A y = b s; at the
    // optimum t_c > 0 exactly for cells that are not pinned.
    void fix_implicit_cells() {
        std::vector<std::size_t> free;
        for (std::size_t c = 0; c < cells_; ++c)
            if (fixed_[c] < 0) free.push_back(c);
        if (free.empty()) return;
        const int f = static_cast<int>(free.size());
        std::vector<int> pos(cells_, -1);
        for (int k = 0; k < f; ++k) pos[free[k]] = k;

        auto margin_rows = [&](int vars, int s_col, std::vector<std::vector<double>>& A, std::vector<double>& b) {
            for (int a = 0; a < axes_; ++a)
                for (int i = 0; i < dims_[a]; ++i) {
                    std::vector<double> row(static_cast<std::size_t>(vars), 0.0);
                    bool any = false;
                    for (std::size_t c : slices_[a][i])
                        if (pos[c] >= 0) {
                            row[pos[c]] = 1.0;
                            any = true;
                        }
                    if (!any) continue;
                    row[s_col] = -slice_target(a, i);
                    A.push_back(row);
                    b.push_back(0.0);
                    for (double& v : row) v = -v;
                    A.push_back(row);
                    b.push_back(0.0);
                }
        };

        const int vars = 2 * f + 1, s_col = 2 * f;
        std::vector<std::vector<double>> A;
        std::vector<double> b;
        margin_rows(vars, s_col, A, b);
        for (int k = 0; k < f; ++k) {
            std::vector<double> row(static_cast<std::size_t>(vars), 0.0);
            row[k] = -1.0;
            row[f + k] = 1.0;
            A.push_back(row);
            b.push_back(0.0);
            row[k] = 1.0;
            row[s_col] = -1.0;
            A.push_back(row);
            b.push_back(0.0);
            row.assign(static_cast<std::size_t>(vars), 0.0);
            row[f + k] = 1.0;
            A.push_back(row);
            b.push_back(1.0);
        }
        std::vector<double> c(static_cast<std::size_t>(vars), 0.0);
        for (int k = 0; k < f; ++k) c[f + k] = 1.0;
        std::vector<double> x = Simplex(A, b, c).solve();

        if (x[s_col] < 1e-9) {
            // every free cell is pinned; any feasible point gives their values
            const int vars2 = f + 1;
            std::vector<std::vector<double>> A2;
            std::vector<double> b2;
            margin_rows(vars2, f, A2, b2);
            for (int k = 0; k < f; ++k) {
                std::vector<double> row(static_cast<std::size_t>(vars2), 0.0);
                row[k] = 1.0;
                row[f] = -1.0;
                A2.push_back(row);
                b2.push_back(0.0);
            }
            std::vector<double> row(static_cast<std::size_t>(vars2), 0.0);
            row[f] = 1.0;
            A2.push_back(row);
            b2.push_back(1.0);
            std::vector<double> c2(static_cast<std::size_t>(vars2), 0.0);
            c2[f] = 1.0;
            const std::vector<double> x2 = Simplex(A2, b2, c2).solve();
            if (x2[f] < 1e-9) throw InputError("binary polytope is empty");
            for (int k = 0; k < f; ++k) x[k] = x2[k];
            for (int k = 0; k < f; ++k) x[f + k] = 0.0;
            x[s_col] = x2[f];
        }
        const double s = x[s_col];
        for (int k = 0; k < f; ++k) {
            if (x[f + k] > 1e-9) continue;
            fixed_[free[k]] = x[k] / s > 0.5 ? 1.0 : 0.0;
        }
    }

    bool dual_ascent(int& sweeps, int max_sweeps) {
        factors_.assign(static_cast<std::size_t>(axes_), {});
        const double start = std::pow(0.5, 1.0 / axes_);
        for (int a = 0; a < axes_; ++a) factors_[a].assign(static_cast<std::size_t>(dims_[a]), start);
        double best = std::numeric_limits<double>::infinity();
        int since_best = 0;
        std::vector<double> r;
        for (sweeps = 1; sweeps <= max_sweeps; ++sweeps) {
            for (int a = 0; a < axes_; ++a)
                for (int i = 0; i < dims_[a]; ++i) {
                    r.clear();
                    const double own = factors_[a][i];
                    for (std::size_t c : slices_[a][i])
                        if (fixed_[c] < 0) r.push_back(cell_q(c) / own);
                    if (r.empty()) continue;
                    factors_[a][i] = solve_scale(r, slice_target(a, i), own);
                }
            const double res = residual();
            if (res < opts_.tol * 0.5) return true;
            if (res < best * 0.99) {
                best = res;
                since_best = 0;
            } else if (++since_best > opts_.stall_sweeps) {
                return false;
            }
        }
        return false;
    }

    // Fallback: gradient ascent projected onto the margin-preserving subspace,
    // started from the independence table.
    void projected_gradient() {
        double total = std::accumulate(margins_[0].begin(), margins_[0].end(), 0.0);
        z_.assign(cells_, 0.0);
        for (std::size_t c = 0; c < cells_; ++c) {
            double v = total;
            for (int a = 0; a < axes_; ++a) v *= margins_[a][index(c, a)] / total;
            z_[c] = v;
        }
        if (kind_ == Objective::Binary)
            for (std::size_t c = 0; c < cells_; ++c)
                if (fixed_[c] >= 0 || z_[c] >= 1.0)
                    throw ConvergenceError("binary solver: no interior starting point for the fallback",
                                           std::numeric_limits<double>::infinity());
        auto objective = [&](const std::vector<double>& z) {
            double s = 0.0;
            for (double v : z) s += kind_ == Objective::Counting ? counting_entropy(v) : binary_entropy(v);
            return s;
        };
        std::vector<double> dir(cells_);
        double current = objective(z_);
        for (int it = 0; it < 200000; ++it) {
            for (std::size_t c = 0; c < cells_; ++c)
                dir[c] = kind_ == Objective::Counting ? std::log1p(1.0 / z_[c]) : std::log((1.0 - z_[c]) / z_[c]);
            project(dir);
            double norm = 0.0;
            for (double d : dir) norm = std::max(norm, std::abs(d));
            if (norm < 1e-11) break;
            double step = 1.0;
            for (std::size_t c = 0; c < cells_; ++c) {
                if (dir[c] < 0.0) step = std::min(step, -0.9 * z_[c] / dir[c]);
                if (kind_ == Objective::Binary && dir[c] > 0.0) step = std::min(step, 0.9 * (1.0 - z_[c]) / dir[c]);
            }
            std::vector<double> trial(cells_);
            bool moved = false;
            for (int k = 0; k < 60; ++k, step *= 0.5) {
                for (std::size_t c = 0; c < cells_; ++c) trial[c] = z_[c] + step * dir[c];
                const double value = objective(trial);
                if (value > current) {
                    z_.swap(trial);
                    current = value;
                    moved = true;
                    break;
                }
            }
            if (!moved) break;
        }
        use_primal_ = true;
    }

    // Removes the best additive fit a_i + b_j (+ c_k) so all slice sums of dir vanish.
    void project(std::vector<double>& dir) const {
        for (int sweep = 0; sweep < 50; ++sweep) {
            double worst = 0.0;
            for (int a = 0; a < axes_; ++a)
                for (int i = 0; i < dims_[a]; ++i) {
                    double s = 0.0;
                    for (std::size_t c : slices_[a][i]) s += dir[c];
                    const double mean = s / static_cast<double>(slices_[a][i].size());
                    for (std::size_t c : slices_[a][i]) dir[c] -= mean;
                    worst = std::max(worst, std::abs(s));
                }
            if (worst < 1e-14) break;
        }
    }

    PolytopePoint point() const {
        PolytopePoint p;
        p.dims = dims_;
        p.entries.resize(cells_);
        for (std::size_t c = 0; c < cells_; ++c) p.entries[c] = use_primal_ ? z_[c] : cell_value(c);
        p.margin_residuals.assign(static_cast<std::size_t>(axes_), 0.0);
        for (int a = 0; a < axes_; ++a)
            for (int i = 0; i < dims_[a]; ++i) {
                double s = 0.0;
                for (std::size_t c : slices_[a][i]) s += p.entries[c];
                p.margin_residuals[a] = std::max(p.margin_residuals[a], std::abs(s - margins_[a][i]));
            }
        for (double z : p.entries)
            p.objective += kind_ == Objective::Counting ? counting_entropy(z) : binary_entropy(z);
        return p;
    }

    std::vector<std::vector<double>> margins_;
    Objective kind_;
    SolverOptions opts_;
    int axes_ = 0;
    std::vector<int> dims_;
    std::size_t cells_ = 0;
    std::vector<std::size_t> strides_;
    std::vector<std::vector<std::vector<std::size_t>>> slices_;
    std::vector<double> fixed_;
    std::vector<std::vector<double>> factors_;
    std::vector<double> z_;
    bool use_primal_ = false;
};

inline std::vector<double> to_real(const Partition& p) { return {p.vec().begin(), p.vec().end()}; }

inline void require_nonempty(const Partition& p) {
    if (p.empty()) throw InputError("margins must have at least one part");
}

}  // namespace detail

/// Maximizer of sum f(z_ij) over real tables with the given (positive, real) margins.
inline SolveResult maximize_g(std::vector<std::vector<double>> margins, SolverOptions opts = {}) {
    if (margins.size() < 2) throw InputError("need at least two margin vectors");
    return detail::TransportSolver(std::move(margins), detail::Objective::Counting, opts).run();
}

/// log G(lambda, mu): T(lambda, mu) <= exp g(Z).
inline SolveResult maximize_g_2d(const Partition& lambda, const Partition& mu, double tol = 1e-10) {
    require_same_size(lambda, mu);
    detail::require_nonempty(lambda);
    SolverOptions opts;
    opts.tol = tol;
    return maximize_g({detail::to_real(lambda), detail::to_real(mu)}, opts);
}

inline SolveResult maximize_g_3d(const Partition& lambda, const Partition& mu, const Partition& nu,
                                 double tol = 1e-10) {
    require_same_size(lambda, mu, nu);
    detail::require_nonempty(lambda);
    SolverOptions opts;
    opts.tol = tol;
    return maximize_g({detail::to_real(lambda), detail::to_real(mu), detail::to_real(nu)}, opts);
}

/// Maximizer of the binary entropy over P(lambda, mu, nu) cut by the unit cube;
/// B(lambda, mu, nu) <= exp h(Z).
inline SolveResult maximize_h_binary(const Partition& lambda, const Partition& mu, const Partition& nu,
                                     double tol = 1e-10) {
    require_same_size(lambda, mu, nu);
    detail::require_nonempty(lambda);
    const Partition* m[3] = {&lambda, &mu, &nu};
    for (int a = 0; a < 3; ++a) {
        const long long cap = static_cast<long long>(m[(a + 1) % 3]->length()) * m[(a + 2) % 3]->length();
        if (m[a]->first() > cap)
            throw InputError("binary capacity violated: part " + std::to_string(m[a]->first()) + " of axis " +
                             std::to_string(a) + " exceeds " + std::to_string(cap) + " cells");
    }
    // projections onto each pair of axes are capped 2D tables (cell capacity =
    // length of the third margin); prefix sums must fit
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == b) continue;
            const int cap = m[3 - a - b]->length();
            long long prefix = 0;
            for (int t = 1; t <= m[a]->length(); ++t) {
                prefix += (*m[a])[t - 1];
                long long room = 0;
                for (int part : m[b]->parts()) room += std::min<long long>(part, static_cast<long long>(cap) * t);
                if (prefix > room) throw InputError("binary polytope is empty (capped projection infeasible)");
            }
        }
    SolverOptions opts;
    opts.tol = tol;
    return detail::TransportSolver({detail::to_real(lambda), detail::to_real(mu), detail::to_real(nu)},
                                   detail::Objective::Binary, opts)
        .run();
}

/// log E(s, w) = w log(1 + s/w) + s log(1 + w/s); E(s, 0) = 1.
inline LogBound closed_form_E(double s, double w) {
    if (!(s > 0.0)) throw InputError("closed_form_E needs s > 0");
    if (w < 0.0) throw InputError("closed_form_E needs w >= 0");
    if (w == 0.0) return {0.0};
    return {w * std::log1p(s / w) + s * std::log1p(w / s)};
}

}  // namespace kronbound
