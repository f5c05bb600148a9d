#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace kronbound::detail {

// Dense dictionary simplex for  max c.x  s.t.  A x <= b, x >= 0, with b >= 0
// (the origin is feasible). Bland's rule, so degenerate problems terminate.
class Simplex {
public:
    Simplex(const std::vector<std::vector<double>>& A, const std::vector<double>& b, const std::vector<double>& c)
        : m_(static_cast<int>(b.size())), n_(static_cast<int>(c.size())),
          d_(static_cast<std::size_t>(m_ + 1), std::vector<double>(static_cast<std::size_t>(n_ + 1), 0.0)),
          basis_(static_cast<std::size_t>(m_)), nonbasis_(static_cast<std::size_t>(n_)) {
        for (int i = 0; i < m_; ++i) {
            if (b[i] < 0.0) throw std::invalid_argument("simplex: origin must be feasible");
            for (int j = 0; j < n_; ++j) d_[i][j] = A[i][j];
            d_[i][n_] = b[i];
            basis_[i] = n_ + i;
        }
        for (int j = 0; j < n_; ++j) {
            d_[m_][j] = -c[j];
            nonbasis_[j] = j;
        }
    }

    // optimal x; throws on an unbounded objective
    std::vector<double> solve() {
        for (;;) {
            int s = -1;
            for (int j = 0; j < n_; ++j)
                if (d_[m_][j] < -kEps && (s < 0 || nonbasis_[j] < nonbasis_[s])) s = j;
            if (s < 0) break;
            int r = -1;
            for (int i = 0; i < m_; ++i) {
                if (d_[i][s] <= kEps) continue;
                if (r < 0) {
                    r = i;
                    continue;
                }
                const double lhs = d_[i][n_] * d_[r][s], rhs = d_[r][n_] * d_[i][s];
                if (lhs < rhs - kEps || (std::abs(lhs - rhs) <= kEps && basis_[i] < basis_[r])) r = i;
            }
            if (r < 0) throw std::runtime_error("simplex: unbounded");
            pivot(r, s);
        }
        std::vector<double> x(static_cast<std::size_t>(n_), 0.0);
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = d_[i][n_];
        return x;
    }

private:
    static constexpr double kEps = 1e-10;

    void pivot(int r, int s) {
        const double inv = 1.0 / d_[r][s];
        for (int i = 0; i <= m_; ++i) {
            if (i == r || d_[i][s] == 0.0) continue;
            const double f = d_[i][s] * inv;
            for (int j = 0; j <= n_; ++j)
                if (j != s) d_[i][j] -= d_[r][j] * f;
            d_[i][s] = -f;
        }
        for (int j = 0; j <= n_; ++j)
            if (j != s) d_[r][j] *= inv;
        d_[r][s] = inv;
        std::swap(basis_[r], nonbasis_[s]);
    }

    int m_, n_;
    std::vector<std::vector<double>> d_;
    std::vector<int> basis_, nonbasis_;
};

}  // namespace kronbound::detail
