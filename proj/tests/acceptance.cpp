// Acceptance run: one PASS/FAIL line per criterion.

#include "kronbound/kronbound.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

using namespace kronbound;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string sweep_detail(const std::vector<SweepResult>& runs) {
    long long checked = 0, bad = 0;
    for (const auto& r : runs) {
        checked += r.checked;
        bad += static_cast<long long>(r.violations.size());
    }
    std::string first;
    for (const auto& r : runs)
        if (!r.violations.empty()) {
            const auto& v = r.violations.front();
            first = "; first: " + r.suite + " " + v.item + " " + v.check + " " + v.lhs + " vs " + v.rhs;
            break;
        }
    return std::to_string(checked) + " checks, " + std::to_string(bad) + " violations" + first;
}

bool clean(const std::vector<SweepResult>& runs) {
    for (const auto& r : runs)
        if (!r.violations.empty()) return false;
    return true;
}

Outcome sandwich() {
    std::vector<SweepResult> runs;
    for (int n = 1; n <= 7; ++n) runs.push_back(verify(n, "sandwich"));
    return {clean(runs), sweep_detail(runs)};
}

Outcome vallejo() {
    std::vector<SweepResult> runs;
    for (int n = 1; n <= 6; ++n) runs.push_back(verify(n, "vallejo"));
    return {clean(runs), sweep_detail(runs)};
}

Outcome seven_four_two() {
    const Partition a{7, 4, 2};
    const Count pyr = count_pyramids(a, a, a);
    const auto search = equal_margin_pyramids_search(12, true);
    const bool ok = pyr == 2 && search.entries.empty();
    return {ok, "Pyr((7,4,2)^3) = " + to_decimal(pyr) + ", equal-margin repeats with n <= 12: " +
                    std::to_string(search.entries.size())};
}

Outcome explicit_lower_bound() {
    const Partition c{3, 3, 2, 2, 1, 1, 1};
    const Count g = kronecker(c, c, c);
    bool ok = g >= 2;
    std::string detail = "g = " + to_decimal(g);
    for (int s = 1; s <= 3; ++s) {
        const auto f = staircase_family(s);
        const std::set<Pyramid> unique(f.members.begin(), f.members.end());
        const std::size_t expected = std::size_t{1} << (s * (s + 1) / 2);
        bool same = true;
        for (const auto& m : f.members) same = same && m.margins() == f.margins && is_pyramid(m.to_table());
        ok = ok && unique.size() == expected && f.members.size() == expected && same;
        detail += ", s=" + std::to_string(s) + ": " + std::to_string(unique.size()) + " pyramids of size " +
                  std::to_string(f.size);
        if (s == 2) ok = ok && f.size == 66;
    }
    return {ok, detail};
}

Outcome plane_partition_numerics() {
    const Count p2 = count_plane_partitions(2100);
    const Count p = count_partitions(2100);
    const Count p3 = p * p * p;
    const std::string a = approx(p2), b = approx(p3);
    const bool digits = a.substr(0, 4) == "1.47" && b.substr(0, 4) == "4.46";
    const bool exponents = a == "1.47e141" && b == "4.46e140";
    const bool order = p2 > p3;
    return {digits && exponents && order, "p2(2100) = " + a + " (" + std::to_string(to_decimal(p2).size()) +
                                              " digits), p(2100)^3 = " + b + ", p2 > p^3: " +
                                              (order ? "yes" : "no")};
}

Outcome rsk() {
    std::vector<SweepResult> runs;
    for (int n = 1; n <= 10; ++n) runs.push_back(verify(n, "rsk"));
    return {clean(runs), sweep_detail(runs) + " (Kostka numbers indexed shape first)"};
}

Outcome barvinok() {
    std::vector<SweepResult> runs;
    for (int n = 1; n <= 10; ++n) runs.push_back(verify(n, "barvinok"));
    bool ok = clean(runs);
    double worst = 0.0;
    for (int l = 1; l <= 4; ++l)
        for (int m = 1; m <= 4; ++m) {
            const int n = 12;
            if (n % l || n % m) continue;
            const double solver = maximize_g_2d(Partition(std::vector<int>(l, n / l)),
                                                Partition(std::vector<int>(m, n / m)))
                                      .bound.log_value;
            const double closed = closed_form_E(l * m, n).log_value;
            worst = std::max(worst, std::abs(solver - closed) / std::max(1.0, std::abs(closed)));
        }
    for (int l = 2; l <= 3; ++l) {
        const Partition u(std::vector<int>(l, l * l));
        const double expected = l * l * ((l + 1) * std::log(l + 1.0) - l * std::log(static_cast<double>(l)));
        const double got = maximize_g_2d(u, u).bound.log_value;
        worst = std::max(worst, std::abs(got - expected) / expected);
    }
    ok = ok && worst <= 1e-8;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2e", worst);
    return {ok, sweep_detail(runs) + ", worst relative error vs closed forms " + buf};
}

Outcome monotonicity() {
    std::vector<SweepResult> runs;
    for (int n = 1; n <= 8; ++n) runs.push_back(verify(n, "dominance"));
    for (int n = 1; n <= 10; ++n) runs.push_back(verify(n, "majorization"));
    return {clean(runs), sweep_detail(runs)};
}

Outcome reduced() {
    std::vector<Partition> small;
    for (int s = 0; s <= 4; ++s)
        for (const auto& p : generate_partitions(s)) small.push_back(p);
    long long lr_checks = 0, bound_checks = 0, failures = 0;
    std::string first;
    for (const auto& a : small)
        for (const auto& b : small)
            for (const auto& c : small) {
                Count g;
                try {
                    g = reduced_kronecker(a, b, c);
                } catch (const ConsistencyError& e) {
                    ++failures;
                    if (first.empty()) first = e.what();
                    continue;
                }
                if (a.size() == b.size() + c.size()) {
                    ++lr_checks;
                    if (g != lr_coefficient(a, b, c)) {
                        ++failures;
                        if (first.empty()) first = "LR mismatch at " + a.to_string() + " " + b.to_string() + " " + c.to_string();
                    }
                }
                ++bound_checks;
                if (!count_le_log(g, bound_reduced(a, b, c).bound.log_value)) {
                    ++failures;
                    if (first.empty()) first = "bound below value at " + a.to_string() + " " + b.to_string() + " " + c.to_string();
                }
            }
    return {failures == 0, std::to_string(lr_checks) + " LR checks, " + std::to_string(bound_checks) +
                               " stabilised evaluations and bound checks, " + std::to_string(failures) + " failures" +
                               (first.empty() ? "" : "; first: " + first)};
}

Outcome binary_and_staircase() {
    long long checks = 0, failures = 0;
    for (int n = 1; n <= 7; ++n) {
        const auto parts = generate_partitions(n);
        for (const auto& l : parts)
            for (const auto& v : parts) {
                ++checks;
                if (dim_irrep(v) > count_binary_3d(l, conjugate(l), v)) ++failures;
            }
    }
    for (int l = 1; l <= 4; ++l) {
        const Partition rho = staircase(l);
        for (const auto& nu : generate_partitions(rho.size())) {
            if (nu == Partition{rho.size()}) continue;
            ++checks;
            if (count_pyramids(rho, rho, nu) != 0) ++failures;
        }
    }
    return {failures == 0, std::to_string(checks) + " checks, " + std::to_string(failures) + " failures"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"sandwich sweep n <= 7", sandwich},
        {"Vallejo identity n <= 6", vallejo},
        {"(7,4,2) pyramids and minimality", seven_four_two},
        {"explicit lower bound and staircase family", explicit_lower_bound},
        {"plane partition numerics at 2100", plane_partition_numerics},
        {"RSK identity n <= 10", rsk},
        {"Barvinok soundness and accuracy", barvinok},
        {"monotonicity suites", monotonicity},
        {"reduced Kronecker coefficients", reduced},
        {"binary count vs dimension, staircase emptiness", binary_and_staircase},
    };
    // criterion 5 cannot hold: p2(2100) has 141 digits and is below p(2100)^3
    const std::set<int> known_red{5};
    int passed = 0;
    bool unexpected = false;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %2d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        if (o.pass) ++passed;
        if (o.pass == static_cast<bool>(known_red.count(id))) unexpected = true;
    }
    std::printf("%d/%zu criteria pass; known failing: 5\n", passed, criteria.size());
    return unexpected ? 1 : 0;
}
