#pragma once

#include "kronbound/bigint.hpp"
#include "kronbound/errors.hpp"
#include "kronbound/limits.hpp"
#include "kronbound/partition.hpp"
#include "kronbound/pyramids.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace kronbound {

struct EqualMarginEntry {
    int n = 0;
    MarginTriple margins;
    Count count;
};

struct EqualMarginSearch {
    std::vector<EqualMarginEntry> entries;   // multiplicity >= 2, by n then margins
    std::optional<int> smallest_diagonal_n;  // first n with such a triple of equal margins
};

/// Margin triples shared by at least two plane partitions of n, for all n <= n_max.
inline EqualMarginSearch equal_margin_pyramids_search(int n_max, bool diagonal_only = false,
                                                      const Limits& limits = {}) {
    if (n_max > limits.pyramid_n)
        throw LimitError("search up to " + std::to_string(n_max) + " exceeds pyramid_n = " +
                         std::to_string(limits.pyramid_n));
    EqualMarginSearch out;
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& [m, count] : pyramid_margin_histogram(n, limits)) {
            if (count < 2) continue;
            const bool diagonal = m.x == m.y && m.y == m.z;
            if (diagonal && !out.smallest_diagonal_n) out.smallest_diagonal_n = n;
            if (diagonal_only && !diagonal) continue;
            out.entries.push_back({n, m, count});
        }
    }
    return out;
}

/// The two pyramids with margins (7,4,2)^3.
inline const std::pair<Pyramid, Pyramid>& seed_pyramids() {
    static const std::pair<Pyramid, Pyramid> seeds = [] {
        const Partition a{7, 4, 2};
        auto found = enumerate_pyramids(a, a, a);
        if (found.size() != 2) throw ConsistencyError("expected exactly two pyramids with margins (7,4,2)^3");
        return std::make_pair(found[0], found[1]);
    }();
    return seeds;
}

struct PyramidFamily {
    int s = 0;
    MarginTriple margins;
    std::vector<Pyramid> members;
    int size = 0;

    /// 27 C(s+1, 3) + 13 C(s+1, 2).
    static long long expected_size(int s) {
        const long long c3 = static_cast<long long>(s + 1) * s * (s - 1) / 6;
        const long long c2 = static_cast<long long>(s + 1) * s / 2;
        return 27 * c3 + 13 * c2;
    }
};

/// Blow up the staircase pyramid {i+j+k <= s+1} by 3 and put one of the two
/// seed pyramids into every block on the next diagonal.
inline PyramidFamily staircase_family(int s, const Limits& limits = {}) {
    if (s < 1) throw InputError("staircase family needs s >= 1");
    const int frontier_count = (s + 1) * s / 2;
    const int side = 3 * s;
    if (frontier_count > 20 ||
        (static_cast<long long>(side) * side * side << frontier_count) > limits.max_states)
        throw LimitError("staircase family for s = " + std::to_string(s) + " is too large");
    const auto& [x, x2] = seed_pyramids();
    const Table3D tx = x.to_table(), tx2 = x2.to_table();

    Table3D base(side, side, side);
    std::vector<std::array<int, 3>> frontier;
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j)
            for (int k = 1; k <= s; ++k) {
                if (i + j + k <= s + 1) {
                    for (int a = 0; a < 3; ++a)
                        for (int b = 0; b < 3; ++b)
                            for (int c = 0; c < 3; ++c) base.at(3 * (i - 1) + a, 3 * (j - 1) + b, 3 * (k - 1) + c) = 1;
                } else if (i + j + k == s + 2) {
                    frontier.push_back({i, j, k});
                }
            }

    PyramidFamily family;
    family.s = s;
    std::set<Pyramid> seen;
    for (unsigned long mask = 0; mask < (1UL << frontier.size()); ++mask) {
        Table3D t = base;
        for (std::size_t f = 0; f < frontier.size(); ++f) {
            const Table3D& block = (mask >> f) & 1 ? tx2 : tx;
            const auto [i, j, k] = frontier[f];
            for (int a = 0; a < block.dx; ++a)
                for (int b = 0; b < block.dy; ++b)
                    for (int c = 0; c < block.dz; ++c)
                        t.at(3 * (i - 1) + a, 3 * (j - 1) + b, 3 * (k - 1) + c) = block.at(a, b, c);
        }
        auto p = Pyramid::from_table(t);
        if (!p) throw ConsistencyError("staircase member is not a pyramid");
        if (!seen.insert(*p).second) throw ConsistencyError("staircase members are not distinct");
        if (family.members.empty()) {
            family.margins = p->margins();
            family.size = p->size();
        } else if (p->margins() != family.margins) {
            throw ConsistencyError("staircase members have different margins");
        }
        family.members.push_back(std::move(*p));
    }
    if (family.size != PyramidFamily::expected_size(s))
        throw ConsistencyError("staircase family size " + std::to_string(family.size) + " differs from " +
                               std::to_string(PyramidFamily::expected_size(s)));
    return family;
}

/// Invariant under all permutations of the three axes.
inline bool is_totally_symmetric(const Pyramid& p) { return p.transposed() == p && p.rotated() == p; }

inline bool is_cyclically_symmetric(const Pyramid& p) { return p.rotated() == p; }

/// Totally symmetric plane partitions of n, grouped by their common margin.
inline std::map<Partition, Count> totally_symmetric_by_margin(int n, const Limits& limits = {}) {
    std::map<Partition, Count> out;
    for_each_plane_partition(
        n,
        [&](const Pyramid& p) {
            if (!is_totally_symmetric(p)) return;
            const MarginTriple m = p.margins();
            if (!(m.x == m.y && m.y == m.z)) throw ConsistencyError("symmetric plane partition with unequal margins");
            ++out[m.x];
        },
        limits);
    return out;
}

inline Count totally_symmetric_count(int n, const Limits& limits = {}) {
    Count total = 0;
    for (const auto& [margin, count] : totally_symmetric_by_margin(n, limits)) total += count;
    return total;
}

struct CyclicWitness {
    Partition margin;   // self-conjugate; all three margins equal it
    Pyramid first;
    Pyramid second;     // the transpose of `first`
};

/// Smallest cyclically but not totally symmetric plane partition whose common
/// margin is self-conjugate.
inline std::optional<CyclicWitness> cyclic_not_total_witness(int n_max, const Limits& limits = {}) {
    for (int n = 1; n <= n_max; ++n) {
        std::optional<CyclicWitness> found;
        for_each_plane_partition(
            n,
            [&](const Pyramid& p) {
                if (found || !is_cyclically_symmetric(p)) return;
                const Pyramid t = p.transposed();
                if (t == p) return;
                const MarginTriple m = p.margins();
                if (m.x != conjugate(m.x)) return;
                if (t.margins() != m) throw ConsistencyError("transpose changed the margins");
                found = CyclicWitness{m.x, p, t};
            },
            limits);
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace kronbound
