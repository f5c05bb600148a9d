#include "kronbound/kostka.hpp"
#include "kronbound/pyramids.hpp"
#include "kronbound/tables.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace kronbound;

TEST(Tables2D, KnownValues) {
    EXPECT_EQ(count_tables_2d(Partition{3, 3}, Partition{3, 3}), 4);
    EXPECT_EQ(count_tables_2d(Partition{5}, Partition{2, 2, 1}), 1);
    EXPECT_EQ(count_tables_2d(Partition{1, 1}, Partition{1, 1}), 2);
    EXPECT_EQ(count_tables_2d(Partition(), Partition()), 1);
    EXPECT_THROW(count_tables_2d(Partition{2}, Partition{1}), InputError);
    for (int k = 1; k <= 12; ++k) EXPECT_EQ(count_tables_2d(Partition{k, k}, Partition{k, k}), k + 1);
}

TEST(Tables2D, MatchBruteForce) {
    for (int n = 1; n <= 7; ++n) {
        const auto parts = generate_partitions(n);
        for (const auto& a : parts)
            for (const auto& b : parts) {
                if (a.length() * b.length() > 16) continue;
                EXPECT_EQ(count_tables_2d(a, b), oracle::tables({a, b}, n)) << a << b;
                EXPECT_EQ(count_binary_2d(a, b), oracle::tables({a, b}, 1)) << a << b;
            }
    }
}

TEST(Tables2D, CompositionMarginsMatchSorted) {
    const std::vector<int> rows{1, 3, 2}, cols{2, 0, 4};
    EXPECT_EQ(count_tables_2d(rows, cols), count_tables_2d(Partition{3, 2, 1}, Partition{4, 2}));
    EXPECT_EQ(count_tables_2d(rows, cols), oracle::tables(std::vector<std::vector<int>>{{1, 3, 2}, {2, 0, 4}}, 6));
}

TEST(Tables2D, EnumerationVisitsEveryTable) {
    const Partition a{3, 2, 1}, b{2, 2, 2};
    std::set<std::vector<int>> seen;
    for_each_table_2d(a.parts(), b.parts(), [&](const Table2D& t) {
        EXPECT_EQ(t.row_sums(), a.vec());
        EXPECT_EQ(t.col_sums(), b.vec());
        seen.insert(t.entries);
    });
    EXPECT_EQ(Count(seen.size()), count_tables_2d(a, b));
    EXPECT_THROW(for_each_table_2d(a.parts(), b.parts(), [](const Table2D&) {}, 3), LimitError);
}

TEST(Tables3D, KnownValues) {
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(count_tables_3d(Partition{n}, Partition{n}, Partition{n}), 1);
    // brute force gives 4 for the 2x2x2 case
    EXPECT_EQ(count_tables_3d(Partition{1, 1}, Partition{1, 1}, Partition{1, 1}), 4);
    EXPECT_EQ(count_binary_3d(Partition{1, 1}, Partition{1, 1}, Partition{1, 1}), 4);
    EXPECT_EQ(count_binary_3d(Partition{4, 4}, Partition{4, 4}, Partition{4, 4}), 1);
    for (int n = 2; n <= 5; ++n) EXPECT_EQ(count_binary_3d(Partition{n}, Partition{n}, Partition{n}), 0);
    const Partition h{2, 1};
    EXPECT_EQ(count_tables_3d(h, h, h), oracle::tables({h, h, h}, 3));
    EXPECT_THROW(count_tables_3d(h, h, Partition{2}), InputError);
}

TEST(Tables3D, OnesCubeCountsAreSquaredFactorials) {
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        const Partition p(ones);
        EXPECT_EQ(count_binary_3d(p, p, p), factorial(n) * factorial(n)) << n;
        EXPECT_EQ(count_tables_3d(p, p, p), factorial(n) * factorial(n)) << n;
    }
}

TEST(Tables3D, MatchBruteForce) {
    for (int n = 1; n <= 5; ++n) {
        const auto parts = generate_partitions(n);
        for (const auto& a : parts)
            for (const auto& b : parts)
                for (const auto& c : parts) {
                    if (a.length() * b.length() * c.length() > 18) continue;
                    EXPECT_EQ(count_tables_3d(a, b, c), oracle::tables({a, b, c}, n)) << a << b << c;
                    EXPECT_EQ(count_binary_3d(a, b, c), oracle::tables({a, b, c}, 1)) << a << b << c;
                }
    }
}

TEST(Tables3D, LimitsAreEnforced) {
    Limits tight;
    tight.table_n = 3;
    const Partition p{2, 2};
    EXPECT_THROW(count_tables_3d(p, p, p, tight), LimitError);
}

TEST(TableProperties, RskIdentityShapeFirst) {
    for (int n = 1; n <= 10; ++n) {
        const auto parts = generate_partitions(n);
        for (const auto& a : parts)
            for (const auto& b : parts) {
                Count sum = 0;
                for (const auto& shape : parts) sum += kostka(shape, a) * kostka(shape, b);
                EXPECT_EQ(count_tables_2d(a, b), sum) << a << b;
            }
    }
}

TEST(TableProperties, KostkaBelowTableCounts) {
    for (int n = 1; n <= 9; ++n) {
        const auto parts = generate_partitions(n);
        for (const auto& a : parts)
            for (const auto& b : parts) {
                const Count k = kostka(a, b);
                EXPECT_LE(k, count_tables_2d(a, b));
                EXPECT_LE(k, count_binary_2d(conjugate(a), b));
            }
    }
}

TEST(TableProperties, MarginPermutationSymmetry) {
    for (int n = 1; n <= 6; ++n) {
        const auto parts = generate_partitions(n);
        for (const auto& a : parts)
            for (const auto& b : parts) {
                EXPECT_EQ(count_tables_2d(a, b), count_tables_2d(b, a));
                EXPECT_EQ(count_binary_2d(a, b), count_binary_2d(b, a));
                for (const auto& c : parts) {
                    const Count t = count_tables_3d(a, b, c), bin = count_binary_3d(a, b, c);
                    EXPECT_EQ(t, count_tables_3d(c, a, b));
                    EXPECT_EQ(t, count_tables_3d(b, a, c));
                    EXPECT_EQ(bin, count_binary_3d(c, a, b));
                    EXPECT_EQ(bin, count_binary_3d(a, c, b));
                }
            }
    }
}

TEST(TableProperties, MajorizationMonotone) {
    for (int n = 1; n <= 8; ++n) {
        const auto parts = generate_partitions(n);
        for (const auto& l : parts)
            for (const auto& a : parts) {
                if (!dominance_leq(a, l)) continue;
                for (const auto& m : parts)
                    for (const auto& b : parts) {
                        if (!dominance_leq(b, m)) continue;
                        EXPECT_LE(count_tables_2d(l, m), count_tables_2d(a, b));
                        if (n > 6) continue;
                        for (const auto& r : parts)
                            for (const auto& c : parts)
                                if (dominance_leq(c, r)) { EXPECT_LE(count_tables_3d(l, m, r), count_tables_3d(a, b, c)); }
                    }
            }
    }
}

TEST(Pyramids, SevenFourTwoHasExactlyTwo) {
    const Partition a{7, 4, 2};
    const auto found = enumerate_pyramids(a, a, a);
    ASSERT_EQ(found.size(), 2u);
    EXPECT_NE(found[0], found[1]);
    for (const auto& p : found) {
        EXPECT_EQ(p.margins(), (MarginTriple{a, a, a}));
        EXPECT_TRUE(is_pyramid(p.to_table()));
    }
}

TEST(Pyramids, StaircaseMarginsOnlyWithSingleLevel) {
    for (int l = 1; l <= 4; ++l) {
        const Partition rho = staircase(l);
        for (const auto& nu : generate_partitions(rho.size())) {
            const Count c = count_pyramids(rho, rho, nu);
            if (nu == Partition{rho.size()}) {
                EXPECT_EQ(c, 1);
            } else {
                EXPECT_EQ(c, 0) << nu;
            }
        }
    }
}

TEST(Pyramids, FromTableRejectsGaps) {
    Table3D t(2, 1, 1);
    t.at(1, 0, 0) = 1;
    EXPECT_FALSE(is_pyramid(t));
    t.at(0, 0, 0) = 1;
    EXPECT_TRUE(is_pyramid(t));
    EXPECT_THROW(Pyramid({{1}, {2}}), InputError);
}

TEST(Pyramids, RotationAndTransposePermuteMargins) {
    for_each_plane_partition(7, [](const Pyramid& p) {
        const auto m = p.margins();
        EXPECT_EQ(p.transposed().margins(), (MarginTriple{m.y, m.x, m.z}));
        EXPECT_EQ(p.rotated().margins(), (MarginTriple{m.y, m.z, m.x}));
        EXPECT_EQ(p.rotated().rotated().rotated(), p);
    });
}

TEST(PyramidProperties, PerTripleCountsMatchGrowthOracle) {
    const auto grown = oracle::plane_partitions_by_growth(10);
    for (int n = 0; n <= 10; ++n) {
        std::map<MarginTriple, Count> expected;
        for (const auto& cells : grown[n]) {
            const auto m = oracle::margins_of(cells);
            ++expected[{m[0], m[1], m[2]}];
        }
        EXPECT_EQ(pyramid_margin_histogram(n), expected) << n;
        for (const auto& [m, c] : expected) EXPECT_EQ(count_pyramids(m.x, m.y, m.z), c);
    }
}

TEST(PyramidProperties, EnumerationIsDistinctAndDownwardClosed) {
    for (int n = 1; n <= 9; ++n)
        for (const auto& a : generate_partitions(n))
            for (const auto& b : generate_partitions(n)) {
                const auto found = enumerate_pyramids(a, b, conjugate(a));
                std::set<Pyramid> unique(found.begin(), found.end());
                EXPECT_EQ(unique.size(), found.size());
                for (const auto& p : found) EXPECT_TRUE(is_pyramid(p.to_table()));
            }
}
