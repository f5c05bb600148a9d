#include "kronbound/json.hpp"
#include "kronbound/sweeps.hpp"

#include <gtest/gtest.h>

using namespace kronbound;

TEST(Sweeps, EverySuiteCleanAtSmallSize) {
    for (const auto& suite : suite_names()) {
        const SweepResult r = verify(5, suite);
        EXPECT_GT(r.checked, 0) << suite;
        EXPECT_TRUE(r.violations.empty()) << suite;
    }
}

TEST(Sweeps, SandwichAtSix) {
    const SweepResult r = verify(6, "sandwich", 2);
    EXPECT_EQ(r.checked, 11LL * 11 * 11 * 7);
    EXPECT_TRUE(r.violations.empty());
    long long total = 0;
    for (const auto& [name, count] : r.tightest) total += count;
    EXPECT_EQ(total, 11LL * 11 * 11);
}

TEST(Sweeps, OutputIndependentOfWorkers) {
    for (const std::string suite : {"symmetry", "barvinok", "rsk"}) {
        const auto one = to_json(verify(5, suite, 1)).dump();
        const auto four = to_json(verify(5, suite, 4)).dump();
        EXPECT_EQ(one, four) << suite;
    }
}

TEST(Sweeps, RejectsBadRequests) {
    EXPECT_THROW(verify(4, "nope"), InputError);
    EXPECT_THROW(verify(0, "rsk"), InputError);
    Limits tight;
    tight.exact_n = 4;
    EXPECT_THROW(verify(5, "sandwich", 1, tight), LimitError);
}

TEST(Sweeps, ViolationsAreReported) {
    detail::SweepChunk c;
    c.check(true, "a", "x", "1", "2");
    c.check(false, "b", "y", "3", "2");
    EXPECT_EQ(c.checked, 2);
    ASSERT_EQ(c.violations.size(), 1u);
    EXPECT_EQ(c.violations[0].item, "b");
}
