#include "qschur/partitions.hpp"
#include "qschur/qcoeff.hpp"
#include "qschur/schur_sums.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace qschur;
using qschur::fixtures::poly;

namespace {

std::vector<std::string> names(const std::vector<Partition> &v)
{
    std::vector<std::string> out;
    for (const auto &p : v) out.push_back(p.to_string());
    return out;
}

// Every subset of 1..n with the gap test applied afterwards; independent of the DFS.
std::vector<long> subset_counts(int n, bool (*accept)(const std::vector<std::int64_t> &))
{
    std::vector<long> counts(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(int, int, std::vector<std::int64_t> &)> walk = [&](int next, int size,
                                                                        std::vector<std::int64_t> &parts) {
        if (accept(parts)) ++counts[static_cast<std::size_t>(size)];
        for (int v = next; size + v <= n; ++v) {
            parts.push_back(v);
            walk(v + 1, size + v, parts);
            parts.pop_back();
        }
    };
    std::vector<std::int64_t> parts;
    walk(1, 0, parts);
    return counts;
}

bool schur_subset(const std::vector<std::int64_t> &p) { return is_schur_admissible(p); }

bool pm_subset(const std::vector<std::int64_t> &p)
{
    return std::all_of(p.begin(), p.end(), [](std::int64_t v) { return v % 3 != 0; });
}

} // namespace

TEST(Partition, ParseAndPrint)
{
    EXPECT_EQ(Partition::parse("1,4,8,12").to_string(), "1,4,8,12");
    EXPECT_EQ(Partition::parse(" 2, 5 ").parts(), (std::vector<std::int64_t>{2, 5}));
    EXPECT_TRUE(Partition::parse("").empty());
    EXPECT_EQ(Partition().to_string(), "");
    EXPECT_EQ(Partition::parse("1,4,8,12").size(), 25);
    EXPECT_THROW(Partition::parse("1,,2"), std::invalid_argument);
    EXPECT_THROW(Partition::parse("1,x"), std::invalid_argument);
    EXPECT_THROW(Partition::parse("3,1"), std::invalid_argument);
    EXPECT_THROW(Partition::parse("0,1"), std::invalid_argument);
}

TEST(Admissibility, GapRule)
{
    EXPECT_TRUE(is_schur_admissible(Partition::parse("")));
    EXPECT_TRUE(is_schur_admissible(Partition::parse("1,4")));
    EXPECT_FALSE(is_schur_admissible(Partition::parse("1,3")));
    EXPECT_FALSE(is_schur_admissible(Partition::parse("3,6")));
    EXPECT_TRUE(is_schur_admissible(Partition::parse("3,9")));
    // A multiple of 3 followed by a non-multiple only needs a gap of 3.
    EXPECT_TRUE(is_schur_admissible(Partition::parse("3,7")));
    EXPECT_TRUE(is_schur_admissible(Partition::parse("5,9")));
    EXPECT_TRUE(is_schur_admissible(Partition::parse("1,4,8,12")));
    EXPECT_FALSE(is_schur_admissible(std::vector<std::int64_t>{4, 4}));
}

TEST(EnumerateSchur, SmallSizes)
{
    const auto by = enumerate_schur(4);
    ASSERT_EQ(by.size(), 5u);
    EXPECT_EQ(names(by[0]), std::vector<std::string>{""});
    EXPECT_EQ(names(by[1]), std::vector<std::string>{"1"});
    EXPECT_EQ(names(by[2]), std::vector<std::string>{"2"});
    EXPECT_EQ(names(by[3]), std::vector<std::string>{"3"});
    EXPECT_EQ(names(by[4]), std::vector<std::string>{"4"});
}

TEST(EnumerateSchur, SizeNine)
{
    EXPECT_EQ(names(enumerate_schur(9)[9]), (std::vector<std::string>{"1,8", "2,7", "9"}));
}

TEST(EnumerateSchur, LargestPartBound)
{
    const auto by = enumerate_schur(2, 1);
    EXPECT_EQ(names(by[0]), std::vector<std::string>{""});
    EXPECT_EQ(names(by[1]), std::vector<std::string>{"1"});
    EXPECT_TRUE(by[2].empty());
}

TEST(EnumerateSchur, OrderIsLexicographic)
{
    for (const auto &bucket : enumerate_schur(30)) EXPECT_TRUE(std::is_sorted(bucket.begin(), bucket.end()));
}

TEST(EnumerateSchur, BoundedIsSubsetAndAdmissible)
{
    const auto all = enumerate_schur(35);
    for (std::int64_t bound : {0, 4, 9, 20}) {
        const auto some = enumerate_schur(35, bound);
        for (std::size_t n = 0; n < some.size(); ++n) {
            std::set<std::string> full;
            for (const auto &p : all[n]) full.insert(p.to_string());
            for (const auto &p : some[n]) {
                EXPECT_TRUE(is_schur_admissible(p));
                EXPECT_LE(p.largest(), bound);
                EXPECT_EQ(p.size(), static_cast<std::int64_t>(n));
                EXPECT_TRUE(full.count(p.to_string()));
            }
        }
    }
}

TEST(EnumerateDistinct, Examples)
{
    const auto by = enumerate_distinct_pm1_mod3(9);
    EXPECT_EQ(names(by[3]), std::vector<std::string>{"1,2"});
    EXPECT_EQ(names(by[9]), (std::vector<std::string>{"1,8", "2,7", "4,5"}));
    EXPECT_EQ(names(by[0]), std::vector<std::string>{""});
}

TEST(EnumerateCounts, MatchIndependentSubsetWalk)
{
    const auto schur = enumerate_schur(30);
    const auto pm = enumerate_distinct_pm1_mod3(30);
    const auto schur_ref = subset_counts(30, schur_subset);
    const auto pm_ref = subset_counts(30, pm_subset);
    for (int n = 0; n <= 30; ++n) {
        EXPECT_EQ(static_cast<long>(schur[static_cast<std::size_t>(n)].size()), schur_ref[static_cast<std::size_t>(n)]);
        EXPECT_EQ(static_cast<long>(pm[static_cast<std::size_t>(n)].size()), pm_ref[static_cast<std::size_t>(n)]);
    }
}

TEST(SchurTheorem, CountsAgreeAndMatchProduct)
{
    const auto schur = enumerate_schur(60);
    const auto pm = enumerate_distinct_pm1_mod3(60);
    const QPoly product = schur_product_truncated(60);
    for (std::int64_t n = 0; n <= 60; ++n) {
        const auto idx = static_cast<std::size_t>(n);
        EXPECT_EQ(schur[idx].size(), pm[idx].size()) << n;
        EXPECT_EQ(BigInt(static_cast<long>(pm[idx].size())), product.coefficient(half_steps(n))) << n;
    }
}

TEST(SchurOracle, Examples)
{
    const XSeries t2 = schur_gf_oracle(2);
    EXPECT_EQ(t2.stratum(0), QPoly::one());
    EXPECT_EQ(t2.stratum(1), poly({{1, 1}, {2, 1}}));
    EXPECT_EQ(t2.strata().size(), 2u);

    EXPECT_EQ(schur_gf_oracle(6).stratum(2), poly({{5, 1}, {6, 1}}));

    const XSeries t0 = schur_gf_oracle(0);
    EXPECT_EQ(t0.strata().size(), 1u);
    EXPECT_EQ(t0.stratum(0), QPoly::one());
}

TEST(SchurOracle, BoundedMatchesClosedForm)
{
    for (std::int64_t N = 0; N <= 15; ++N) EXPECT_EQ(bounded_gf(N, 45), schur_gf_oracle(45, N)) << N;
}

TEST(SchurOracle, Errors)
{
    EXPECT_THROW(enumerate_schur(-1), std::invalid_argument);
    EXPECT_THROW(enumerate_distinct_pm1_mod3(-1), std::invalid_argument);
    EXPECT_THROW(schur_gf_oracle(-1), std::invalid_argument);
}
