#include "qschur/verify.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace qschur;
using qschur::fixtures::poly;

TEST(IdentityNames, RoundTrip)
{
    for (const auto &info : identity_table) {
        EXPECT_EQ(identity_name(info.id), info.name);
        EXPECT_EQ(parse_identity(info.name), info.id);
    }
    EXPECT_EQ(parse_identity("SCHUR_POLY"), IdentityId::schur_poly);
    EXPECT_EQ(parse_identity("REC_SUMMAND"), IdentityId::rec_summand);
    EXPECT_FALSE(parse_identity("nope").has_value());
}

TEST(FirstDifference, OrdersByExponent)
{
    EXPECT_FALSE(first_difference(poly({{0, 1}}), poly({{0, 1}})).has_value());
    const auto d = first_difference(poly({{0, 1}, {3, 2}, {5, 1}}), poly({{0, 1}, {4, 7}, {5, 2}}));
    ASSERT_TRUE(d);
    EXPECT_EQ(d->exponent_half_steps, 6);
    EXPECT_EQ(d->lhs, 2);
    EXPECT_EQ(d->rhs, 0);
    EXPECT_FALSE(d->x_degree.has_value());
}

TEST(FirstDifference, OrdersByXDegreeFirst)
{
    XSeries a(10), b(10);
    a.accumulate(1, poly({{9, 1}}));
    b.accumulate(2, poly({{1, 1}}));
    const auto d = first_difference(a, b);
    ASSERT_TRUE(d);
    EXPECT_EQ(d->x_degree, 1);
    EXPECT_EQ(d->exponent_half_steps, 18);
}

TEST(Verify, Examples)
{
    EXPECT_TRUE(verify(IdentityId::schur_poly, {{"N", 3}}).verified);
    EXPECT_TRUE(verify(IdentityId::schur_poly, {{"N", -2}}).verified);
    const auto q1 = verify(IdentityId::q1_triple, {{"M", 2}});
    EXPECT_TRUE(q1.verified);
    EXPECT_FALSE(q1.first_discrepancy.has_value());
}

TEST(Verify, EveryIdentityPassesSmallInstance)
{
    const std::vector<std::pair<IdentityId, Params>> cases = {
        {IdentityId::schur_poly, {{"N", 5}}},
        {IdentityId::dual, {{"N", 4}}},
        {IdentityId::t0_binom, {{"N", 4}}},
        {IdentityId::t0_limit, {{"N", 12}, {"T", 11}}},
        {IdentityId::qt_limit, {{"t", 1}, {"T", 20}}},
        {IdentityId::qt_limit, {{"t", 2}, {"T", 20}}},
        {IdentityId::summation_m, {{"M", 3}}},
        {IdentityId::warnaar, {{"L", 3}, {"a", -2}}},
        {IdentityId::rec_andrews, {{"N", 5}}},
        {IdentityId::rec_l, {{"N", 6}}},
        {IdentityId::rec_summand, {{"N", 6}}},
        {IdentityId::rec_summand, {{"N", 5}, {"m", 1}, {"n1", 1}, {"n2", 1}}},
        {IdentityId::gf_bounded, {{"largest_part", 7}, {"T", 30}}},
        {IdentityId::gf_bounded, {{"N", 3}}},
        {IdentityId::gf_ali_eq_kursungoz, {{"T", 25}}},
        {IdentityId::gf_even_odd_split, {{"T", 25}}},
        {IdentityId::analytic_schur, {{"T", 25}}},
        {IdentityId::q1_triple, {{"M", 6}}},
        {IdentityId::q1_quad, {{"M", 6}}},
        {IdentityId::exponent_diff, {{"max", 5}}},
        {IdentityId::partition_counts, {{"max_n", 25}}},
        {IdentityId::bijection_sweep, {{"max_size", 20}}},
    };
    for (const auto &[id, params] : cases) {
        const auto r = verify(id, params);
        EXPECT_TRUE(r.verified) << identity_name(id);
        EXPECT_EQ(r.params, params);
        EXPECT_GE(r.elapsed_ms, 0);
    }
}

TEST(Verify, InjectedFaultIsReported)
{
    for (auto [id, params] : std::vector<std::pair<IdentityId, Params>>{
             {IdentityId::schur_poly, {{"N", 3}}},
             {IdentityId::gf_bounded, {{"largest_part", 5}, {"T", 10}}},
             {IdentityId::q1_quad, {{"M", 2}}},
             {IdentityId::rec_summand, {{"N", 4}}},
             {IdentityId::exponent_diff, {{"max", 2}}},
             {IdentityId::bijection_sweep, {{"max_size", 5}}},
         }) {
        const auto r = verify(id, params, {true});
        EXPECT_FALSE(r.verified) << identity_name(id);
        ASSERT_TRUE(r.first_discrepancy.has_value()) << identity_name(id);
        EXPECT_NE(r.first_discrepancy->lhs, r.first_discrepancy->rhs);
    }
    const auto r = verify(IdentityId::schur_poly, {{"N", 3}}, {true});
    EXPECT_EQ(r.first_discrepancy->exponent_half_steps, 0);
    EXPECT_EQ(r.first_discrepancy->lhs, 2);
    EXPECT_EQ(r.first_discrepancy->rhs, 1);
}

TEST(Verify, UsageErrors)
{
    EXPECT_THROW(verify(IdentityId::schur_poly, {}), UsageError);
    EXPECT_THROW(verify(IdentityId::schur_poly, {{"N", 1}, {"M", 2}}), UsageError);
    EXPECT_THROW(verify(IdentityId::dual, {{"N", -1}}), UsageError);
    EXPECT_THROW(verify(IdentityId::qt_limit, {{"t", 3}, {"T", 5}}), UsageError);
    EXPECT_THROW(verify(IdentityId::rec_andrews, {{"N", 1}}), UsageError);
    EXPECT_THROW(verify(IdentityId::rec_summand, {{"N", 5}, {"m", 1}}), UsageError);
    EXPECT_THROW(verify(IdentityId::gf_bounded, {{"N", 2}, {"T", 5}}), UsageError);
}
