#include "qschur/qpoly.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qschur;
using qschur::fixtures::poly;
using qschur::fixtures::poly_half;

TEST(QPoly, CanonicalFormDropsZerosAndMergesExponents)
{
    QPoly p({{4, 2}, {0, 1}, {4, -2}, {2, 3}, {6, 0}});
    EXPECT_EQ(p, poly({{0, 1}, {1, 3}}));
    EXPECT_EQ(p.size(), 2u);
    EXPECT_TRUE(QPoly().is_zero());
    EXPECT_TRUE(QPoly({{3, 0}}).is_zero());
}

TEST(QPoly, Add)
{
    EXPECT_EQ(add(poly({{0, 1}, {1, 1}}), poly({{1, 1}})), poly({{0, 1}, {1, 2}}));
    const QPoly p = poly({{0, 3}, {2, -1}});
    EXPECT_EQ(add(p, QPoly()), p);
    EXPECT_TRUE(add(poly({{0, 1}, {1, 1}}), poly({{0, -1}, {1, -1}})).is_zero());
}

TEST(QPoly, Mul)
{
    EXPECT_EQ(mul(poly({{0, 1}, {1, 1}}), poly({{0, 1}, {1, 1}})), poly({{0, 1}, {1, 2}, {2, 1}}));
    EXPECT_EQ(mul(poly_half({{1, 1}}), poly_half({{1, 1}})), poly({{1, 1}}));
    EXPECT_EQ(mul(poly({{0, 1}, {1, -1}}), poly({{0, 1}, {1, 1}, {2, 1}})), poly({{0, 1}, {3, -1}}));
}

TEST(QPoly, MulSparseWideSpan)
{
    const QPoly a = poly({{0, 1}, {20000000, 1}});
    const QPoly b = poly({{-20000000, 1}, {5, 2}});
    EXPECT_EQ(a * b, poly({{-20000000, 1}, {0, 1}, {5, 2}, {20000005, 2}}));
}

TEST(QPoly, SubstituteQPower)
{
    EXPECT_EQ(substitute_q_power(poly({{0, 1}, {1, 1}}), 3), poly({{0, 1}, {3, 1}}));
    EXPECT_EQ(substitute_q_power(poly({{1, 1}, {2, 1}}), -1), poly({{-1, 1}, {-2, 1}}));
    EXPECT_EQ(substitute_q_power(poly_half({{1, 1}}), 2), poly({{1, 1}}));
    EXPECT_THROW(substitute_q_power(poly({{1, 1}}), 0), std::invalid_argument);
}

TEST(QPoly, Truncate)
{
    EXPECT_EQ(truncate(poly({{0, 1}, {1, 1}, {5, 1}}), 3), poly({{0, 1}, {1, 1}}));
    EXPECT_TRUE(truncate(QPoly(), 4).is_zero());
    EXPECT_EQ(truncate(poly({{0, 1}, {2, 1}}), 2), poly({{0, 1}, {2, 1}}));
    // q^(5/2) lies above q^2, so truncation at T=2 drops it.
    EXPECT_EQ(truncate(poly_half({{4, 1}, {5, 1}}), 2), poly({{2, 1}}));
}

TEST(QPoly, EvalAtOne)
{
    const QPoly l2 = poly({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 2}, {6, 1}, {7, 1}});
    EXPECT_EQ(eval_at_one(l2), 9);
    EXPECT_EQ(eval_at_one(QPoly()), 0);
    EXPECT_EQ(eval_at_one(poly({{0, 1}, {1, 1}})), 2);
}

TEST(QPoly, Coefficient)
{
    const QPoly l2 = poly({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 2}, {6, 1}, {7, 1}});
    EXPECT_EQ(coefficient(l2, half_steps(5)), 2);
    EXPECT_EQ(coefficient(poly({{0, 1}, {1, 1}}), half_steps(3)), 0);
    EXPECT_EQ(coefficient(poly_half({{1, 1}}), 1), 1);
}

TEST(QPoly, ToString)
{
    EXPECT_EQ(QPoly().to_string(), "0");
    EXPECT_EQ(poly({{0, 1}, {1, 1}, {5, 2}}).to_string(), "1 + q + 2*q^5");
    EXPECT_EQ(poly_half({{-2, -1}, {1, 3}}).to_string(), "-q^-1 + 3*q^(1/2)");
}

TEST(QPoly, Queries)
{
    const QPoly p = poly_half({{-3, 2}, {4, 1}});
    EXPECT_EQ(p.min_exp(), -3);
    EXPECT_EQ(p.max_exp(), 4);
    EXPECT_FALSE(p.has_only_integer_exponents());
    EXPECT_TRUE(p.has_nonnegative_coefficients());
    EXPECT_FALSE((-p).has_nonnegative_coefficients());
}

TEST(QPoly, MultiplyTruncatedMatchesFullProduct)
{
    std::mt19937 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        const QPoly a = fixtures::random_series_poly(rng);
        const QPoly b = fixtures::random_series_poly(rng);
        for (HalfExp bound : {0, 3, 10, 30})
            EXPECT_EQ(QPoly::multiply_truncated(a, b, bound), (a * b).truncated_half(bound));
    }
}

TEST(QPolyProperty, RingLaws)
{
    std::mt19937 rng(20240611);
    for (int iter = 0; iter < 300; ++iter) {
        const QPoly a = fixtures::random_poly(rng);
        const QPoly b = fixtures::random_poly(rng);
        const QPoly c = fixtures::random_poly(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a * QPoly::one(), a);
    }
}

TEST(QPolyProperty, DoubleInversionIsIdentity)
{
    std::mt19937 rng(99);
    for (int iter = 0; iter < 300; ++iter) {
        const QPoly p = fixtures::random_poly(rng);
        EXPECT_EQ(substitute_q_power(substitute_q_power(p, -1), -1), p);
        EXPECT_EQ(substitute_q_power(substitute_q_power(p, 3), -2), substitute_q_power(p, -6));
    }
}

TEST(QPolyProperty, EvalAtOneIsMultiplicative)
{
    std::mt19937 rng(5);
    for (int iter = 0; iter < 300; ++iter) {
        const QPoly a = fixtures::random_poly(rng);
        const QPoly b = fixtures::random_poly(rng);
        EXPECT_EQ(eval_at_one(a * b), eval_at_one(a) * eval_at_one(b));
        EXPECT_EQ(eval_at_one(a + b), eval_at_one(a) + eval_at_one(b));
    }
}

TEST(QPolyProperty, TruncationCommutesWithProduct)
{
    std::mt19937 rng(11);
    for (int iter = 0; iter < 300; ++iter) {
        const QPoly a = fixtures::random_series_poly(rng);
        const QPoly b = fixtures::random_series_poly(rng);
        for (std::int64_t t : {0, 2, 5, 11}) EXPECT_EQ(truncate(a * b, t), truncate(truncate(a, t) * truncate(b, t), t));
    }
}

TEST(XSeries, Combine)
{
    XSeries one(5), xq(5);
    one.accumulate(0, QPoly::one());
    xq.accumulate(1, poly({{1, 1}}));
    EXPECT_EQ(xseries_combine(one, xq, SeriesOp::mul), xq);
    EXPECT_EQ(xseries_combine(xq, XSeries(5), SeriesOp::add), xq);

    XSeries expect(5);
    expect.accumulate(2, poly({{2, 1}}));
    EXPECT_EQ(xseries_combine(xq, xq, SeriesOp::mul), expect);
}

TEST(XSeries, TruncatesAndDropsZeroStrata)
{
    XSeries s(3);
    s.accumulate(1, poly({{1, 1}, {4, 7}}));
    EXPECT_EQ(s.stratum(1), poly({{1, 1}}));
    s.accumulate(1, poly({{1, -1}}));
    EXPECT_TRUE(s.is_zero());
    s.accumulate(2, poly({{9, 1}}));
    EXPECT_TRUE(s.is_zero());
    EXPECT_THROW(s.accumulate(-1, QPoly::one()), std::invalid_argument);
    EXPECT_THROW(XSeries(-1), std::invalid_argument);
}

TEST(XSeries, MulRetruncates)
{
    XSeries a(4);
    a.accumulate(1, poly({{0, 1}, {3, 1}}));
    XSeries sq = xseries_combine(a, a, SeriesOp::mul);
    EXPECT_EQ(sq.stratum(2), poly({{0, 1}, {3, 2}}));
}

TEST(XSeries, MismatchedTruncationRejected)
{
    EXPECT_THROW(xseries_combine(XSeries(3), XSeries(4), SeriesOp::add), std::invalid_argument);
}
