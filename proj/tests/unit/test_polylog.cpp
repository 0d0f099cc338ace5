#include <gtest/gtest.h>

#include "oracles.hpp"
#include "properties.hpp"
#include "striptr/error.hpp"
#include "striptr/polylog/polylog.hpp"

using namespace striptr;

TEST(Polylog, Examples)
{
    EXPECT_EQ(li_neg(0, Rational(1, 2)), Rational(1));
    EXPECT_EQ(li_neg(1, Rational(2)), Rational(2));
    EXPECT_EQ(li_neg(1, Rational(1, 2)), Rational(2));
    EXPECT_EQ(li_neg(2, Rational(1, 2)), Rational(6));
}

TEST(Polylog, ZeroAndPole)
{
    for (int n = 0; n <= 8; ++n) {
        EXPECT_EQ(li_neg(n, Rational(0)), Rational(0));
        EXPECT_THROW(li_neg(n, Rational(1)), PoleError);
    }
}

TEST(Polylog, Realizations)
{
    Polynomial one_minus_z({Rational(1), Rational(-1)});
    EXPECT_EQ(li_neg_rational(0).realization, RationalFunction(Polynomial::z(), one_minus_z));
    EXPECT_EQ(li_neg_rational(1).realization, RationalFunction(Polynomial::z(), one_minus_z * one_minus_z));
    Polynomial num({Rational(0), Rational(1), Rational(4), Rational(1)});
    Polynomial den = one_minus_z * one_minus_z * one_minus_z * one_minus_z;
    EXPECT_EQ(li_neg_rational(3).realization, RationalFunction(num, den));
    EXPECT_EQ(li_neg_rational(3).order, 3);
}

TEST(Polylog, MatchesEulerianNumbers)
{
    const std::vector<Rational> points{Rational(1, 2), Rational(-3), Rational(5, 7), Rational(2), Rational(-1, 9)};
    for (int n = 0; n <= 15; ++n) {
        for (const auto &z : points) {
            EXPECT_EQ(li_neg(n, z), oracle::li_neg(n, z)) << "n = " << n << ", z = " << z;
        }
    }
}

TEST(Polylog, ScaledRealization)
{
    auto f = li_neg_scaled(3, Rational(1, 3));
    EXPECT_EQ(f(Rational(2)), oracle::li_neg(3, Rational(2, 3)));
    EXPECT_THROW(f(Rational(3)), PoleError);
}

TEST(Polylog, ExpansionAtExpExamples)
{
    auto s = li_neg_at_exp(1, 0);
    EXPECT_EQ(s.pole_order(), 2);
    EXPECT_EQ(s.coeff(-2), Rational(1));
    EXPECT_EQ(s.coeff(-1), Rational(0));
    EXPECT_EQ(s.coeff(0), Rational(-1, 12));
    auto t = li_neg_at_exp(3, 0);
    EXPECT_EQ(t.pole_order(), 4);
    EXPECT_EQ(t.coeff(-4), Rational(6));
}

TEST(PolylogProperties, Inversion)
{
    auto r = props::li_inversion(2024);
    EXPECT_TRUE(r.passed()) << r.summary();
}

TEST(PolylogProperties, DerivativeRecurrence)
{
    auto r = props::li_derivative_recurrence();
    EXPECT_TRUE(r.passed()) << r.summary();
}

TEST(PolylogProperties, ExpansionConsistency)
{
    auto r = props::li_expansion_consistency();
    EXPECT_TRUE(r.passed()) << r.summary();
}

TEST(PolylogProperties, PartialSums)
{
    auto r = props::li_partial_sums(7);
    EXPECT_TRUE(r.passed()) << r.summary();
}
