#include <gtest/gtest.h>

#include <thread>

#include "oracles.hpp"
#include "properties.hpp"
#include "striptr/error.hpp"
#include "striptr/exact/bernoulli.hpp"
#include "striptr/exact/complex_ball.hpp"
#include "striptr/exact/laurent.hpp"
#include "striptr/exact/monomial.hpp"
#include "striptr/exact/rational.hpp"
#include "striptr/exact/series.hpp"

using namespace striptr;

TEST(Rational, LowestTermsAndSign)
{
    Rational r(6, -4);
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(Rational(8, 4).to_string(), "2");
    EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
    EXPECT_EQ(Rational::parse("7"), Rational(7));
}

TEST(Rational, ParseErrors)
{
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
    EXPECT_THROW(Rational::parse("0.5"), ParseError);
    EXPECT_THROW(Rational::parse(""), ParseError);
    EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}

TEST(Rational, BinomialAndFactorial)
{
    EXPECT_EQ(factorial(10), Rational(3628800));
    EXPECT_EQ(binomial(7, 3), Rational(35));
    EXPECT_EQ(binomial(Rational(1, 2), 2), Rational(-1, 8));
    EXPECT_EQ(binomial(Rational(1, 2), 3), oracle::binomial(Rational(1, 2), 3));
}

TEST(Bernoulli, Examples)
{
    EXPECT_EQ(bernoulli(0), Rational(1));
    EXPECT_EQ(bernoulli(1), Rational(-1, 2));
    EXPECT_EQ(bernoulli(2), Rational(1, 6));
    EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
}

TEST(Bernoulli, MatchesAkiyamaTanigawa)
{
    for (int m = 0; m <= 40; ++m) {
        EXPECT_EQ(bernoulli(m), oracle::bernoulli(m)) << "m = " << m;
    }
}

TEST(Bernoulli, ConcurrentCallsAgree)
{
    std::vector<std::vector<Rational>> seen(4);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&, t] {
            for (int m = 60; m >= 0; --m) {
                seen[t].push_back(bernoulli(m));
            }
        });
    }
    for (auto &th : threads) {
        th.join();
    }
    for (int t = 1; t < 4; ++t) {
        EXPECT_EQ(seen[t], seen[0]);
    }
}

TEST(Bernoulli, RecurrenceProperty)
{
    auto r = props::bernoulli_recurrence();
    EXPECT_TRUE(r.passed()) << r.summary();
}

TEST(SInverse, Examples)
{
    auto s = s_inverse_series(4);
    EXPECT_EQ(s[0], Rational(1));
    EXPECT_EQ(s[1], Rational(0));
    EXPECT_EQ(s[2], Rational(-1, 24));
    EXPECT_EQ(s[3], Rational(0));
    EXPECT_EQ(s[4], Rational(7, 5760));
    EXPECT_EQ(s_inverse_series(0)[0], Rational(1));
    EXPECT_EQ(s_inverse_squared_coefficient(1), Rational(-1, 12));
}

TEST(SInverse, MatchesDirectInversion)
{
    const int T = 24;
    auto s = s_inverse_series(T);
    auto o = oracle::s_inverse(T);
    for (int k = 0; k <= T; ++k) {
        EXPECT_EQ(s[k], o[k]) << "k = " << k;
    }
    for (int g = 1; 2 * g <= T; ++g) {
        EXPECT_EQ(s_inverse_coefficient(g), o[2 * g]);
    }
}

TEST(SInverse, SquaredExpansionProperty)
{
    auto r = props::s_inverse_squared(30);
    EXPECT_TRUE(r.passed()) << r.summary();
}

TEST(Series, ExpOfLogOnePlusT)
{
    auto t = TruncatedSeries<Rational>::variable(6);
    auto one_plus = t + TruncatedSeries<Rational>::constant(Rational(1), 6);
    EXPECT_EQ(one_plus.log().exp(), one_plus);
}

TEST(Series, ReversionLagrangeExample)
{
    TruncatedSeries<Rational> s({Rational(0), Rational(1), Rational(-1), Rational(0)}, 3);
    auto r = s.reversion();
    EXPECT_EQ(r[1], Rational(1));
    EXPECT_EQ(r[2], Rational(1));
    EXPECT_EQ(r[3], Rational(2));
}

TEST(Series, IntegrateGeometric)
{
    TruncatedSeries<Rational> g({Rational(1), Rational(1), Rational(1)}, 2);
    auto i = g.integral();
    EXPECT_EQ(i.truncation(), 3);
    EXPECT_EQ(i[0], Rational(0));
    EXPECT_EQ(i[1], Rational(1));
    EXPECT_EQ(i[2], Rational(1, 2));
    EXPECT_EQ(i[3], Rational(1, 3));
}

TEST(Series, MismatchedTruncationsUseTheMinimum)
{
    TruncatedSeries<Rational> a({Rational(1), Rational(2), Rational(3)}, 2);
    TruncatedSeries<Rational> b({Rational(1), Rational(1)}, 1);
    EXPECT_EQ((a + b).truncation(), 1);
    EXPECT_EQ((a * b).truncation(), 1);
    EXPECT_THROW(b.truncated(2), MalformedSeriesError);
}

TEST(Series, PreconditionViolations)
{
    TruncatedSeries<Rational> c({Rational(2), Rational(1)}, 1);
    EXPECT_THROW(c.log(), MalformedSeriesError);
    EXPECT_THROW(c.exp(), MalformedSeriesError);
    EXPECT_THROW(c.reversion(), MalformedSeriesError);
    EXPECT_THROW(TruncatedSeries<Rational>::variable(3).compose(c), MalformedSeriesError);
    TruncatedSeries<Rational> z(3);
    EXPECT_THROW(z.inverse(), MalformedSeriesError);
}

TEST(Series, InversePairsProperty)
{
    auto r = props::series_inverse_pairs(11);
    EXPECT_TRUE(r.passed()) << r.summary();
}

TEST(Laurent, ResidueAndPoleOrder)
{
    // (1 + t) / t^3 = t^-3 + t^-2
    LaurentSeries<Rational> s(-3, {Rational(1), Rational(1)}, LaurentSeries<Rational>::kExact);
    EXPECT_EQ(s.pole_order(), 3);
    EXPECT_EQ(s.residue(), Rational(0));
    auto shifted = s.shifted(1);
    EXPECT_EQ(shifted.residue(), Rational(1));
    LaurentSeries<Rational> truncated(0, {Rational(1)}, 2);
    EXPECT_THROW(truncated.coeff(2), MalformedSeriesError);
}

TEST(Monomial, ParseAndPrint)
{
    Monomial m = Monomial::parse("Q1^2*Q3");
    EXPECT_EQ(m.to_string(), "Q1^2*Q3");
    EXPECT_EQ(m.degree(), 3);
    EXPECT_EQ(Monomial::parse("1").to_string(), "1");
    EXPECT_TRUE(Monomial::parse("1").is_one());
    EXPECT_EQ(Monomial::parse("Q^-1").exponent("Q"), -1);
    EXPECT_THROW(Monomial::parse("Q^"), ParseError);
    EXPECT_THROW(Monomial::parse("2*Q"), ParseError);
}

TEST(Monomial, NormalizationAndArithmetic)
{
    Monomial a = Monomial::parse("Q^-1*mu^-1");
    EXPECT_EQ(a.normalized().to_string(), "Q*mu");
    EXPECT_EQ((Monomial::parse("Q*mu") / Monomial::parse("mu")).to_string(), "Q");
    EXPECT_TRUE((Monomial::parse("Q") / Monomial::parse("Q")).is_one());
    std::map<std::string, Rational> v{{"Q", Rational(1, 2)}, {"mu", Rational(3)}};
    EXPECT_EQ(Monomial::parse("Q^2*mu^-1").evaluate(v), Rational(1, 12));
}

TEST(ComplexBall, ContainsExactResults)
{
    PrecisionScope scope(128);
    ComplexBall third = ComplexBall(1L) / ComplexBall(3L);
    ComplexBall back = third * ComplexBall(3L) - ComplexBall(1L);
    EXPECT_TRUE(back.contains_zero());
    EXPECT_LT(back.abs_upper(), 1e-35);
    ComplexBall i(Rational(0), Rational(1));
    ComplexBall m = i * i + ComplexBall(1L);
    EXPECT_TRUE(m.contains_zero());
    EXPECT_THROW(ComplexBall(1L) / ComplexBall(), PrecisionError);
}
