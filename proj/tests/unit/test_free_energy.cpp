#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "geometries.hpp"
#include "oracles.hpp"
#include "properties.hpp"
#include "striptr/error.hpp"
#include "striptr/exact/bernoulli.hpp"
#include "striptr/free_energy/free_energy.hpp"
#include "striptr/polylog/polylog.hpp"

using namespace striptr;

TEST(FreeEnergy, Examples)
{
    EXPECT_EQ(fg_closed(2, testgeom::c3()), Rational(-1, 5760));
    EXPECT_EQ(fg_residue(2, testgeom::c3()), Rational(-1, 5760));
    EXPECT_EQ(fg_closed(2, testgeom::conifold()), Rational(-5, 576));
    EXPECT_EQ(fg_residue(2, testgeom::conifold()), Rational(-5, 576));
}

TEST(FreeEnergy, ClosedMatchesOracleAndResidue)
{
    for (const auto &[name, geom] : testgeom::standard_five()) {
        for (int g = 2; g <= 6; ++g) {
            Rational closed = fg_closed(g, geom);
            EXPECT_EQ(closed, oracle::fg_closed(g, geom)) << name << " g=" << g;
            EXPECT_EQ(fg_residue(g, geom), closed) << name << " g=" << g;
        }
    }
}

TEST(FreeEnergy, AggregateMatchesRawResidues)
{
    for (const auto &geom : {testgeom::conifold(), testgeom::six_punctured(), testgeom::c3_z3()}) {
        for (int g = 2; g <= 4; ++g) {
            Rational sum;
            for (const auto &p : geom.parameters()) {
                Rational agg = residue_at_point_aggregate(g, geom, p);
                EXPECT_EQ(residue_at_point(g, geom, p), agg) << geom.describe() << " " << p.name() << " g=" << g;
                sum += agg;
            }
            EXPECT_EQ(sum / Rational(2 - 2 * g), fg_closed(g, geom));
        }
    }
}

TEST(FreeEnergy, AggregateExample)
{
    // conifold, point 1/beta_0 = 1, g = 2
    auto s = oracle::s_inverse(4);
    Rational s2 = s[0] * s[4] + s[2] * s[2] + s[4] * s[0];
    Rational expected = Rational(1, 2) * s2 * (oracle::bernoulli(2) + Rational(2) * oracle::li_neg(1, Rational(1, 2)));
    EXPECT_EQ(residue_at_point_aggregate(2, testgeom::conifold(), {ParamKind::beta, 0}), expected);
    // r = s = 0: only the Bernoulli term remains
    Rational c3 = Rational(1, 2) * s_inverse_squared_coefficient(3) * oracle::bernoulli(4);
    EXPECT_EQ(residue_at_point_aggregate(3, testgeom::c3(), {ParamKind::beta, 0}), c3);
}

TEST(FreeEnergy, FramingDoesNotEnter)
{
    auto base = testgeom::spp();
    for (int g = 2; g <= 4; ++g) {
        EXPECT_EQ(fg_residue(g, base), fg_residue(g, base.with_framing(3)));
        EXPECT_EQ(fg_closed(g, base), fg_closed(g, base.with_framing(3)));
    }
}

TEST(FreeEnergy, InvertingEveryParameter)
{
    for (const auto &[name, geom] : testgeom::standard_five()) {
        std::vector<Rational> a, b;
        for (const auto &x : geom.alphas()) {
            a.push_back(x.inverse());
        }
        for (const auto &x : geom.betas()) {
            b.push_back(x.inverse());
        }
        StripGeometry inverted(a, b, geom.framing());
        for (int g = 2; g <= 5; ++g) {
            EXPECT_EQ(fg_closed(g, inverted), fg_closed(g, geom)) << name << " g=" << g;
        }
    }
}

TEST(FreeEnergy, ConstantMapLimit)
{
    for (const auto &[name, geom] : testgeom::standard_five()) {
        for (int g = 2; g <= 6; ++g) {
            Rational chi(1 + geom.r() + geom.s());
            Rational expected = -chi / Rational(2) * oracle::bernoulli(2 * g) * oracle::bernoulli(2 * g - 2) /
                                (Rational(2 * g) * Rational(2 - 2 * g) * oracle::factorial(2 * g - 2));
            auto terms = fg_closed_terms(g, geom);
            ASSERT_FALSE(terms.empty());
            EXPECT_EQ(terms.front().kind, ClosedTerm::Kind::constant_map);
            EXPECT_EQ(terms.front().value, expected);
            int pairs = 0;
            for (const auto &t : terms) {
                if (t.kind == ClosedTerm::Kind::pair) {
                    ++pairs;
                    // the pair weight vanishes with its argument
                    EXPECT_EQ(li_neg(2 * g - 3, Rational(0)), Rational(0));
                    Rational weight = oracle::bernoulli(2 * g) / (Rational(2 * g) * oracle::factorial(2 * g - 2));
                    EXPECT_EQ(t.value, Rational(t.sign) * weight * oracle::li_neg(2 * g - 3, t.ratio));
                }
            }
            int n = 1 + geom.r() + geom.s();
            EXPECT_EQ(pairs, n * (n - 1) / 2);
        }
    }
}

TEST(Lemmas, LinearExamples)
{
    EXPECT_EQ(residue_lemma_linear(Rational(2), 2), Rational(2));
    EXPECT_EQ(residue_lemma_linear(Rational(1, 2), 2), Rational(8));
    EXPECT_EQ(residue_lemma_linear(Rational(-3), 3), Rational(4) * oracle::li_neg(3, Rational(-3)) / Rational(-3));
    EXPECT_THROW(residue_lemma_linear(Rational(1), 2), UnsupportedError);
}

TEST(Lemmas, LogAtOne)
{
    EXPECT_EQ(residue_lemma_log_at_one(2), Rational(-1, 6));
    EXPECT_EQ(residue_lemma_log_at_one(3), Rational(1, 30));
    EXPECT_EQ(residue_lemma_log_at_one(6), Rational(-5, 66));
}

TEST(Lemmas, QuadraticDiagonal)
{
    EXPECT_EQ(residue_quadratic_diag(1, 1), Rational(-1, 6));
    EXPECT_EQ(residue_quadratic_diag(1, 2), Rational(1, 30));
    EXPECT_EQ(residue_quadratic_diag(2, 2), Rational(-1, 42));
    for (int g1 = 1; g1 <= 6; ++g1) {
        for (int g2 = 1; g2 <= 6; ++g2) {
            EXPECT_EQ(residue_quadratic_diag(g1, g2), -oracle::bernoulli(2 * g1 + 2 * g2 - 2));
        }
    }
}

TEST(Lemmas, QuadraticMixed)
{
    EXPECT_EQ(residue_quadratic_mixed(Rational(2), 1, 1), Rational(2));
    EXPECT_EQ(residue_quadratic_mixed(Rational(1, 2), 2, 1), Rational(3) * oracle::li_neg(3, Rational(1, 2)));
    EXPECT_EQ(residue_quadratic_mixed(Rational(5, 7), 1, 2), oracle::li_neg(3, Rational(5, 7)));
}

TEST(Lemmas, RandomizedLinear)
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 25);
    int checked = 0;
    while (checked < 60) {
        Rational a(num(rng), den(rng));
        if (a.is_zero() || a.is_one()) {
            continue;
        }
        int g = 2 + checked % 5;
        EXPECT_EQ(residue_lemma_linear(a, g) * a / Rational(2 * g - 2), oracle::li_neg(2 * g - 3, a))
            << "a=" << a << " g=" << g;
        ++checked;
    }
}

TEST(FreeEnergy, OutOfDomain)
{
    EXPECT_THROW(fg_closed(1, testgeom::conifold()), UnsupportedError);
    EXPECT_THROW(fg_residue(0, testgeom::conifold()), UnsupportedError);
    StripGeometry dup({Rational(1, 2)}, {Rational(1, 2)}, 0);
    EXPECT_THROW(fg_residue(2, dup), Error);
}

TEST(FreeEnergy, RelativeDeviation)
{
    PrecisionScope scope(128);
    ComplexBall v(Rational(-5, 576));
    // only the rounding of the midpoint remains
    EXPECT_LT(relative_deviation(v, Rational(-5, 576)), std::ldexp(1.0, -126));
    EXPECT_EQ(relative_deviation(ComplexBall(Rational(3)), Rational(3)), 0.0);
    ComplexBall off(Rational(-5, 576) * Rational(1001, 1000));
    EXPECT_NEAR(relative_deviation(off, Rational(-5, 576)), 1e-3, 1e-12);
}

TEST(FreeEnergyProperties, RouteInvariance)
{
    auto r = props::route_invariance(3);
    EXPECT_TRUE(r.passed()) << r.summary();
}
