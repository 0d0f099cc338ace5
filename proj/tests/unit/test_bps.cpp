#include <gtest/gtest.h>

#include <algorithm>

#include "geometries.hpp"
#include "oracles.hpp"
#include "properties.hpp"
#include "striptr/bps/bps.hpp"
#include "striptr/error.hpp"

using namespace striptr;

namespace {

std::map<Monomial, int> signs(std::initializer_list<std::pair<const char *, int>> entries)
{
    std::map<Monomial, int> out;
    for (const auto &[m, s] : entries) {
        out[Monomial::parse(m)] = s;
    }
    return out;
}

oracle::QTable table_of(const QSeries &s)
{
    oracle::QTable out;
    for (const auto &[k, m, c] : s.terms()) {
        out[{k, m}] = c;
    }
    return out;
}

oracle::QTable nonzero(oracle::QTable t)
{
    std::erase_if(t, [](const auto &kv) { return kv.second.is_zero(); });
    return t;
}

oracle::QTable table_of(const DTReading &dt)
{
    oracle::QTable out;
    for (const auto &[key, c] : dt.coefficients) {
        out[{key.second, key.first}] = c;
    }
    return nonzero(out);
}

bool has_line(const CrosscheckReport &r, const std::string &line)
{
    return std::find(r.lines.begin(), r.lines.end(), line) != r.lines.end();
}

} // namespace

TEST(GvSigns, Examples)
{
    EXPECT_EQ(gv_signs(testgeom::conifold()), signs({{"Q", 1}}));
    EXPECT_EQ(gv_signs(testgeom::one_beta()), signs({{"Q", -1}}));
    EXPECT_EQ(gv_signs(testgeom::spp()), signs({{"Q", 1}, {"Q*mu", -1}, {"mu", 1}}));
    EXPECT_TRUE(gv_signs(testgeom::c3()).empty());
}

TEST(GvSigns, Errors)
{
    auto ambiguous = testgeom::labelled({Rational(1, 2), Rational(1, 4)}, {}, 0, {"Q", "Q^2"}, {}, {"Q"});
    EXPECT_THROW(gv_signs(ambiguous), AmbiguityError);
    StripGeometry unlabelled({Rational(1, 2)}, {}, 0);
    EXPECT_THROW(gv_signs(unlabelled), ValidationError);
}

TEST(OmegaTable, GoldenTables)
{
    using Lines = std::vector<std::string>;
    EXPECT_EQ(omega_table(testgeom::conifold()).lines(), (Lines{"nD0, -2", "D2_Q-kD0, 1", "D2bar_Q-kD0, 1"}));
    EXPECT_EQ(omega_table(testgeom::one_beta()).lines(), (Lines{"nD0, -2", "D2_Q-kD0, -1", "D2bar_Q-kD0, -1"}));
    EXPECT_EQ(omega_table(testgeom::spp()).lines(),
              (Lines{"nD0, -3", "D2_Q-kD0, 1", "D2_Q*mu-kD0, -1", "D2_mu-kD0, 1", "D2bar_Q-kD0, 1",
                     "D2bar_Q*mu-kD0, -1", "D2bar_mu-kD0, 1"}));
    EXPECT_EQ(omega_table(testgeom::c3_z3()).lines(),
              (Lines{"nD0, -3", "D2_Q1-kD0, -1", "D2_Q1*Q2-kD0, -1", "D2_Q2-kD0, -1", "D2bar_Q1-kD0, -1",
                     "D2bar_Q1*Q2-kD0, -1", "D2bar_Q2-kD0, -1"}));
    EXPECT_EQ(omega_table(testgeom::six_punctured()).lines(),
              (Lines{"nD0, -4", "D2_Q1-kD0, 1", "D2_Q1*Q2-kD0, -1", "D2_Q1*Q2*Q3-kD0, 1", "D2_Q2-kD0, 1",
                     "D2_Q2*Q3-kD0, -1", "D2_Q3-kD0, 1", "D2bar_Q1-kD0, 1", "D2bar_Q1*Q2-kD0, -1",
                     "D2bar_Q1*Q2*Q3-kD0, 1", "D2bar_Q2-kD0, 1", "D2bar_Q2*Q3-kD0, -1", "D2bar_Q3-kD0, 1"}));
    EXPECT_EQ(omega_table(testgeom::c3()).lines(), (Lines{"nD0, -1"}));
}

TEST(OmegaTable, StructuralInvariants)
{
    for (const auto &[name, geom] : testgeom::standard_five()) {
        auto t = omega_table(geom);
        EXPECT_EQ(t.at({ChargeKind::d0_tower, Monomial()}), -(1 + geom.r() + geom.s())) << name;
        for (const auto &e : t.entries()) {
            if (e.charge.kind == ChargeKind::d2_bound) {
                EXPECT_EQ(t.at({ChargeKind::d2bar_bound, e.charge.curve}), e.omega) << name;
            }
        }
        EXPECT_THROW(t.at({ChargeKind::d2_bound, Monomial::parse("Z")}), std::out_of_range);
    }
}

TEST(ZSeries, MatchesDirectExpansion)
{
    for (const auto &[name, geom] : testgeom::standard_five()) {
        for (int N : {1, 3, 4}) {
            for (long D : {1L, 2L, 3L}) {
                auto got = nonzero(table_of(z_product_log_series(geom, N, D)));
                EXPECT_EQ(got, nonzero(oracle::log_z(geom, N, D))) << name << " N=" << N << " D=" << D;
            }
        }
    }
}

TEST(ZSeries, DtReadingMatchesProduct)
{
    for (const auto &[name, geom] : testgeom::standard_five()) {
        auto dt = dt_read(geom, 3, 2);
        EXPECT_FALSE(dt.caveat.empty());
        EXPECT_EQ(table_of(dt), nonzero(oracle::z_product(geom, 3, 2))) << name;
    }
}

TEST(ZSeries, SppPartitionFunctionDisplay)
{
    const std::vector<std::pair<Monomial, Rational>> factors{{Monomial::parse("Q"), Rational(1)},
                                                              {Monomial::parse("mu"), Rational(1)},
                                                              {Monomial(), Rational(-3, 2)},
                                                              {Monomial::parse("Q*mu"), Rational(-1)}};
    EXPECT_EQ(table_of(dt_read(testgeom::spp(), 4, 3)), nonzero(oracle::z_from_factors(factors, 4, 3)));
}

TEST(ZSeries, ConifoldDtExample)
{
    auto dt = dt_read(testgeom::conifold(), 3, 2);
    auto at = [&](const char *m, int k) { return dt.coefficients.at({Monomial::parse(m), k}); };
    EXPECT_EQ(at("1", 0), Rational(1));
    EXPECT_EQ(at("1", 1), Rational(1));
    EXPECT_EQ(at("Q", 1), Rational(-1));
    EXPECT_EQ(at("1", 2), Rational(3));
    EXPECT_EQ(at("Q", 2), Rational(-3));
    EXPECT_EQ(at("1", 3), Rational(6));
    EXPECT_EQ(at("Q", 3), Rational(-8));
    EXPECT_EQ(at("Q^2", 3), Rational(2));
}

TEST(ZSeries, Errors)
{
    EXPECT_THROW(z_product_log_series(testgeom::conifold(), 0, 1), UnsupportedError);
    EXPECT_THROW(dt_read(testgeom::conifold(), 2, 0), UnsupportedError);
    QSeries capped(3, 2);
    EXPECT_THROW(capped.add(1, Monomial::parse("Q^-1"), Rational(1)), UnsupportedError);
    QSeries s(2);
    s.add(0, Monomial(), Rational(2));
    EXPECT_THROW(s.log(), MalformedSeriesError);
    EXPECT_THROW(s.exp(), MalformedSeriesError);
    s.add(5, Monomial(), Rational(1));
    EXPECT_EQ(s.coeff(0, Monomial()), Rational(2));
}

TEST(Crosscheck, ConifoldLines)
{
    auto d1 = coefficient_crosscheck(testgeom::conifold(), 1, 2);
    EXPECT_TRUE(d1.passed) << d1.first_failure;
    EXPECT_TRUE(has_line(d1, "Q, -1/240, -1/240"));
    EXPECT_TRUE(has_line(d1, "1, 1/240, 1/240"));
    auto d2 = coefficient_crosscheck(testgeom::conifold(), 2, 2);
    EXPECT_TRUE(d2.passed) << d2.first_failure;
    EXPECT_TRUE(has_line(d2, "Q^2, -1/120, -1/120"));
    EXPECT_THROW(coefficient_crosscheck(testgeom::conifold(), 0, 2), UnsupportedError);
}

TEST(Crosscheck, AllChannels)
{
    for (const auto &[name, geom] : testgeom::standard_five()) {
        for (int d = 1; d <= 6; ++d) {
            for (int g = 2; g <= 5; ++g) {
                auto r = coefficient_crosscheck(geom, d, g);
                EXPECT_TRUE(r.passed) << name << " d=" << d << " g=" << g << ": " << r.first_failure;
            }
        }
    }
}

TEST(BpsProperties, GvSignInvariance)
{
    auto r = props::gv_sign_invariance(13);
    EXPECT_TRUE(r.passed()) << r.summary();
}

TEST(BpsProperties, QSeriesRoundTrip)
{
    auto r = props::qseries_round_trip();
    EXPECT_TRUE(r.passed()) << r.summary();
}
