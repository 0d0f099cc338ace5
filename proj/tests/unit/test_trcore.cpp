#include <gtest/gtest.h>

#include <complex>
#include <future>

#include "geometries.hpp"
#include "oracles.hpp"
#include "properties.hpp"
#include "striptr/error.hpp"
#include "striptr/free_energy/free_energy.hpp"
#include "striptr/trcore/recursion.hpp"

using namespace striptr;

namespace {

std::complex<double> as_complex(const ComplexBall &z)
{
    return {z.real().to_double(), z.imag().to_double()};
}

constexpr double kTol = 1e-20;

} // namespace

TEST(Bergman, SymmetryPoleAndOrigin)
{
    PrecisionScope scope(128);
    ComplexBall a(Rational(1, 3), Rational(2)), b(Rational(-5, 4), Rational(1, 7));
    auto ab = as_complex(bergman(a, b));
    auto ba = as_complex(bergman(b, a));
    EXPECT_LT(std::abs(ab - ba), 1e-30);
    EXPECT_THROW(bergman(a, a), PoleError);
    ComplexBall z(Rational(3), Rational(-1));
    std::complex<double> zc(3.0, -1.0);
    EXPECT_LT(std::abs(as_complex(bergman(ComplexBall(), z)) - 1.0 / (zc * zc)), 1e-15);
}

TEST(Bergman, Expansion)
{
    PrecisionScope scope(128);
    ComplexBall z(Rational(2), Rational(1)), c(Rational(1, 2), Rational(-1, 3));
    std::complex<double> d = as_complex(z) - as_complex(c);
    auto s = bergman_expansion(z, c, 8);
    for (int k = 0; k <= 8; ++k) {
        std::complex<double> expected = double(k + 1) / std::pow(d, k + 2);
        EXPECT_LT(std::abs(as_complex(s[k]) - expected), 1e-14 * std::abs(expected)) << k;
    }
}

TEST(Deck, ConifoldSecondCoefficient)
{
    auto geom = testgeom::conifold();
    PrecisionScope scope(256);
    auto pts = ramification_points(geom, 256);
    ASSERT_EQ(pts.size(), 2u);
    const std::complex<double> p(1.0, 1.0);
    ASSERT_LT(std::abs(as_complex(pts[1]) - p), 1e-12);
    auto d = deck(geom, pts, 1, 12);
    const std::complex<double> one(1.0, 0.0);
    auto x2 = -one / std::pow(one - p, 2) + 0.25 / std::pow(one - p / 2.0, 2) + one / (p * p);
    auto x3 = -2.0 / std::pow(one - p, 3) + 0.25 / std::pow(one - p / 2.0, 3) - 2.0 / (p * p * p);
    auto a2 = -x3 / (3.0 * x2);
    EXPECT_LT(std::abs(as_complex(d.sigma[1]) + 1.0), 1e-14);
    EXPECT_LT(std::abs(as_complex(d.sigma[2]) - a2), 1e-12);
    EXPECT_LT(d.involution_defect(), 1e-40);
}

TEST(TRProperties, DeckInvolution)
{
    auto r = props::deck_involution();
    EXPECT_TRUE(r.passed()) << r.summary();
}

TEST(TRProperties, ResidueFree)
{
    auto r = props::correlator_residue_free();
    EXPECT_TRUE(r.passed()) << r.summary();
}

TEST(TRProperties, Symmetry)
{
    auto r = props::correlator_symmetry(41);
    EXPECT_TRUE(r.passed()) << r.summary();
}

TEST(TRProperties, PhiConstantIndependence)
{
    auto r = props::phi_constant_independence(8);
    EXPECT_TRUE(r.passed()) << r.summary();
}

TEST(TRFreeEnergy, ConifoldAndSppGenusTwo)
{
    for (const auto &geom : {testgeom::conifold(), testgeom::spp()}) {
        ComplexBall tr = tr_free_energy(2, geom, 256);
        EXPECT_LT(relative_deviation(tr, oracle::fg_closed(2, geom)), kTol) << geom.describe();
    }
}

TEST(TRFreeEnergy, FramingIndependence)
{
    auto geom = testgeom::conifold();
    ComplexBall f0 = tr_free_energy(2, geom, 256);
    ComplexBall f1 = tr_free_energy(2, geom.with_framing(1), 256);
    PrecisionScope scope(288);
    ComplexBall diff = f0 - f1;
    EXPECT_LT(diff.mid_abs() / std::abs(as_complex(f0)), kTol);
}

TEST(TRFreeEnergy, TruncationDoubling)
{
    auto geom = testgeom::spp();
    TRSolver base(geom, TROptions{}, 2, 1);
    TROptions doubled;
    doubled.truncation = 2 * base.truncation();
    TRSolver fine(geom, doubled, 2, 1);
    ComplexBall a = base.free_energy(2);
    ComplexBall b = fine.free_energy(2);
    EXPECT_EQ(base.truncation(), 4 * (3 * 2 + 1) + 8);
    PrecisionScope scope(512);
    EXPECT_LT((a - b).mid_abs() / std::abs(as_complex(a)), std::ldexp(1.0, -128));
}

TEST(TRFreeEnergy, ParameterOrder)
{
    auto geom = testgeom::spp();
    StripGeometry reversed({geom.alphas()[1], geom.alphas()[0]}, {}, 0);
    ComplexBall a = tr_free_energy(2, reversed, 256, false);
    EXPECT_LT(relative_deviation(a, fg_closed(2, geom)), kTol);
}

TEST(TRFreeEnergy, Domain)
{
    EXPECT_THROW(tr_free_energy(4, testgeom::conifold(), 256), BudgetError);
    EXPECT_THROW(tr_free_energy(1, testgeom::conifold(), 256), UnsupportedError);
    TRSolver s(testgeom::conifold(), TROptions{}, 1, 1);
    EXPECT_THROW(s.omega(0, 2), UnsupportedError);
    EXPECT_THROW(s.omega(3, 2), BudgetError);
}

TEST(TRSolver, ConcurrentQueriesShareResults)
{
    TRSolver s(testgeom::conifold(), TROptions{}, 1, 2);
    std::vector<std::future<std::shared_ptr<const Correlator>>> jobs;
    for (int k = 0; k < 4; ++k) {
        jobs.push_back(std::async(std::launch::async, [&s, k] { return k % 2 ? s.omega(1, 2) : s.omega(0, 4); }));
    }
    std::vector<std::shared_ptr<const Correlator>> got;
    for (auto &j : jobs) {
        got.push_back(j.get());
    }
    EXPECT_EQ(got[0], got[2]);
    EXPECT_EQ(got[1], got[3]);
    EXPECT_EQ(got[1]->genus(), 1);
    EXPECT_EQ(got[0]->n(), 4);
    EXPECT_EQ(got[1], s.omega(1, 2));
}

TEST(TRSolver, PoleOrderBound)
{
    EXPECT_EQ(max_basis_order(0, 3), 1);
    EXPECT_EQ(max_basis_order(1, 1), 3);
    EXPECT_EQ(max_basis_order(2, 1), 9);
}
