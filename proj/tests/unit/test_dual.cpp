#include <gtest/gtest.h>

#include "geometries.hpp"
#include "oracles.hpp"
#include "striptr/dual/dual.hpp"
#include "striptr/error.hpp"
#include "striptr/exact/bernoulli.hpp"

using namespace striptr;

TEST(Dual, ConifoldGenusOne)
{
    auto w = omega_dual(1, testgeom::conifold());
    EXPECT_EQ(w.prefactor, Rational(-1, 24));
    for (const Rational z : {Rational(1, 3), Rational(-5), Rational(7, 4)}) {
        Rational expected = oracle::li_neg(1, z / Rational(2)) - oracle::li_neg(1, z);
        EXPECT_EQ(w.combination(z), expected) << z;
    }
}

TEST(Dual, C3GenusTwo)
{
    auto w = omega_dual(2, testgeom::c3());
    EXPECT_EQ(w.prefactor, Rational(7, 5760));
    EXPECT_EQ(w.combination(Rational(1, 3)), -oracle::li_neg(3, Rational(1, 3)));
}

TEST(Dual, IndependentOfFraming)
{
    for (int g = 1; g <= 4; ++g) {
        auto a = omega_dual(g, testgeom::spp());
        auto b = omega_dual(g, testgeom::spp().with_framing(1));
        EXPECT_EQ(a.prefactor, b.prefactor);
        EXPECT_EQ(a.combination, b.combination);
    }
}

TEST(Dual, PrimitiveDifferentiatesToOneForm)
{
    for (const auto &[name, geom] : testgeom::standard_five()) {
        for (int g = 1; g <= 4; ++g) {
            auto prim = omega_dual_primitive(g, geom);
            EXPECT_EQ(prim.derivative(), omega_dual(g, geom).one_form()) << name << " g=" << g;
            EXPECT_EQ(prim(Rational(0)), Rational(0));
        }
    }
}

TEST(Dual, ConifoldPrimitiveGenusTwo)
{
    auto prim = omega_dual_primitive(2, testgeom::conifold());
    Rational z(2, 5);
    Rational expected = s_inverse_coefficient(2) * (oracle::li_neg(2, z / Rational(2)) - oracle::li_neg(2, z));
    EXPECT_EQ(prim(z), expected);
}

TEST(Dual, FreeEnergyVanishes)
{
    for (const auto &[name, geom] : testgeom::standard_five()) {
        for (int g = 2; g <= 5; ++g) {
            EXPECT_EQ(dual_free_energy(g, geom), Rational(0)) << name;
        }
    }
}

TEST(Dual, PoleStructure)
{
    auto geom = testgeom::six_punctured();
    std::vector<Rational> poles{Rational(1), Rational(2), Rational(5), Rational(3)};
    for (int g = 1; g <= 4; ++g) {
        auto form = omega_dual(g, geom).one_form();
        EXPECT_EQ(form.pole_order(Rational(0)), 0);
        Rational residue_sum;
        for (const auto &p : poles) {
            EXPECT_EQ(form.pole_order(p), 2 * g) << "g=" << g << " p=" << p;
            residue_sum += form.laurent_at(p, 2).residue();
        }
        EXPECT_EQ(residue_sum, Rational(0));
    }
}

TEST(Dual, LocalExpansionMatchesOneForm)
{
    auto geom = testgeom::spp();
    for (int g = 1; g <= 3; ++g) {
        auto form = omega_dual(g, geom).one_form();
        auto prim = omega_dual_primitive(g, geom);
        for (const Rational p : {Rational(1), Rational(1, 2), Rational(3), Rational(-2, 7)}) {
            auto local = omega_dual_laurent(g, geom, p, 6);
            auto direct = form.laurent_at(p, 6);
            auto plocal = omega_dual_primitive_laurent(g, geom, p, 6);
            auto pdirect = prim.laurent_at(p, 6);
            for (int k = -2 * g; k <= 6; ++k) {
                EXPECT_EQ(local.coeff(k), direct.coeff(k)) << "g=" << g << " p=" << p << " k=" << k;
                EXPECT_EQ(plocal.coeff(k), pdirect.coeff(k)) << "g=" << g << " p=" << p << " k=" << k;
            }
        }
    }
}

TEST(Dual, GenusZeroUnsupported)
{
    EXPECT_THROW(omega_dual(0, testgeom::conifold()), UnsupportedError);
}
