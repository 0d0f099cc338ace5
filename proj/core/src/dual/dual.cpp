#include "striptr/dual/dual.hpp"

#include "striptr/error.hpp"
#include "striptr/exact/bernoulli.hpp"
#include "striptr/polylog/polylog.hpp"

namespace striptr {

namespace {

RationalFunction li_combination(int n, const StripGeometry &geom)
{
    RationalFunction c;
    for (const auto &a : geom.alphas()) {
        c += li_neg_scaled(n, a);
    }
    for (const auto &b : geom.betas_with_unit()) {
        c -= li_neg_scaled(n, b);
    }
    return c;
}

LaurentSeries<Rational> li_combination_laurent(int n, const StripGeometry &geom, const Rational &p, int max_power)
{
    LaurentSeries<Rational> c(0, {}, max_power + 1);
    for (const auto &a : geom.alphas()) {
        c += li_neg_scaled(n, a).laurent_at(p, max_power);
    }
    for (const auto &b : geom.betas_with_unit()) {
        c -= li_neg_scaled(n, b).laurent_at(p, max_power);
    }
    return c;
}

} // namespace

LaurentSeries<Rational> omega_dual_laurent(int g, const StripGeometry &geom, const Rational &p, int max_power)
{
    if (g < 1) {
        throw UnsupportedError("omega_dual_laurent: genus must be at least 1");
    }
    if (p.is_zero()) {
        throw PoleError("omega_dual_laurent: expansion point z = 0");
    }
    // The combination has a pole of order at most 2g, so 1/z is needed 2g
    // orders further for the product to be known through max_power.
    auto inv_z = RationalFunction(Polynomial(Rational(1)), Polynomial::z()).laurent_at(p, max_power + 2 * g);
    return (li_combination_laurent(2 * g - 1, geom, p, max_power) * inv_z) * s_inverse_coefficient(g);
}

LaurentSeries<Rational> omega_dual_primitive_laurent(int g, const StripGeometry &geom, const Rational &p,
                                                     int max_power)
{
    if (g < 1) {
        throw UnsupportedError("omega_dual_primitive_laurent: genus must be at least 1");
    }
    return li_combination_laurent(2 * g - 2, geom, p, max_power) * s_inverse_coefficient(g);
}

RationalFunction DualCorrelator::one_form() const
{
    return combination * RationalFunction(prefactor) / RationalFunction::z();
}

DualCorrelator omega_dual(int g, const StripGeometry &geom)
{
    if (g < 1) {
        throw UnsupportedError("omega_dual: genus must be at least 1");
    }
    geom.require_admissible();
    return DualCorrelator{g, s_inverse_coefficient(g), li_combination(2 * g - 1, geom)};
}

RationalFunction omega_dual_primitive(int g, const StripGeometry &geom)
{
    if (g < 1) {
        throw UnsupportedError("omega_dual_primitive: genus must be at least 1");
    }
    geom.require_admissible();
    return RationalFunction(s_inverse_coefficient(g)) * li_combination(2 * g - 2, geom);
}

Rational dual_free_energy(int g, const StripGeometry &geom)
{
    if (g < 2) {
        throw UnsupportedError("dual_free_energy: genus must be at least 2");
    }
    Rational total;
    // The dual recursion takes residues at the zeros of dy.
    for (const auto &p : y_ramification_points(geom)) {
        (void)p;
        throw UnsupportedError("dual free energy with ramified y is not implemented");
    }
    return total;
}

} // namespace striptr
