#pragma once

#include "striptr/exact/laurent.hpp"
#include "striptr/exact/rational.hpp"
#include "striptr/polylog/rational_function.hpp"
#include "striptr/strip/geometry.hpp"

namespace striptr {

/// Dual correlator omega^vee_{g,1} = prefactor * combination(z) * dz/z, with
///   combination(z) = sum_i Li_{1-2g}(a_i z) - sum_{j>=0} Li_{1-2g}(b_j z),
///   prefactor = [hbar^{2g}] 1/S(hbar).
struct DualCorrelator {
    int genus = 1;
    Rational prefactor;
    RationalFunction combination;

    /// Coefficient of dz.
    RationalFunction one_form() const;
};

/// Throws UnsupportedError for g < 1.
DualCorrelator omega_dual(int g, const StripGeometry &geom);

/// prefactor * (sum_i Li_{2-2g}(a_i z) - sum_j Li_{2-2g}(b_j z)), a primitive
/// of omega_dual with respect to dz/z-integration.
RationalFunction omega_dual_primitive(int g, const StripGeometry &geom);

/// Laurent expansion of the dz-coefficient of omega_dual at z = p + t, with
/// coefficients through t^{max_power}. Each polylog term is expanded
/// separately, so no global common denominator is formed.
LaurentSeries<Rational> omega_dual_laurent(int g, const StripGeometry &geom, const Rational &p, int max_power);

/// Laurent expansion of omega_dual_primitive at z = p + t.
LaurentSeries<Rational> omega_dual_primitive_laurent(int g, const StripGeometry &geom, const Rational &p,
                                                     int max_power);

/// Dual free energy: the sum over zeros of dy, which is empty.
Rational dual_free_energy(int g, const StripGeometry &geom);

} // namespace striptr
