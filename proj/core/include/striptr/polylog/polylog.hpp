#pragma once

#include "striptr/exact/laurent.hpp"
#include "striptr/exact/rational.hpp"
#include "striptr/polylog/rational_function.hpp"

namespace striptr {

/// Li_{-n}(z) realized as a rational function of z.
struct NegPolylog {
    int order = 0;                 // n, representing Li_{-n}
    RationalFunction realization;  // in z
};

/// Li_{-n}(z) = (z d/dz)^n z/(1-z). Cached; safe to call concurrently.
NegPolylog li_neg_rational(int n);

/// Exact Li_{-n}(z); Li_{-n}(0) = 0. Throws PoleError at z = 1.
Rational li_neg(int n, const Rational &z);

/// Li_{-n}(c z) as a rational function of z.
RationalFunction li_neg_scaled(int n, const Rational &c);

/// mu-Laurent expansion of Li_{-n}(e^mu) with coefficients through mu^T:
/// n!/(-mu)^{n+1} - sum_{k=0}^{T} B_{k+n+1} mu^k / (k! (k+n+1)).
LaurentSeries<Rational> li_neg_at_exp(int n, int T);

} // namespace striptr
