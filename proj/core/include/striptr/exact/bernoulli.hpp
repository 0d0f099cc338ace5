#pragma once

#include "striptr/exact/rational.hpp"
#include "striptr/exact/series.hpp"

namespace striptr {

/// Bernoulli number B_m with B_1 = -1/2. Cached; safe to call concurrently.
Rational bernoulli(long m);

/// hbar-series of 1/S(hbar) with S(h) = (e^{h/2} - e^{-h/2})/h, to order T.
TruncatedSeries<Rational> s_inverse_series(int T);

/// [hbar^{2g}] 1/S(hbar).
Rational s_inverse_coefficient(int g);

/// [hbar^{2g}] 1/S(hbar)^2, by squaring the series.
Rational s_inverse_squared_coefficient(int g);

} // namespace striptr
