#pragma once

#include <vector>

#include "striptr/exact/complex_ball.hpp"
#include "striptr/exact/series.hpp"
#include "striptr/strip/geometry.hpp"
#include "striptr/trcore/local_series.hpp"

namespace striptr {

/// Local deck involution sigma(t) = -t + a_2 t^2 + ... at ramification point
/// `index`, in the coordinate z = p + t, known through t^T.
struct DeckSeries {
    int index = 0;
    TruncatedSeries<ComplexBall> sigma;

    /// Largest |coefficient| of sigma(sigma(t)) - t, relative to the matching
    /// coefficient of sigma when that exceeds one.
    double involution_defect() const;
};

/// Coefficient of dz1 dz2 in the genus-0 Bergman kernel, 1/(z1 - z2)^2.
/// Throws PoleError when the points cannot be separated.
ComplexBall bergman(const ComplexBall &z1, const ComplexBall &z2);

/// Taylor coefficients in t of 1/(z - center - t)^2 through t^T, i.e. the
/// expansion of the Bergman kernel in its second argument.
TruncatedSeries<ComplexBall> bergman_expansion(const ComplexBall &z, const ComplexBall &center, int T);

/// Everything the recursion needs at one ramification point, at truncation T
/// and the current working precision.
struct LocalFrame {
    int index = 0;
    ComplexBall center;
    int truncation = 0;
    long precision_bits = 0;

    TruncatedSeries<ComplexBall> dx;     // x'(p + t), constant term zero
    TruncatedSeries<ComplexBall> x_diff; // x(p + t) - x(p)
    TruncatedSeries<ComplexBall> log_y;  // y(p + t) - y(p) = log(1 + t/p)
    DeckSeries deck;

    LocalSeries sigma;        // sigma(t)
    LocalSeries dsigma;       // sigma'(t)
    LocalSeries inv_sigma;    // 1/sigma(t)
    LocalSeries kernel_den_inv; // 1 / ((y(t) - y(sigma(t))) x'(p + t))
};

/// Deck transformation at ramification point `index` of `points`.
DeckSeries deck(const StripGeometry &g, const std::vector<ComplexBall> &points, int index, int T);

/// Builds the local frame; throws PrecisionError if the deck involution
/// fails its consistency check at tolerance 2^{-P/2}.
LocalFrame make_frame(const StripGeometry &g, const std::vector<ComplexBall> &points, int index, int T);

} // namespace striptr
