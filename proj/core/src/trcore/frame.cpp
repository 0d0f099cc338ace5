#include "striptr/trcore/frame.hpp"

#include <algorithm>
#include <cmath>

#include "striptr/error.hpp"

namespace striptr {

double DeckSeries::involution_defect() const
{
    auto twice = sigma.compose(sigma);
    double d = 0.0;
    for (int k = 0; k <= twice.truncation(); ++k) {
        ComplexBall c = twice[k];
        if (k == 1) {
            c -= ComplexBall(1L);
        }
        // Coefficients grow geometrically; compare against their own size.
        d = std::max(d, c.abs_upper() / std::max(1.0, sigma[k].abs_upper()));
    }
    return d;
}

ComplexBall bergman(const ComplexBall &z1, const ComplexBall &z2)
{
    ComplexBall d = z1 - z2;
    if (d.contains_zero()) {
        throw PoleError("Bergman kernel evaluated on the diagonal");
    }
    return ComplexBall(1L) / (d * d);
}

TruncatedSeries<ComplexBall> bergman_expansion(const ComplexBall &z, const ComplexBall &center, int T)
{
    ComplexBall d = z - center;
    if (d.contains_zero()) {
        throw PoleError("Bergman expansion centred at its own pole");
    }
    ComplexBall inv = ComplexBall(1L) / d;
    TruncatedSeries<ComplexBall> s(T);
    ComplexBall power = inv * inv;
    for (int k = 0; k <= T; ++k) {
        s[k] = power * ComplexBall(static_cast<long>(k + 1));
        power *= inv;
    }
    return s;
}

namespace {

TruncatedSeries<ComplexBall> sqrt_unit(const TruncatedSeries<ComplexBall> &u)
{
    auto l = u.log();
    l *= ComplexBall(Rational(1, 2));
    return l.exp();
}

} // namespace

DeckSeries deck(const StripGeometry &g, const std::vector<ComplexBall> &points, int index, int T)
{
    const ComplexBall &p = points.at(static_cast<std::size_t>(index));
    // x'(p + t) through t^{T+1}; the constant term vanishes at a zero of dx.
    auto dx = dx_dz(g).taylor_at(p, T + 1);
    dx[0] = ComplexBall();
    auto X = dx.integral();  // x(p+t) - x(p) through t^{T+2}, starts at t^2
    const ComplexBall c2 = X[2];
    if (c2.contains_zero()) {
        throw DegenerateGeometryError("ramification point is not simple");
    }
    // X = c2 t^2 u(t) with u(0) = 1; zeta = t sqrt(u) satisfies X = c2 zeta^2.
    TruncatedSeries<ComplexBall> u(T);
    ComplexBall inv_c2 = ComplexBall(1L) / c2;
    u[0] = ComplexBall(1L);
    for (int k = 1; k <= T; ++k) {
        u[k] = X[k + 2] * inv_c2;
    }
    auto root = sqrt_unit(u);
    TruncatedSeries<ComplexBall> zeta(T);
    for (int k = 1; k <= T; ++k) {
        zeta[k] = root[k - 1];
    }
    auto inv = zeta.reversion();
    auto sigma = inv.compose(-zeta);
    return DeckSeries{index, std::move(sigma)};
}

LocalFrame make_frame(const StripGeometry &g, const std::vector<ComplexBall> &points, int index, int T)
{
    LocalFrame f;
    f.index = index;
    f.center = points.at(static_cast<std::size_t>(index));
    f.truncation = T;
    f.precision_bits = working_precision();

    f.deck = deck(g, points, index, T);
    double tol = std::ldexp(1.0, -static_cast<int>(f.precision_bits / 2));
    double inv_defect = f.deck.involution_defect();
    if (!(inv_defect < tol)) {
        throw PrecisionError("deck transformation fails the involution check (relative defect " +
                             std::to_string(std::log2(inv_defect)) + " bits)");
    }

    f.dx = dx_dz(g).taylor_at(f.center, T);
    f.dx[0] = ComplexBall();
    f.x_diff = f.dx.truncated(T - 1).integral();

    // log(1 + t/p)
    ComplexBall inv_p = ComplexBall(1L) / f.center;
    f.log_y = TruncatedSeries<ComplexBall>(T);
    ComplexBall power = inv_p;
    for (int k = 1; k <= T; ++k) {
        ComplexBall term = power / ComplexBall(static_cast<long>(k));
        f.log_y[k] = (k % 2 == 1) ? term : -term;
        power *= inv_p;
    }

    // x(p + sigma) - x(p + t) must vanish to the working order.
    auto xs = f.x_diff.compose(f.deck.sigma.truncated(T));
    for (int k = 0; k <= T; ++k) {
        ComplexBall d = xs[k] - f.x_diff[k];
        if (!(d.abs_upper() < tol * std::max(1.0, f.x_diff[k].abs_upper()))) {
            throw PrecisionError("deck transformation does not preserve x at order " + std::to_string(k));
        }
    }

    f.sigma = LocalSeries::from_series(f.deck.sigma);
    f.dsigma = LocalSeries::from_series(f.deck.sigma.derivative());
    {
        // sigma = t * s(t) with s(0) = -1.
        TruncatedSeries<ComplexBall> s(T - 1);
        for (int k = 0; k < T; ++k) {
            s[k] = f.deck.sigma[k + 1];
        }
        auto sinv = s.inverse();
        LocalSeries inv = LocalSeries::from_series(sinv);
        f.inv_sigma = multiply(LocalSeries::monomial(ComplexBall(1L), -1), inv, LocalSeries::kUnbounded);
    }

    // Kernel denominator (y(t) - y(sigma(t))) x'(p + t), which starts at t^2.
    auto ydiff = f.log_y - f.log_y.compose(f.deck.sigma.truncated(T));
    ydiff[0] = ComplexBall();
    TruncatedSeries<ComplexBall> den = ydiff * f.dx;
    den[0] = ComplexBall();
    den[1] = ComplexBall();
    TruncatedSeries<ComplexBall> reduced(T - 2);
    for (int k = 0; k <= T - 2; ++k) {
        reduced[k] = den[k + 2];
    }
    f.kernel_den_inv =
        multiply(LocalSeries::monomial(ComplexBall(1L), -2), LocalSeries::from_series(reduced.inverse()),
                 LocalSeries::kUnbounded);
    return f;
}

} // namespace striptr
