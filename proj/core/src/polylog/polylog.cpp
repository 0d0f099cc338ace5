#include "striptr/polylog/polylog.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "striptr/error.hpp"
#include "striptr/exact/bernoulli.hpp"

namespace striptr {

namespace {

std::mutex polylog_mutex;
std::vector<RationalFunction> polylog_cache;

} // namespace

NegPolylog li_neg_rational(int n)
{
    if (n < 0) {
        throw std::domain_error("li_neg_rational: positive polylog orders are not supported");
    }
    std::lock_guard lock(polylog_mutex);
    if (polylog_cache.empty()) {
        Polynomial one(Rational(1));
        polylog_cache.emplace_back(Polynomial::z(), one - Polynomial::z());
    }
    while (static_cast<int>(polylog_cache.size()) <= n) {
        const RationalFunction &prev = polylog_cache.back();
        polylog_cache.push_back(RationalFunction::z() * prev.derivative());
    }
    return NegPolylog{n, polylog_cache[static_cast<std::size_t>(n)]};
}

Rational li_neg(int n, const Rational &z)
{
    if (z.is_one()) {
        throw PoleError("Li_{-" + std::to_string(n) + "} has a pole at z = 1");
    }
    if (z.is_zero()) {
        return Rational(0);
    }
    return li_neg_rational(n).realization(z);
}

RationalFunction li_neg_scaled(int n, const Rational &c)
{
    return li_neg_rational(n).realization.scaled(c);
}

LaurentSeries<Rational> li_neg_at_exp(int n, int T)
{
    if (n < 1) {
        throw std::domain_error("li_neg_at_exp: order must be at least 1");
    }
    if (T < 0) {
        throw MalformedSeriesError("li_neg_at_exp: negative truncation");
    }
    // Stored from mu^{-(n+1)} through mu^T.
    std::vector<Rational> c(static_cast<std::size_t>(T + n + 2));
    Rational lead = factorial(n);
    if ((n + 1) % 2 == 1) {
        lead = -lead;
    }
    c[0] = lead;
    for (int k = 0; k <= T; ++k) {
        c[static_cast<std::size_t>(k + n + 1)] = -bernoulli(k + n + 1) / (factorial(k) * Rational(k + n + 1));
    }
    return LaurentSeries<Rational>(-(n + 1), std::move(c), T + 1);
}

} // namespace striptr
