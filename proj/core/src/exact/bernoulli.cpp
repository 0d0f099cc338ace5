#include "striptr/exact/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace striptr {

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

} // namespace

Rational bernoulli(long m)
{
    if (m < 0) {
        throw std::domain_error("bernoulli: negative index");
    }
    std::lock_guard lock(bernoulli_mutex);
    // sum_{k=0}^{n} C(n+1,k) B_k = 0
    while (static_cast<long>(bernoulli_cache.size()) <= m) {
        long n = static_cast<long>(bernoulli_cache.size());
        if (n > 1 && n % 2 == 1) {
            bernoulli_cache.emplace_back(0);
            continue;
        }
        Rational acc;
        for (long k = 0; k < n; ++k) {
            if (!bernoulli_cache[k].is_zero()) {
                acc += binomial(n + 1, k) * bernoulli_cache[k];
            }
        }
        bernoulli_cache.push_back(-acc / Rational(n + 1));
    }
    return bernoulli_cache[m];
}

TruncatedSeries<Rational> s_inverse_series(int T)
{
    if (T < 0) {
        throw MalformedSeriesError("s_inverse_series: negative truncation");
    }
    // S(h) = sum_k h^{2k} / (4^k (2k+1)!)
    TruncatedSeries<Rational> s(T);
    for (int k = 0; 2 * k <= T; ++k) {
        s[2 * k] = (factorial(2 * k + 1) * Rational(2).pow(2 * k)).inverse();
    }
    return s.inverse();
}

Rational s_inverse_coefficient(int g)
{
    if (g < 0) {
        throw std::domain_error("s_inverse_coefficient: negative genus");
    }
    return s_inverse_series(2 * g)[2 * g];
}

Rational s_inverse_squared_coefficient(int g)
{
    if (g < 0) {
        throw std::domain_error("s_inverse_squared_coefficient: negative genus");
    }
    auto s = s_inverse_series(2 * g);
    return (s * s)[2 * g];
}

} // namespace striptr
