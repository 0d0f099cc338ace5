#pragma once

#include <string>

#include "striptr/exact/laurent.hpp"
#include "striptr/exact/rational.hpp"
#include "striptr/polylog/polynomial.hpp"

namespace striptr {

/// num/den in lowest terms with a monic denominator.
class RationalFunction {
public:
    RationalFunction() : den_(Rational(1)) {}
    RationalFunction(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}
    /// Throws std::domain_error for a zero denominator.
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction z() { return RationalFunction(Polynomial::z()); }

    const Polynomial &numerator() const noexcept { return num_; }
    const Polynomial &denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    /// Throws PoleError where the denominator vanishes.
    Rational operator()(const Rational &z) const;

    template <class F>
    F evaluate(const F &z) const
    {
        return num_.evaluate(z) / den_.evaluate(z);
    }

    RationalFunction derivative() const;
    /// f(c z).
    RationalFunction scaled(const Rational &c) const;

    /// Order of the pole at p (0 if regular there).
    int pole_order(const Rational &p) const;
    /// Order of vanishing at p (0 if nonzero there).
    int zero_order(const Rational &p) const;

    /// Laurent expansion in t = z - p, with coefficients up to t^{max_power}.
    LaurentSeries<Rational> laurent_at(const Rational &p, int max_power) const;

    /// Taylor coefficients of f(center + t) to order T in field F; the
    /// denominator must not vanish at the center.
    template <class F>
    TruncatedSeries<F> taylor_at(const F &center, int T) const
    {
        return shifted_series(num_, center, T) / shifted_series(den_, center, T);
    }

    RationalFunction &operator+=(const RationalFunction &o);
    RationalFunction &operator-=(const RationalFunction &o);
    RationalFunction &operator*=(const RationalFunction &o);
    RationalFunction &operator/=(const RationalFunction &o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction &b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction &b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction &b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction &b) { return a /= b; }
    friend RationalFunction operator-(RationalFunction a) { return a *= RationalFunction(Rational(-1)); }

    friend bool operator==(const RationalFunction &, const RationalFunction &) = default;

    std::string to_string() const;

private:
    template <class F>
    static TruncatedSeries<F> shifted_series(const Polynomial &p, const F &center, int T)
    {
        // Taylor coefficients of p at center via repeated synthetic division.
        TruncatedSeries<F> out(T);
        std::vector<F> c;
        for (const auto &x : p.coefficients()) {
            c.emplace_back(x);
        }
        int n = static_cast<int>(c.size());
        for (int k = 0; k <= T && k < n; ++k) {
            for (int j = n - 2; j >= k; --j) {
                FieldTraits<F>::fma(c[j], c[j + 1], center);
            }
            out[k] = c[k];
        }
        return out;
    }

    void normalize();

    Polynomial num_;
    Polynomial den_;
};

} // namespace striptr
