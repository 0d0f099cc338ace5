#pragma once

#include <string>
#include <utility>
#include <vector>

#include "striptr/exact/field.hpp"
#include "striptr/exact/rational.hpp"

namespace striptr {

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. Trailing zeros are trimmed, so the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Rational c);
    explicit Polynomial(std::vector<Rational> coeffs);
    /// The polynomial z.
    static Polynomial z();

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Rational> &coefficients() const noexcept { return c_; }
    Rational coeff(int k) const;
    Rational leading() const;

    Rational operator()(const Rational &z) const;

    /// Horner evaluation in any field that accepts rational coefficients.
    template <class F>
    F evaluate(const F &z) const
    {
        F acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= z;
            acc += F(*it);
        }
        return acc;
    }

    Polynomial derivative() const;
    /// p(c z).
    Polynomial scaled(const Rational &c) const;
    /// p(z + a).
    Polynomial shifted(const Rational &a) const;
    Polynomial monic() const;

    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    Polynomial &operator*=(const Rational &a);
    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational &b) { return a *= b; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

    /// Euclidean division; throws std::domain_error for a zero divisor.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial &a, const Polynomial &b);
    /// Monic gcd (zero if both are zero).
    static Polynomial gcd(Polynomial a, Polynomial b);

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

    std::string to_string(const std::string &var = "z") const;

private:
    void trim();
    std::vector<Rational> c_;
};

} // namespace striptr
