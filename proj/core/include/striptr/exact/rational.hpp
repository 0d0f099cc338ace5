#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace striptr {

/// Exact rational number with arbitrary-size numerator and denominator.
///
/// Always kept in lowest terms with a positive denominator. Text encoding is
/// "p/q", or "p" when the denominator is one.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}
    Rational(int v) : value_(v) {}
    Rational(long num, long den);
    explicit Rational(const mpz_class &num, const mpz_class &den = 1);
    explicit Rational(mpq_class v);

    /// Parses "p", "-p", "p/q". Throws ParseError on malformed input and on a
    /// zero denominator.
    static Rational parse(std::string_view text);

    const mpq_class &gmp() const noexcept { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_one() const noexcept { return value_ == 1; }
    bool is_integer() const noexcept { return value_.get_den() == 1; }
    int sign() const noexcept { return sgn(value_); }

    Rational abs() const { return Rational(mpq_class(::abs(value_))); }
    /// Throws std::domain_error on zero.
    Rational inverse() const;
    /// Integer power; negative exponents invert. 0^negative throws.
    Rational pow(long e) const;

    double to_double() const { return value_.get_d(); }
    std::string to_string() const;

    Rational &operator+=(const Rational &o) { value_ += o.value_; return *this; }
    Rational &operator-=(const Rational &o) { value_ -= o.value_; return *this; }
    Rational &operator*=(const Rational &o) { value_ *= o.value_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::size_t hash() const;

private:
    mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

/// n! as a rational.
Rational factorial(long n);
/// Binomial coefficient C(n, k) for integer n >= 0 (0 outside 0 <= k <= n).
Rational binomial(long n, long k);
/// Generalised binomial coefficient C(a, k) = a(a-1)...(a-k+1)/k! for rational a.
Rational binomial(const Rational &a, long k);

} // namespace striptr

template <>
struct std::hash<striptr::Rational> {
    std::size_t operator()(const striptr::Rational &r) const { return r.hash(); }
};
