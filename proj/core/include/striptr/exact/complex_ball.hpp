#pragma once

#include <iosfwd>
#include <string>

#include "striptr/exact/bigfloat.hpp"
#include "striptr/exact/rational.hpp"

namespace striptr {

/// Complex midpoint-radius ball: the set {z : |z - mid| <= rad}.
///
/// The midpoint is an MPFR complex at the working precision; the radius is a
/// double, rounded upward after every update. Every arithmetic result contains
/// the exact result of the same operation applied to any members of the
/// operand balls, up to the double-precision bookkeeping of the radius.
class ComplexBall {
public:
    ComplexBall();
    ComplexBall(long v);
    ComplexBall(int v) : ComplexBall(static_cast<long>(v)) {}
    ComplexBall(const Rational &re);
    ComplexBall(const Rational &re, const Rational &im);
    ComplexBall(BigFloat re, BigFloat im, double rad = 0.0);

    const BigFloat &real() const noexcept { return re_; }
    const BigFloat &imag() const noexcept { return im_; }
    double radius() const noexcept { return rad_; }
    /// |mid| as a double.
    double mid_abs() const;
    /// Upper bound on |z| for z in the ball.
    double abs_upper() const { return mid_abs() + rad_; }

    bool is_exact_zero() const { return re_.is_zero() && im_.is_zero() && rad_ == 0.0; }
    bool contains_zero() const { return mid_abs() <= rad_; }
    bool is_real() const { return im_.is_zero() && rad_ == 0.0; }

    void add_error(double e);
    ComplexBall conj() const;

    ComplexBall &operator+=(const ComplexBall &o);
    ComplexBall &operator-=(const ComplexBall &o);
    ComplexBall &operator*=(const ComplexBall &o);
    /// Throws PrecisionError when the divisor ball contains zero.
    ComplexBall &operator/=(const ComplexBall &o);

    friend ComplexBall operator+(ComplexBall a, const ComplexBall &b) { return a += b; }
    friend ComplexBall operator-(ComplexBall a, const ComplexBall &b) { return a -= b; }
    friend ComplexBall operator*(ComplexBall a, const ComplexBall &b) { return a *= b; }
    friend ComplexBall operator/(ComplexBall a, const ComplexBall &b) { return a /= b; }
    friend ComplexBall operator-(ComplexBall a);

    /// this += a * b without temporaries.
    void add_mul(const ComplexBall &a, const ComplexBall &b);

    /// Principal square root of the midpoint with a first-order radius bound.
    ComplexBall sqrt() const;

    /// "re + im*i +/- rad" with the given number of significant digits.
    std::string to_string(int digits = 25) const;

private:
    BigFloat re_;
    BigFloat im_;
    double rad_ = 0.0;
};

std::ostream &operator<<(std::ostream &os, const ComplexBall &z);

} // namespace striptr
