#include "striptr/exact/complex_ball.hpp"

#include <cfloat>
#include <cmath>
#include <ostream>

#include "striptr/error.hpp"

namespace striptr {

namespace {

constexpr double kRoundUp = 1.0 + 4.0 * DBL_EPSILON;

double up(double x)
{
    return x * kRoundUp;
}

// Relative rounding unit of a midpoint computed at the working precision.
double unit_roundoff(mpfr_prec_t prec)
{
    return std::ldexp(1.0, 1 - static_cast<int>(prec));
}

double hypot_of(const BigFloat &re, const BigFloat &im)
{
    return std::hypot(re.to_double(), im.to_double());
}

} // namespace

ComplexBall::ComplexBall() = default;

ComplexBall::ComplexBall(long v) : re_(v), im_(0L) {}

ComplexBall::ComplexBall(const Rational &re) : re_(re), im_(0L)
{
    if (!re.is_zero()) {
        rad_ = up(std::fabs(re.to_double()) * unit_roundoff(re_.precision()));
    }
}

ComplexBall::ComplexBall(const Rational &re, const Rational &im) : re_(re), im_(im)
{
    rad_ = up(std::hypot(re.to_double(), im.to_double()) * unit_roundoff(re_.precision()));
}

ComplexBall::ComplexBall(BigFloat re, BigFloat im, double rad) : re_(std::move(re)), im_(std::move(im)), rad_(rad) {}

double ComplexBall::mid_abs() const
{
    return hypot_of(re_, im_);
}

void ComplexBall::add_error(double e)
{
    rad_ = up(rad_ + std::fabs(e));
}

ComplexBall ComplexBall::conj() const
{
    return ComplexBall(re_, -im_, rad_);
}

ComplexBall &ComplexBall::operator+=(const ComplexBall &o)
{
    re_ += o.re_;
    im_ += o.im_;
    rad_ = up(rad_ + o.rad_ + mid_abs() * unit_roundoff(re_.precision()));
    return *this;
}

ComplexBall &ComplexBall::operator-=(const ComplexBall &o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    rad_ = up(rad_ + o.rad_ + mid_abs() * unit_roundoff(re_.precision()));
    return *this;
}

ComplexBall &ComplexBall::operator*=(const ComplexBall &o)
{
    double a = mid_abs();
    double b = o.mid_abs();
    BigFloat re = re_ * o.re_;
    mpfr_fms(re.raw(), im_.raw(), o.im_.raw(), re.raw(), MPFR_RNDN);
    mpfr_neg(re.raw(), re.raw(), MPFR_RNDN);
    BigFloat im = re_ * o.im_;
    mpfr_fma(im.raw(), im_.raw(), o.re_.raw(), im.raw(), MPFR_RNDN);
    re_ = std::move(re);
    im_ = std::move(im);
    rad_ = up(a * o.rad_ + b * rad_ + rad_ * o.rad_ + 2.0 * a * b * unit_roundoff(re_.precision()));
    return *this;
}

ComplexBall &ComplexBall::operator/=(const ComplexBall &o)
{
    double b = o.mid_abs();
    if (!(b > o.rad_)) {
        throw PrecisionError("division by a ball containing zero");
    }
    // 1/o as a ball: midpoint 1/mid, radius r/(|m|(|m|-r)).
    BigFloat norm = o.re_ * o.re_;
    mpfr_fma(norm.raw(), o.im_.raw(), o.im_.raw(), norm.raw(), MPFR_RNDN);
    ComplexBall inv(o.re_ / norm, -(o.im_ / norm), 0.0);
    inv.rad_ = up(o.rad_ / (b * (b - o.rad_)) + 4.0 * unit_roundoff(re_.precision()) / b);
    return *this *= inv;
}

ComplexBall operator-(ComplexBall a)
{
    a.re_ = -std::move(a.re_);
    a.im_ = -std::move(a.im_);
    return a;
}

void ComplexBall::add_mul(const ComplexBall &a, const ComplexBall &b)
{
    double ma = a.mid_abs();
    double mb = b.mid_abs();
    // re += a.re*b.re - a.im*b.im
    mpfr_fma(re_.raw(), a.re_.raw(), b.re_.raw(), re_.raw(), MPFR_RNDN);
    mpfr_fms(re_.raw(), a.im_.raw(), b.im_.raw(), re_.raw(), MPFR_RNDN);
    mpfr_neg(re_.raw(), re_.raw(), MPFR_RNDN);
    // im += a.re*b.im + a.im*b.re
    mpfr_fma(im_.raw(), a.re_.raw(), b.im_.raw(), im_.raw(), MPFR_RNDN);
    mpfr_fma(im_.raw(), a.im_.raw(), b.re_.raw(), im_.raw(), MPFR_RNDN);
    double u = unit_roundoff(re_.precision());
    rad_ = up(rad_ + ma * b.rad_ + mb * a.rad_ + a.rad_ * b.rad_ + 2.0 * (ma * mb + mid_abs()) * u);
}

ComplexBall ComplexBall::sqrt() const
{
    // sqrt(z) = sqrt((|z|+re)/2) + i*sign(im)*sqrt((|z|-re)/2)
    BigFloat modulus = re_ * re_;
    mpfr_fma(modulus.raw(), im_.raw(), im_.raw(), modulus.raw(), MPFR_RNDN);
    modulus = striptr::sqrt(modulus);
    BigFloat two(2L);
    BigFloat sre = striptr::sqrt((modulus + re_) / two);
    BigFloat sim = striptr::sqrt((modulus - re_) / two);
    if (im_.sign() < 0) {
        sim = -sim;
    }
    ComplexBall out(std::move(sre), std::move(sim), 0.0);
    double m = out.mid_abs();
    double r = m > 0.0 ? rad_ / (2.0 * m) : std::sqrt(rad_);
    out.rad_ = up(2.0 * r + 4.0 * m * unit_roundoff(re_.precision()));
    return out;
}

std::string ComplexBall::to_string(int digits) const
{
    std::string s = re_.to_string(digits);
    std::string i = im_.to_string(digits);
    if (!i.empty() && i[0] != '-') {
        i = "+" + i;
    }
    char rad[32];
    std::snprintf(rad, sizeof rad, "%.3e", rad_);
    return s + i + "i +/- " + rad;
}

std::ostream &operator<<(std::ostream &os, const ComplexBall &z)
{
    return os << z.to_string();
}

} // namespace striptr
