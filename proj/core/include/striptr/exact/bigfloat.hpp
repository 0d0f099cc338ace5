#pragma once

#include <string>

#include <mpfr.h>

#include "striptr/exact/rational.hpp"

namespace striptr {

/// Owning wrapper around an MPFR floating-point value.
///
/// New values take the calling thread's working precision (see
/// PrecisionScope). Rounding is always to nearest.
class BigFloat {
public:
    BigFloat();
    explicit BigFloat(long v);
    explicit BigFloat(const Rational &r);
    explicit BigFloat(double v);
    BigFloat(const BigFloat &o);
    BigFloat(BigFloat &&o) noexcept;
    BigFloat &operator=(const BigFloat &o);
    BigFloat &operator=(BigFloat &&o) noexcept;
    ~BigFloat();

    mpfr_ptr raw() noexcept { return value_; }
    mpfr_srcptr raw() const noexcept { return value_; }
    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }
    /// Decimal scientific notation with the given number of significant digits.
    std::string to_string(int digits) const;

    BigFloat &operator+=(const BigFloat &o);
    BigFloat &operator-=(const BigFloat &o);
    BigFloat &operator*=(const BigFloat &o);
    BigFloat &operator/=(const BigFloat &o);
    friend BigFloat operator+(BigFloat a, const BigFloat &b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat &b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat &b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat &b) { return a /= b; }
    friend BigFloat operator-(BigFloat a);

    friend bool operator<(const BigFloat &a, const BigFloat &b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator==(const BigFloat &a, const BigFloat &b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

    friend BigFloat sqrt(BigFloat a);
    friend BigFloat abs(BigFloat a);

private:
    mpfr_t value_;
};

BigFloat sqrt(BigFloat a);
BigFloat abs(BigFloat a);

/// Working precision, in bits, for values created on this thread.
mpfr_prec_t working_precision() noexcept;

/// Sets the working precision for the lifetime of the scope.
class PrecisionScope {
public:
    explicit PrecisionScope(mpfr_prec_t bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope &) = delete;
    PrecisionScope &operator=(const PrecisionScope &) = delete;

private:
    mpfr_prec_t saved_;
};

} // namespace striptr
