#include "striptr/exact/bigfloat.hpp"

#include <cstdio>
#include <vector>

namespace striptr {

namespace {

thread_local mpfr_prec_t tls_precision = 256;

} // namespace

mpfr_prec_t working_precision() noexcept
{
    return tls_precision;
}

PrecisionScope::PrecisionScope(mpfr_prec_t bits) : saved_(tls_precision)
{
    tls_precision = bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits;
}

PrecisionScope::~PrecisionScope()
{
    tls_precision = saved_;
}

BigFloat::BigFloat()
{
    mpfr_init2(value_, tls_precision);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long v)
{
    mpfr_init2(value_, tls_precision);
    mpfr_set_si(value_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational &r)
{
    mpfr_init2(value_, tls_precision);
    mpfr_set_q(value_, r.gmp().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(double v)
{
    mpfr_init2(value_, tls_precision);
    mpfr_set_d(value_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat &o)
{
    mpfr_init2(value_, mpfr_get_prec(o.value_));
    mpfr_set(value_, o.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat &&o) noexcept
{
    // Steal by swapping with a minimal placeholder that the destructor of o
    // can clear.
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, o.value_);
}

BigFloat &BigFloat::operator=(const BigFloat &o)
{
    if (this != &o) {
        mpfr_set_prec(value_, mpfr_get_prec(o.value_));
        mpfr_set(value_, o.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat &BigFloat::operator=(BigFloat &&o) noexcept
{
    mpfr_swap(value_, o.value_);
    return *this;
}

BigFloat::~BigFloat()
{
    mpfr_clear(value_);
}

std::string BigFloat::to_string(int digits) const
{
    if (digits < 1) {
        digits = 1;
    }
    int n = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, value_);
    std::vector<char> buf(static_cast<std::size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
    return std::string(buf.data());
}

BigFloat &BigFloat::operator+=(const BigFloat &o)
{
    mpfr_add(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

BigFloat &BigFloat::operator-=(const BigFloat &o)
{
    mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

BigFloat &BigFloat::operator*=(const BigFloat &o)
{
    mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

BigFloat &BigFloat::operator/=(const BigFloat &o)
{
    mpfr_div(value_, value_, o.value_, MPFR_RNDN);
    return *this;
}

BigFloat operator-(BigFloat a)
{
    mpfr_neg(a.value_, a.value_, MPFR_RNDN);
    return a;
}

BigFloat sqrt(BigFloat a)
{
    mpfr_sqrt(a.value_, a.value_, MPFR_RNDN);
    return a;
}

BigFloat abs(BigFloat a)
{
    mpfr_abs(a.value_, a.value_, MPFR_RNDN);
    return a;
}

} // namespace striptr
