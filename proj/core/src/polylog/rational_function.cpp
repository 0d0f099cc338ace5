#include "striptr/polylog/rational_function.hpp"

#include <stdexcept>

#include "striptr/error.hpp"

namespace striptr {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) {
        throw std::domain_error("rational function with zero denominator");
    }
    normalize();
}

void RationalFunction::normalize()
{
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Polynomial::divmod(num_, g).first;
        den_ = Polynomial::divmod(den_, g).first;
    }
    Rational lead = den_.leading();
    if (!lead.is_one()) {
        Rational inv = lead.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RationalFunction::operator()(const Rational &z) const
{
    Rational d = den_(z);
    if (d.is_zero()) {
        throw PoleError("rational function evaluated at a pole z = " + z.to_string());
    }
    return num_(z) / d;
}

RationalFunction RationalFunction::derivative() const
{
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::scaled(const Rational &c) const
{
    return RationalFunction(num_.scaled(c), den_.scaled(c));
}

namespace {

int root_multiplicity(Polynomial p, const Rational &a)
{
    if (p.is_zero()) {
        throw std::domain_error("multiplicity of a root of the zero polynomial");
    }
    Polynomial lin({-a, Rational(1)});
    int m = 0;
    while (true) {
        auto [q, r] = Polynomial::divmod(p, lin);
        if (!r.is_zero()) {
            return m;
        }
        p = std::move(q);
        ++m;
    }
}

} // namespace

int RationalFunction::pole_order(const Rational &p) const
{
    return root_multiplicity(den_, p);
}

int RationalFunction::zero_order(const Rational &p) const
{
    if (num_.is_zero()) {
        throw std::domain_error("zero order of the zero function");
    }
    return root_multiplicity(num_, p);
}

LaurentSeries<Rational> RationalFunction::laurent_at(const Rational &p, int max_power) const
{
    if (num_.is_zero()) {
        return LaurentSeries<Rational>(0, {}, max_power + 1);
    }
    Polynomial n = num_.shifted(p);
    Polynomial d = den_.shifted(p);
    int dv = 0;
    while (d.coeff(dv).is_zero()) {
        ++dv;
    }
    int nv = 0;
    while (n.coeff(nv).is_zero()) {
        ++nv;
    }
    // f = t^{nv - dv} * (n/t^nv) / (d/t^dv); need relative terms up to
    // max_power - (nv - dv).
    int lead = nv - dv;
    int rel = max_power - lead;
    if (rel < 0) {
        return LaurentSeries<Rational>(0, {}, max_power + 1);
    }
    TruncatedSeries<Rational> ns(rel), ds(rel);
    for (int k = 0; k <= rel; ++k) {
        ns[k] = n.coeff(k + nv);
        ds[k] = d.coeff(k + dv);
    }
    auto q = ns / ds;
    return LaurentSeries<Rational>(lead, q.coefficients(), max_power + 1);
}

RationalFunction &RationalFunction::operator+=(const RationalFunction &o)
{
    if (den_ == o.den_) {
        *this = RationalFunction(num_ + o.num_, den_);
    } else {
        *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    return *this;
}

RationalFunction &RationalFunction::operator-=(const RationalFunction &o)
{
    if (den_ == o.den_) {
        *this = RationalFunction(num_ - o.num_, den_);
    } else {
        *this = RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    return *this;
}

RationalFunction &RationalFunction::operator*=(const RationalFunction &o)
{
    *this = RationalFunction(num_ * o.num_, den_ * o.den_);
    return *this;
}

RationalFunction &RationalFunction::operator/=(const RationalFunction &o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by the zero rational function");
    }
    *this = RationalFunction(num_ * o.den_, den_ * o.num_);
    return *this;
}

std::string RationalFunction::to_string() const
{
    if (den_.degree() == 0) {
        return num_.to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace striptr
