#include "striptr/polylog/polynomial.hpp"

#include <stdexcept>

namespace striptr {

Polynomial::Polynomial(Rational c)
{
    if (!c.is_zero()) {
        c_.push_back(std::move(c));
    }
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

Polynomial Polynomial::z()
{
    return Polynomial({Rational(0), Rational(1)});
}

Rational Polynomial::coeff(int k) const
{
    if (k < 0 || k > degree()) {
        return Rational(0);
    }
    return c_[static_cast<std::size_t>(k)];
}

Rational Polynomial::leading() const
{
    return c_.empty() ? Rational(0) : c_.back();
}

Rational Polynomial::operator()(const Rational &z) const
{
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= z;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const
{
    std::vector<Rational> d;
    for (int k = 1; k <= degree(); ++k) {
        d.push_back(c_[k] * Rational(k));
    }
    return Polynomial(std::move(d));
}

Polynomial Polynomial::scaled(const Rational &c) const
{
    std::vector<Rational> d(c_);
    Rational p(1);
    for (auto &x : d) {
        x *= p;
        p *= c;
    }
    return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(const Rational &a) const
{
    // Horner with (z + a) as the multiplier.
    Polynomial lin({a, Rational(1)});
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * lin + Polynomial(*it);
    }
    return acc;
}

Polynomial Polynomial::monic() const
{
    if (c_.empty()) {
        return *this;
    }
    return *this * leading().inverse();
}

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t k = 0; k < o.c_.size(); ++k) {
        c_[k] += o.c_[k];
    }
    trim();
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o)
{
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t k = 0; k < o.c_.size(); ++k) {
        c_[k] -= o.c_[k];
    }
    trim();
    return *this;
}

Polynomial &Polynomial::operator*=(const Rational &a)
{
    for (auto &x : c_) {
        x *= a;
    }
    trim();
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    if (a.is_zero() || b.is_zero()) {
        return Polynomial();
    }
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial &a, const Polynomial &b)
{
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    Polynomial r = a;
    if (a.degree() < b.degree()) {
        return {Polynomial(), r};
    }
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    Rational lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rational f = r.leading() * lead_inv;
        q[static_cast<std::size_t>(shift)] = f;
        for (int k = 0; k <= b.degree(); ++k) {
            r.c_[static_cast<std::size_t>(k + shift)] -= f * b.c_[static_cast<std::size_t>(k)];
        }
        r.c_.back() = Rational(0);
        r.trim();
    }
    return {Polynomial(std::move(q)), r};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string Polynomial::to_string(const std::string &var) const
{
    if (c_.empty()) {
        return "0";
    }
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const Rational &c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) {
            continue;
        }
        std::string term;
        Rational mag = c.abs();
        if (k == 0 || !mag.is_one()) {
            term = mag.to_string();
        }
        if (k >= 1) {
            if (!term.empty()) {
                term += "*";
            }
            term += var;
            if (k > 1) {
                term += "^" + std::to_string(k);
            }
        }
        if (s.empty()) {
            s = (c.sign() < 0 ? "-" : "") + term;
        } else {
            s += (c.sign() < 0 ? " - " : " + ") + term;
        }
    }
    return s;
}

void Polynomial::trim()
{
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

} // namespace striptr
