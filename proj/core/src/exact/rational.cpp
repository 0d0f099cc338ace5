#include "striptr/exact/rational.hpp"

#include <cctype>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "striptr/error.hpp"

namespace striptr {

Rational::Rational(long num, long den) : value_(num, den)
{
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_.canonicalize();
}

Rational::Rational(const mpz_class &num, const mpz_class &den) : value_(num, den)
{
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v))
{
    value_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

mpz_class parse_integer(std::string_view s)
{
    std::string str(s);
    if (!str.empty() && str[0] == '+') {
        str.erase(0, 1);
    }
    return mpz_class(str, 10);
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    auto s = trim(text);
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
        throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) {
        throw ParseError("zero denominator in rational: '" + std::string(text) + "'");
    }
    return Rational(parse_integer(num), d);
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("Rational: inverse of zero");
    }
    return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(long e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::size_t Rational::hash() const
{
    std::hash<std::string> h;
    return h(value_.get_num().get_str(16)) * 31u + h(value_.get_den().get_str(16));
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.to_string();
}

Rational factorial(long n)
{
    if (n < 0) {
        throw std::domain_error("factorial of negative integer");
    }
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational binomial(long n, long k)
{
    if (n < 0) {
        return binomial(Rational(n), k);
    }
    if (k < 0 || k > n) {
        return Rational(0);
    }
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(c);
}

Rational binomial(const Rational &a, long k)
{
    if (k < 0) {
        return Rational(0);
    }
    Rational c(1);
    for (long i = 0; i < k; ++i) {
        c *= (a - Rational(i)) / Rational(i + 1);
    }
    return c;
}

} // namespace striptr
