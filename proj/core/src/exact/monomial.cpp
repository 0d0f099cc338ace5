#include "striptr/exact/monomial.hpp"

#include <cctype>
#include <charconv>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "striptr/error.hpp"

namespace striptr {

namespace {

bool valid_name(std::string_view s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
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

} // namespace

Monomial::Monomial(std::map<std::string, long> exponents)
{
    for (auto &[name, e] : exponents) {
        if (e != 0) {
            e_.emplace(name, e);
        }
    }
}

Monomial Monomial::variable(const std::string &name, long exponent)
{
    if (!valid_name(name)) {
        throw ParseError("invalid variable name '" + name + "'");
    }
    return Monomial({{name, exponent}});
}

Monomial Monomial::parse(std::string_view text)
{
    text = trim(text);
    if (text.empty()) {
        throw ParseError("empty monomial");
    }
    if (text == "1") {
        return Monomial();
    }
    Monomial out;
    while (true) {
        auto star = text.find('*');
        std::string_view factor = trim(text.substr(0, star));
        auto caret = factor.find('^');
        std::string_view name = trim(factor.substr(0, caret));
        long e = 1;
        if (caret != std::string_view::npos) {
            std::string_view es = trim(factor.substr(caret + 1));
            if (!es.empty() && es.front() == '+') {
                es.remove_prefix(1);
            }
            auto [p, ec] = std::from_chars(es.data(), es.data() + es.size(), e);
            if (es.empty() || ec != std::errc() || p != es.data() + es.size()) {
                throw ParseError("bad exponent in monomial factor '" + std::string(factor) + "'");
            }
        }
        if (!valid_name(name)) {
            throw ParseError("bad variable in monomial factor '" + std::string(factor) + "'");
        }
        out *= Monomial({{std::string(name), e}});
        if (star == std::string_view::npos) {
            break;
        }
        text = text.substr(star + 1);
    }
    return out;
}

long Monomial::exponent(const std::string &name) const
{
    auto it = e_.find(name);
    return it == e_.end() ? 0 : it->second;
}

long Monomial::degree() const
{
    long d = 0;
    for (const auto &[name, e] : e_) {
        d += e;
    }
    return d;
}

Monomial Monomial::inverse() const
{
    return pow(-1);
}

Monomial Monomial::pow(long k) const
{
    std::map<std::string, long> e;
    for (const auto &[name, x] : e_) {
        e.emplace(name, x * k);
    }
    return Monomial(std::move(e));
}

Monomial Monomial::normalized() const
{
    return is_normalized() ? *this : inverse();
}

Rational Monomial::evaluate(const std::map<std::string, Rational> &values) const
{
    Rational r(1);
    for (const auto &[name, e] : e_) {
        auto it = values.find(name);
        if (it == values.end()) {
            throw ValidationError("no value for Kahler variable '" + name + "'");
        }
        r *= it->second.pow(e);
    }
    return r;
}

std::string Monomial::to_string() const
{
    if (e_.empty()) {
        return "1";
    }
    std::string s;
    for (const auto &[name, e] : e_) {
        if (!s.empty()) {
            s += '*';
        }
        s += name;
        if (e != 1) {
            s += '^' + std::to_string(e);
        }
    }
    return s;
}

Monomial &Monomial::operator*=(const Monomial &o)
{
    for (const auto &[name, e] : o.e_) {
        long v = (e_[name] += e);
        if (v == 0) {
            e_.erase(name);
        }
    }
    return *this;
}

std::size_t Monomial::hash() const
{
    std::size_t h = 0;
    for (const auto &[name, e] : e_) {
        h = h * 1000003u ^ std::hash<std::string>{}(name);
        h = h * 1000003u ^ std::hash<long>{}(e);
    }
    return h;
}

std::ostream &operator<<(std::ostream &os, const Monomial &m)
{
    return os << m.to_string();
}

} // namespace striptr
