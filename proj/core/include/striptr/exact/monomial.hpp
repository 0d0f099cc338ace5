#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "striptr/exact/rational.hpp"

namespace striptr {

/// Product of named variables with integer exponents, e.g. Q1^2*Q3^-1.
/// Zero exponents are never stored. Ordering is lexicographic on the
/// (name, exponent) sequence, names in std::string order.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::map<std::string, long> exponents);
    static Monomial variable(const std::string &name, long exponent = 1);

    /// Parses "1", "Q", "Q1^2*Q3", "Q^-1". Throws ParseError.
    static Monomial parse(std::string_view text);

    const std::map<std::string, long> &exponents() const noexcept { return e_; }
    long exponent(const std::string &name) const;
    bool is_one() const noexcept { return e_.empty(); }

    /// Signed total degree.
    long degree() const;

    Monomial inverse() const;
    Monomial pow(long k) const;
    /// The representative of {m, 1/m} whose first nonzero exponent is positive.
    Monomial normalized() const;
    bool is_normalized() const { return e_.empty() || e_.begin()->second > 0; }

    /// Substitutes rational values for every variable.
    Rational evaluate(const std::map<std::string, Rational> &values) const;

    /// "Q1^2*Q3", or "1" for the empty monomial.
    std::string to_string() const;

    Monomial &operator*=(const Monomial &o);
    friend Monomial operator*(Monomial a, const Monomial &b) { return a *= b; }
    friend Monomial operator/(Monomial a, const Monomial &b) { return a *= b.inverse(); }

    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b) { return a.e_ <=> b.e_; }

    std::size_t hash() const;

private:
    std::map<std::string, long> e_;
};

std::ostream &operator<<(std::ostream &os, const Monomial &m);

} // namespace striptr
