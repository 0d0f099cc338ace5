#pragma once

#include <string>

#include "striptr/exact/complex_ball.hpp"
#include "striptr/exact/rational.hpp"

namespace striptr {

// Per-field hooks used by the generic series code. "Structural" zero means
// the value is known to be exactly zero, not merely small.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static std::string tag() { return "rational"; }
    static bool is_zero(const Rational &a) { return a.is_zero(); }
    static bool is_one(const Rational &a) { return a.is_one(); }
    static bool invertible(const Rational &a) { return !a.is_zero(); }
    static void fma(Rational &acc, const Rational &a, const Rational &b) { acc += a * b; }
};

template <>
struct FieldTraits<ComplexBall> {
    static std::string tag() { return "complex-ball(" + std::to_string(working_precision()) + ")"; }
    static bool is_zero(const ComplexBall &a) { return a.is_exact_zero(); }
    static bool is_one(const ComplexBall &a) { return (a - ComplexBall(1L)).contains_zero(); }
    static bool invertible(const ComplexBall &a) { return !a.contains_zero(); }
    static void fma(ComplexBall &acc, const ComplexBall &a, const ComplexBall &b) { acc.add_mul(a, b); }
};

} // namespace striptr
