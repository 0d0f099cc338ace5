#pragma once

#include <vector>

#include "striptr/exact/complex_ball.hpp"
#include "striptr/exact/series.hpp"

namespace striptr {

/// Laurent series in the local coordinate t at a ramification point,
/// sum_{k >= val} c_k t^k, with coefficients known for k < prec. An exact
/// series stores all its nonzero terms and has unbounded precision.
///
/// This is the working type of the numeric recursion: it trades the
/// normalization of LaurentSeries for in-place accumulation.
class LocalSeries {
public:
    static constexpr int kUnbounded = 1 << 28;

    LocalSeries() = default;
    /// Zero series known on [val, prec).
    LocalSeries(int val, int prec);
    /// Exact c * t^k.
    static LocalSeries monomial(const ComplexBall &c, int k);
    /// Wraps a power series known through t^T.
    static LocalSeries from_series(const TruncatedSeries<ComplexBall> &s);

    int val() const noexcept { return val_; }
    int prec() const noexcept { return prec_; }
    bool exact() const noexcept { return prec_ >= kUnbounded; }
    bool empty() const noexcept { return c_.empty(); }
    /// First exponent with a coefficient that is not exactly zero.
    int leading() const;
    int size() const noexcept { return static_cast<int>(c_.size()); }

    /// Coefficient of t^k. Throws PrecisionError for k >= prec.
    ComplexBall coeff(int k) const;
    const ComplexBall &stored(int idx) const { return c_[static_cast<std::size_t>(idx)]; }

    /// Restricts to exponents below `cap`.
    LocalSeries capped(int cap) const;

    /// this += s * x.
    void axpy(const ComplexBall &s, const LocalSeries &x);
    /// this += a * b, restricted to exponents below `cap`.
    void add_product(const LocalSeries &a, const LocalSeries &b, int cap);

    LocalSeries scaled(const ComplexBall &s) const;

    /// Coefficient of t^{-1}.
    ComplexBall residue() const { return coeff(-1); }

    /// 1/this; the leading stored coefficient must not contain zero.
    LocalSeries inverse() const;

    /// Largest coefficient radius, for diagnostics.
    double max_radius() const;

    friend LocalSeries multiply(const LocalSeries &a, const LocalSeries &b, int cap);

private:
    void reframe(int val, int prec);

    int val_ = 0;
    int prec_ = kUnbounded;
    std::vector<ComplexBall> c_;
};

LocalSeries multiply(const LocalSeries &a, const LocalSeries &b, int cap);

/// Res_t (a * b) without forming the product. Throws PrecisionError if either
/// factor is not known far enough.
ComplexBall residue_of_product(const LocalSeries &a, const LocalSeries &b);

} // namespace striptr
