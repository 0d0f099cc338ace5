#pragma once

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

#include "striptr/error.hpp"
#include "striptr/exact/field.hpp"
#include "striptr/exact/series.hpp"

namespace striptr {

/// Truncated Laurent series sum_{k >= v} c_k t^k + O(t^prec).
///
/// Coefficients are known for every index below `precision()`; stored
/// coefficients start at `valuation()`, and indices between the stored range
/// and the precision are zero. An exact series (a Laurent polynomial) has
/// precision `kExact`.
template <class F>
class LaurentSeries {
public:
    using Traits = FieldTraits<F>;
    static constexpr int kExact = 1 << 28;

    LaurentSeries() = default;
    LaurentSeries(int valuation, std::vector<F> coeffs, int precision)
        : v_(valuation), c_(std::move(coeffs)), prec_(precision)
    {
        normalize();
    }

    explicit LaurentSeries(const TruncatedSeries<F> &s)
        : v_(0), c_(s.coefficients()), prec_(s.truncation() + 1)
    {
        normalize();
    }

    static LaurentSeries monomial(const F &coeff, int power, int precision = kExact)
    {
        return LaurentSeries(power, {coeff}, precision);
    }

    bool is_exact() const noexcept { return prec_ >= kExact; }
    int precision() const noexcept { return prec_; }
    /// First stored index; after normalization the leading stored coefficient
    /// is structurally nonzero unless the series is zero to its precision.
    int valuation() const noexcept { return c_.empty() ? prec_ : v_; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<F> &stored() const noexcept { return c_; }

    F coeff(int k) const
    {
        if (k >= prec_) {
            throw MalformedSeriesError("coefficient beyond known precision requested");
        }
        if (k < v_ || k >= v_ + static_cast<int>(c_.size())) {
            return F();
        }
        return c_[static_cast<std::size_t>(k - v_)];
    }

    /// Coefficient of t^{-1}.
    F residue() const { return coeff(-1); }

    int pole_order() const { return std::max(0, -valuation()); }

    /// Coefficients of t^{-pole_order} .. t^{-1}.
    std::vector<F> principal_part() const
    {
        std::vector<F> out;
        for (int k = -pole_order(); k < 0; ++k) {
            out.push_back(coeff(k));
        }
        return out;
    }

    /// Coefficients of t^0 .. t^{T}.
    TruncatedSeries<F> regular_part(int T) const
    {
        TruncatedSeries<F> r(T);
        for (int k = 0; k <= T; ++k) {
            r[k] = coeff(k);
        }
        return r;
    }

    /// Drops everything at and beyond t^p.
    LaurentSeries with_precision(int p) const
    {
        if (p > prec_) {
            throw MalformedSeriesError("cannot raise the precision of a truncated series");
        }
        std::vector<F> c;
        for (int k = v_; k < p && k < v_ + static_cast<int>(c_.size()); ++k) {
            c.push_back(c_[static_cast<std::size_t>(k - v_)]);
        }
        return LaurentSeries(v_, std::move(c), p);
    }

    /// Multiplies by t^k.
    LaurentSeries shifted(int k) const
    {
        return LaurentSeries(v_ + k, c_, is_exact() ? kExact : prec_ + k);
    }

    LaurentSeries &operator*=(const F &a)
    {
        for (auto &x : c_) {
            x *= a;
        }
        normalize();
        return *this;
    }

    friend LaurentSeries operator*(LaurentSeries a, const F &b) { return a *= b; }
    friend LaurentSeries operator*(const F &b, LaurentSeries a) { return a *= b; }

    friend LaurentSeries operator+(const LaurentSeries &a, const LaurentSeries &b) { return combine(a, b, false); }
    friend LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b) { return combine(a, b, true); }
    friend LaurentSeries operator-(LaurentSeries a)
    {
        for (auto &x : a.c_) {
            x = -x;
        }
        return a;
    }
    LaurentSeries &operator+=(const LaurentSeries &o) { return *this = *this + o; }
    LaurentSeries &operator-=(const LaurentSeries &o) { return *this = *this - o; }

    friend LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b)
    {
        int va = a.valuation();
        int vb = b.valuation();
        int prec = kExact;
        if (!a.is_exact()) {
            prec = std::min(prec, a.prec_ + vb);
        }
        if (!b.is_exact()) {
            prec = std::min(prec, b.prec_ + va);
        }
        if (a.is_zero() || b.is_zero()) {
            return LaurentSeries(0, {}, prec);
        }
        int len = static_cast<int>(a.c_.size() + b.c_.size()) - 1;
        if (prec < kExact) {
            len = std::min(len, prec - (va + vb));
        }
        if (len <= 0) {
            return LaurentSeries(va + vb, {}, prec);
        }
        std::vector<F> c(static_cast<std::size_t>(len));
        for (int i = 0; i < static_cast<int>(a.c_.size()) && i < len; ++i) {
            if (Traits::is_zero(a.c_[i])) {
                continue;
            }
            for (int j = 0; j < static_cast<int>(b.c_.size()) && i + j < len; ++j) {
                Traits::fma(c[static_cast<std::size_t>(i + j)], a.c_[i], b.c_[j]);
            }
        }
        return LaurentSeries(va + vb, std::move(c), prec);
    }

    LaurentSeries &operator*=(const LaurentSeries &o) { return *this = *this * o; }

    /// 1/s. The leading coefficient must be invertible. An exact series with
    /// more than one term has an infinite inverse, so `terms` bounds the
    /// number of coefficients computed in that case.
    LaurentSeries inverse(int terms = -1) const
    {
        if (is_zero()) {
            throw MalformedSeriesError("inverse of a series that is zero to its precision");
        }
        if (!Traits::invertible(c_[0])) {
            throw MalformedSeriesError("inverse: leading coefficient is not invertible");
        }
        int v = v_;
        int rel;
        if (is_exact()) {
            if (c_.size() == 1) {
                return LaurentSeries(-v, {F(1L) / c_[0]}, kExact);
            }
            if (terms < 1) {
                throw MalformedSeriesError("inverse of a non-monomial exact series needs a term count");
            }
            rel = terms;
        } else {
            rel = prec_ - v;
        }
        TruncatedSeries<F> s(rel - 1);
        for (int k = 0; k < rel && k < static_cast<int>(c_.size()); ++k) {
            s[k] = c_[static_cast<std::size_t>(k)];
        }
        auto inv = s.inverse();
        return LaurentSeries(-v, inv.coefficients(), -v + rel);
    }

    friend LaurentSeries operator/(const LaurentSeries &a, const LaurentSeries &b)
    {
        int terms = a.is_exact() ? -1 : a.prec_ - a.valuation();
        return a * b.inverse(terms);
    }

    LaurentSeries derivative() const
    {
        std::vector<F> c(c_.size());
        for (std::size_t k = 0; k < c_.size(); ++k) {
            c[k] = c_[k] * F(static_cast<long>(v_ + static_cast<int>(k)));
        }
        return LaurentSeries(v_ - 1, std::move(c), is_exact() ? kExact : prec_ - 1);
    }

private:
    static LaurentSeries combine(const LaurentSeries &a, const LaurentSeries &b, bool subtract)
    {
        int prec = std::min(a.prec_, b.prec_);
        int lo = std::min(a.v_, b.v_);
        int hi = std::max(a.v_ + static_cast<int>(a.c_.size()), b.v_ + static_cast<int>(b.c_.size()));
        hi = std::min(hi, prec);
        if (hi <= lo) {
            return LaurentSeries(lo, {}, prec);
        }
        std::vector<F> c(static_cast<std::size_t>(hi - lo));
        for (int k = lo; k < hi; ++k) {
            F &dst = c[static_cast<std::size_t>(k - lo)];
            if (k >= a.v_ && k < a.v_ + static_cast<int>(a.c_.size())) {
                dst = a.c_[static_cast<std::size_t>(k - a.v_)];
            }
            if (k >= b.v_ && k < b.v_ + static_cast<int>(b.c_.size())) {
                if (subtract) {
                    dst -= b.c_[static_cast<std::size_t>(k - b.v_)];
                } else {
                    dst += b.c_[static_cast<std::size_t>(k - b.v_)];
                }
            }
        }
        return LaurentSeries(lo, std::move(c), prec);
    }

    void normalize()
    {
        if (prec_ >= kExact / 2) {
            prec_ = kExact;
        }
        // Drop stored entries at or beyond the precision.
        int keep = std::max(0, std::min(static_cast<int>(c_.size()), prec_ - v_));
        c_.resize(static_cast<std::size_t>(keep));
        std::size_t lead = 0;
        while (lead < c_.size() && Traits::is_zero(c_[lead])) {
            ++lead;
        }
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
            v_ += static_cast<int>(lead);
        }
        while (!c_.empty() && Traits::is_zero(c_.back())) {
            c_.pop_back();
        }
        if (c_.empty()) {
            v_ = std::min(v_, prec_);
        }
    }

    int v_ = 0;
    std::vector<F> c_;
    int prec_ = kExact;
};

} // namespace striptr
