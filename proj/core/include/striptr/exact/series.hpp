#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "striptr/error.hpp"
#include "striptr/exact/field.hpp"

namespace striptr {

/// Power series c_0 + c_1 t + ... + c_T t^T + O(t^{T+1}) over F.
///
/// The truncation T is part of the value. Binary operations work at the
/// smaller truncation of their operands and never read past it.
template <class F>
class TruncatedSeries {
public:
    using Traits = FieldTraits<F>;

    explicit TruncatedSeries(int T = 0) : c_(check(T) + 1) {}
    TruncatedSeries(std::vector<F> coeffs, int T) : c_(std::move(coeffs))
    {
        c_.resize(check(T) + 1);
    }

    /// The series t at truncation T.
    static TruncatedSeries variable(int T)
    {
        TruncatedSeries s(T);
        if (T >= 1) {
            s.c_[1] = F(1L);
        }
        return s;
    }

    static TruncatedSeries constant(const F &v, int T)
    {
        TruncatedSeries s(T);
        s.c_[0] = v;
        return s;
    }

    int truncation() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<F> &coefficients() const noexcept { return c_; }

    const F &operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    F &operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }

    /// Index of the first structurally nonzero coefficient, or T+1.
    int valuation() const
    {
        for (int k = 0; k <= truncation(); ++k) {
            if (!Traits::is_zero(c_[k])) {
                return k;
            }
        }
        return truncation() + 1;
    }

    TruncatedSeries truncated(int T) const
    {
        if (T > truncation()) {
            throw MalformedSeriesError("cannot extend a truncated series");
        }
        return TruncatedSeries(std::vector<F>(c_.begin(), c_.begin() + T + 1), T);
    }

    TruncatedSeries &operator+=(const TruncatedSeries &o)
    {
        shrink(o.truncation());
        for (int k = 0; k <= truncation(); ++k) {
            c_[k] += o.c_[k];
        }
        return *this;
    }

    TruncatedSeries &operator-=(const TruncatedSeries &o)
    {
        shrink(o.truncation());
        for (int k = 0; k <= truncation(); ++k) {
            c_[k] -= o.c_[k];
        }
        return *this;
    }

    TruncatedSeries &operator*=(const F &a)
    {
        for (auto &x : c_) {
            x *= a;
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const F &b) { return a *= b; }
    friend TruncatedSeries operator*(const F &b, TruncatedSeries a) { return a *= b; }
    friend TruncatedSeries operator-(TruncatedSeries a)
    {
        for (auto &x : a.c_) {
            x = -x;
        }
        return a;
    }

    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        int T = std::min(a.truncation(), b.truncation());
        TruncatedSeries r(T);
        for (int i = 0; i <= T; ++i) {
            if (Traits::is_zero(a.c_[i])) {
                continue;
            }
            for (int j = 0; i + j <= T; ++j) {
                Traits::fma(r.c_[i + j], a.c_[i], b.c_[j]);
            }
        }
        return r;
    }

    TruncatedSeries &operator*=(const TruncatedSeries &o) { return *this = *this * o; }

    /// 1/s; the constant term must be invertible.
    TruncatedSeries inverse() const
    {
        if (!Traits::invertible(c_[0])) {
            throw MalformedSeriesError("inverse: constant term is not invertible");
        }
        int T = truncation();
        TruncatedSeries r(T);
        F inv0 = F(1L) / c_[0];
        r.c_[0] = inv0;
        for (int k = 1; k <= T; ++k) {
            F acc;
            for (int j = 1; j <= k; ++j) {
                Traits::fma(acc, c_[j], r.c_[k - j]);
            }
            r.c_[k] = -(acc * inv0);
        }
        return r;
    }

    friend TruncatedSeries operator/(const TruncatedSeries &a, const TruncatedSeries &b) { return a * b.inverse(); }

    /// this(inner(t)); inner must have zero constant term.
    TruncatedSeries compose(const TruncatedSeries &inner) const
    {
        if (!Traits::is_zero(inner.c_[0])) {
            throw MalformedSeriesError("compose: inner series has a nonzero constant term");
        }
        int T = std::min(truncation(), inner.truncation());
        TruncatedSeries g = inner.truncated(T);
        TruncatedSeries r = constant(c_[T], T);
        for (int k = T - 1; k >= 0; --k) {
            r = r * g;
            r.c_[0] += c_[k];
        }
        return r;
    }

    /// Compositional inverse r with this(r(t)) = t + O(t^{T+1}). Requires
    /// zero constant term and invertible linear term.
    TruncatedSeries reversion() const
    {
        int T = truncation();
        if (!Traits::is_zero(c_[0])) {
            throw MalformedSeriesError("reversion: nonzero constant term");
        }
        if (T < 1 || !Traits::invertible(c_[1])) {
            throw MalformedSeriesError("reversion: linear term is not invertible");
        }
        // Lagrange inversion: [t^k] r = (1/k) [w^{k-1}] (w/s(w))^k.
        TruncatedSeries shifted(T - 1);
        for (int k = 0; k < T; ++k) {
            shifted.c_[k] = c_[k + 1];
        }
        TruncatedSeries h = shifted.inverse();
        TruncatedSeries r(T);
        TruncatedSeries power = constant(F(1L), T - 1);
        for (int k = 1; k <= T; ++k) {
            power = power * h;
            r.c_[k] = power.c_[k - 1] / F(static_cast<long>(k));
        }
        return r;
    }

    /// d/dt; the result has truncation T-1.
    TruncatedSeries derivative() const
    {
        int T = truncation();
        if (T < 1) {
            throw MalformedSeriesError("derivative: no known coefficients remain");
        }
        TruncatedSeries r(T - 1);
        for (int k = 1; k <= T; ++k) {
            r.c_[k - 1] = c_[k] * F(static_cast<long>(k));
        }
        return r;
    }

    /// Termwise antiderivative with zero constant; truncation T+1.
    TruncatedSeries integral() const
    {
        int T = truncation();
        TruncatedSeries r(T + 1);
        for (int k = 0; k <= T; ++k) {
            r.c_[k + 1] = c_[k] / F(static_cast<long>(k + 1));
        }
        return r;
    }

    /// exp(s); requires zero constant term.
    TruncatedSeries exp() const
    {
        if (!Traits::is_zero(c_[0])) {
            throw MalformedSeriesError("exp: nonzero constant term");
        }
        int T = truncation();
        TruncatedSeries e(T);
        e.c_[0] = F(1L);
        // e' = s' e
        for (int k = 1; k <= T; ++k) {
            F acc;
            for (int j = 1; j <= k; ++j) {
                if (!Traits::is_zero(c_[j])) {
                    Traits::fma(acc, c_[j] * F(static_cast<long>(j)), e.c_[k - j]);
                }
            }
            e.c_[k] = acc / F(static_cast<long>(k));
        }
        return e;
    }

    /// log(s); requires unit constant term.
    TruncatedSeries log() const
    {
        if (!Traits::is_one(c_[0])) {
            throw MalformedSeriesError("log: constant term is not one");
        }
        int T = truncation();
        if (T == 0) {
            return TruncatedSeries(0);
        }
        return (derivative() * truncated(T - 1).inverse()).integral();
    }

    bool operator==(const TruncatedSeries &o) const { return c_ == o.c_; }

private:
    static int check(int T)
    {
        if (T < 0) {
            throw MalformedSeriesError("negative truncation");
        }
        return T;
    }

    void shrink(int T)
    {
        if (T < truncation()) {
            c_.resize(static_cast<std::size_t>(T) + 1);
        }
    }

    std::vector<F> c_;
};

} // namespace striptr
