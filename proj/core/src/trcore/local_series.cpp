#include "striptr/trcore/local_series.hpp"

#include <algorithm>
#include <string>

#include "striptr/error.hpp"

namespace striptr {

LocalSeries::LocalSeries(int val, int prec) : val_(val), prec_(prec)
{
    if (prec < val) {
        prec_ = val;
    }
    c_.resize(static_cast<std::size_t>(prec_ - val_));
}

LocalSeries LocalSeries::monomial(const ComplexBall &c, int k)
{
    LocalSeries s;
    s.val_ = k;
    s.prec_ = kUnbounded;
    s.c_.push_back(c);
    return s;
}

LocalSeries LocalSeries::from_series(const TruncatedSeries<ComplexBall> &s)
{
    LocalSeries out;
    out.val_ = 0;
    out.prec_ = s.truncation() + 1;
    out.c_ = s.coefficients();
    return out;
}

ComplexBall LocalSeries::coeff(int k) const
{
    if (k >= prec_) {
        throw PrecisionError("local series coefficient t^" + std::to_string(k) + " is beyond its known order " +
                             std::to_string(prec_));
    }
    int idx = k - val_;
    if (idx < 0 || idx >= static_cast<int>(c_.size())) {
        return ComplexBall();
    }
    return c_[static_cast<std::size_t>(idx)];
}

LocalSeries LocalSeries::capped(int cap) const
{
    LocalSeries out = *this;
    if (cap < out.prec_) {
        out.prec_ = std::max(cap, out.val_);
        int keep = std::max(0, std::min(static_cast<int>(out.c_.size()), out.prec_ - out.val_));
        out.c_.resize(static_cast<std::size_t>(keep));
    }
    return out;
}

void LocalSeries::reframe(int val, int prec)
{
    // Extends the stored window down to `val` and lowers the precision.
    if (val < val_) {
        std::vector<ComplexBall> c(static_cast<std::size_t>(val_ - val));
        c.insert(c.end(), std::make_move_iterator(c_.begin()), std::make_move_iterator(c_.end()));
        c_ = std::move(c);
        val_ = val;
    }
    if (prec < prec_) {
        prec_ = prec;
        int keep = std::max(0, std::min(static_cast<int>(c_.size()), prec_ - val_));
        c_.resize(static_cast<std::size_t>(keep));
    }
}

void LocalSeries::axpy(const ComplexBall &s, const LocalSeries &x)
{
    if (c_.empty() && prec_ >= kUnbounded && val_ == 0) {
        // Fresh accumulator.
        *this = x.scaled(s);
        return;
    }
    reframe(std::min(val_, x.val_), std::min(prec_, x.prec_));
    int hi = exact() ? x.val_ + x.size() : prec_;
    if (static_cast<int>(c_.size()) < hi - val_) {
        c_.resize(static_cast<std::size_t>(hi - val_));
    }
    for (int k = 0; k < x.size(); ++k) {
        int e = x.val_ + k;
        if (e >= prec_) {
            break;
        }
        c_[static_cast<std::size_t>(e - val_)].add_mul(s, x.c_[static_cast<std::size_t>(k)]);
    }
}

void LocalSeries::add_product(const LocalSeries &a, const LocalSeries &b, int cap)
{
    int pv = a.val_ + b.val_;
    int pp = cap;
    if (!a.exact()) {
        pp = std::min(pp, a.prec_ + b.val_);
    }
    if (!b.exact()) {
        pp = std::min(pp, b.prec_ + a.val_);
    }
    if (c_.empty() && prec_ >= kUnbounded && val_ == 0) {
        val_ = pv;
        prec_ = std::max(pp, pv);
        c_.clear();
    } else {
        reframe(std::min(val_, pv), std::min(prec_, pp));
    }
    int hi = std::min(prec_, a.val_ + a.size() + b.val_ + b.size() - 1);
    if (static_cast<int>(c_.size()) < hi - val_) {
        c_.resize(static_cast<std::size_t>(hi - val_));
    }
    for (int i = 0; i < a.size(); ++i) {
        int ei = a.val_ + i;
        const ComplexBall &ai = a.c_[static_cast<std::size_t>(i)];
        if (ai.is_exact_zero()) {
            continue;
        }
        for (int j = 0; j < b.size(); ++j) {
            int e = ei + b.val_ + j;
            if (e >= hi) {
                break;
            }
            c_[static_cast<std::size_t>(e - val_)].add_mul(ai, b.c_[static_cast<std::size_t>(j)]);
        }
    }
}

LocalSeries LocalSeries::scaled(const ComplexBall &s) const
{
    LocalSeries out = *this;
    for (auto &x : out.c_) {
        x *= s;
    }
    return out;
}

LocalSeries LocalSeries::inverse() const
{
    if (c_.empty() || c_[0].contains_zero()) {
        throw PrecisionError("inverse of a local series with no certified leading coefficient");
    }
    int rel = exact() ? kUnbounded : prec_ - val_;
    if (exact() && c_.size() == 1) {
        return monomial(ComplexBall(1L) / c_[0], -val_);
    }
    if (exact()) {
        throw PrecisionError("inverse of an exact multi-term local series needs a truncation");
    }
    TruncatedSeries<ComplexBall> s(rel - 1);
    for (int k = 0; k < rel && k < size(); ++k) {
        s[k] = c_[static_cast<std::size_t>(k)];
    }
    auto inv = s.inverse();
    LocalSeries out;
    out.val_ = -val_;
    out.prec_ = -val_ + rel;
    out.c_ = inv.coefficients();
    return out;
}

int LocalSeries::leading() const
{
    for (int k = 0; k < size(); ++k) {
        if (!c_[static_cast<std::size_t>(k)].is_exact_zero()) {
            return val_ + k;
        }
    }
    return exact() ? kUnbounded / 2 : prec_;
}

double LocalSeries::max_radius() const
{
    double r = 0.0;
    for (const auto &x : c_) {
        r = std::max(r, x.radius());
    }
    return r;
}

LocalSeries multiply(const LocalSeries &a, const LocalSeries &b, int cap)
{
    LocalSeries out;
    out.add_product(a, b, cap);
    return out;
}

ComplexBall residue_of_product(const LocalSeries &a, const LocalSeries &b)
{
    // Terms a_k b_{-1-k}; leading exact zeros do not demand precision.
    ComplexBall acc;
    int lo = a.leading();
    int hi = -1 - b.leading();
    if (hi < lo) {
        return acc;
    }
    if (!a.exact() && a.prec() <= hi) {
        throw PrecisionError("residue needs more terms of the first factor");
    }
    if (!b.exact() && b.prec() <= -1 - lo) {
        throw PrecisionError("residue needs more terms of the second factor");
    }
    for (int k = lo; k <= hi; ++k) {
        int ia = k - a.val();
        int ib = -1 - k - b.val();
        if (ia >= a.size()) {
            break;
        }
        if (ib < 0 || ib >= b.size()) {
            continue;
        }
        acc.add_mul(a.stored(ia), b.stored(ib));
    }
    return acc;
}

} // namespace striptr
