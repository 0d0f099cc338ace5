#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

#include "striptr/exact/complex_ball.hpp"
#include "striptr/strip/geometry.hpp"
#include "striptr/trcore/frame.hpp"
#include "striptr/trcore/local_series.hpp"

namespace striptr {

/// Basis one-form dz / (z - p_point)^{order + 1}, order >= 1.
struct BasisIndex {
    int point = 0;
    int order = 1;
    friend auto operator<=>(const BasisIndex &, const BasisIndex &) = default;
};

/// Largest basis order that can occur in omega_{g,n}: its poles have order at
/// most 6g - 4 + 2n in every variable.
int max_basis_order(int g, int n);

/// omega_{g,n} as a coefficient tensor over products of basis one-forms,
/// one index per variable; the last index is the variable the recursion
/// produced.
class Correlator {
public:
    Correlator(int genus, int n, int points, int max_order);

    int genus() const noexcept { return g_; }
    int n() const noexcept { return n_; }
    int points() const noexcept { return points_; }
    int max_order() const noexcept { return max_order_; }
    /// Basis size per variable.
    int basis_size() const noexcept { return points_ * max_order_; }

    int flat(const BasisIndex &b) const { return b.point * max_order_ + (b.order - 1); }
    BasisIndex unflat(int k) const { return {k / max_order_, k % max_order_ + 1}; }
    bool in_range(const BasisIndex &b) const { return b.order >= 1 && b.order <= max_order_; }

    const ComplexBall &coeff(const std::vector<int> &flat_indices) const;
    ComplexBall &coeff(const std::vector<int> &flat_indices);
    const std::vector<ComplexBall> &data() const noexcept { return c_; }
    std::vector<ComplexBall> &data() noexcept { return c_; }

    /// Coefficient of dz_1 ... dz_n at the given points.
    ComplexBall evaluate(const std::vector<ComplexBall> &z, const std::vector<ComplexBall> &ram_points) const;

    /// Largest |coefficient| produced beyond max_order (must be zero).
    double pole_defect = 0.0;

private:
    std::size_t offset(const std::vector<int> &flat_indices) const;

    int g_;
    int n_;
    int points_;
    int max_order_;
    std::vector<ComplexBall> c_;
};

struct TROptions {
    long precision_bits = 256;
    /// Local truncation order; 0 selects 4(3g + n) + 8 for the target.
    int truncation = 0;
    /// Largest 2g + n - 2 that may be computed.
    int budget = 5;
    /// Extra working bits on top of precision_bits; negative selects 4T.
    /// Ball radii of the local series grow by a few bits per order.
    long guard_bits = -1;
};

/// Direct topological recursion on a strip curve. Correlators are memoized;
/// all public methods are safe to call from several threads.
class TRSolver {
public:
    /// Prepares local frames sized for computing omega_{g,n} with
    /// 2g + n - 2 up to that of the target.
    TRSolver(StripGeometry geom, TROptions options, int target_g, int target_n);

    const StripGeometry &geometry() const noexcept { return geom_; }
    const std::vector<ComplexBall> &ramification() const noexcept { return ram_; }
    const std::vector<LocalFrame> &frames() const noexcept { return frames_; }
    int truncation() const noexcept { return T_; }
    long precision_bits() const noexcept { return opts_.precision_bits; }
    long working_bits() const noexcept { return working_bits_; }

    /// omega_{g,n} for 2g + n - 2 > 0. Throws BudgetError beyond the budget.
    std::shared_ptr<const Correlator> omega(int g, int n);

    /// F_g = 1/(2-2g) sum_i Res omega_{g,1} Phi with Phi' = log(z/p_i) x'(z)
    /// locally and Phi(p_i) = phi_constant.
    ComplexBall free_energy(int g, const ComplexBall &phi_constant = ComplexBall());

private:
    using ContractionCache = std::map<std::tuple<int, std::vector<BasisIndex>, int, bool>, LocalSeries>;

    std::shared_ptr<const Correlator> compute(int g, int n);

    // omega_{g,|J|+1}(J, q) at frame i as a series in t, with q optionally
    // replaced by sigma(q). nullptr when it vanishes identically.
    const LocalSeries *contracted(int g, const std::vector<BasisIndex> &spectators, int i, bool at_sigma,
                                  ContractionCache &cache);

    // Local expansions at frame i of basis element b, plain or pulled back
    // by the deck transformation.
    const LocalSeries &basis_local(int i, const BasisIndex &b, bool at_sigma);
    // omega_{0,2}(b, q) at frame i: m t^{m-1} (or its pullback).
    LocalSeries bergman_local(int i, const BasisIndex &b, bool at_sigma);
    // 1/(z - p_j)^{m+1} at frame i, evaluated at sigma(t) but without the
    // sigma' factor.
    const LocalSeries &pulled_power(int i, int j, int m);
    const LocalSeries &sigma_power(int i, int m);
    const LocalSeries &diagonal_bergman(int i);
    const LocalSeries &pair_product(int i, const BasisIndex &b1, const BasisIndex &b2);
    const LocalSeries &kernel(int i, int m);

    StripGeometry geom_;
    TROptions opts_;
    int T_ = 0;
    long working_bits_ = 0;
    std::vector<ComplexBall> ram_;
    std::vector<LocalFrame> frames_;

    std::recursive_mutex mutex_;
    std::map<std::pair<int, int>, std::shared_ptr<const Correlator>> memo_;
    std::map<std::tuple<int, BasisIndex, bool>, LocalSeries> basis_cache_;
    std::map<std::tuple<int, BasisIndex, BasisIndex>, LocalSeries> pair_cache_;
    std::map<std::pair<int, int>, LocalSeries> kernel_cache_;
    std::map<std::tuple<int, int, int>, LocalSeries> pulled_cache_;
    std::map<std::pair<int, int>, LocalSeries> sigma_power_cache_;
    std::map<int, LocalSeries> diagonal_cache_;
};

/// tr route for F_g. With check_doubling, the computation is repeated at
/// twice the truncation and a PrecisionError is thrown unless both agree to
/// 2^{-P/2} relative.
ComplexBall tr_free_energy(int g, const StripGeometry &geom, long precision_bits = 256, bool check_doubling = true,
                           const ComplexBall &phi_constant = ComplexBall());

} // namespace striptr
