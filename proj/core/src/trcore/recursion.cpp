#include "striptr/trcore/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "striptr/error.hpp"

namespace striptr {

namespace {

// The kernel t^m - sigma^m starts at t^m and its denominator at t^2, so the
// recursion kernel for output order m >= 1 starts at t^{m-2}. Only exponents
// below 1 of the recursion integrand can reach the residue.
constexpr int kIntegrandCap = 1;

bool next_tuple(std::vector<int> &idx, int base)
{
    for (std::size_t k = idx.size(); k-- > 0;) {
        if (++idx[k] < base) {
            return true;
        }
        idx[k] = 0;
    }
    return false;
}

} // namespace

int max_basis_order(int g, int n) { return 6 * g - 5 + 2 * n; }

Correlator::Correlator(int genus, int n, int points, int max_order)
    : g_(genus), n_(n), points_(points), max_order_(max_order)
{
    std::size_t total = 1;
    for (int k = 0; k < n; ++k) {
        total *= static_cast<std::size_t>(basis_size());
    }
    c_.resize(total);
}

std::size_t Correlator::offset(const std::vector<int> &flat_indices) const
{
    if (static_cast<int>(flat_indices.size()) != n_) {
        throw std::invalid_argument("correlator index has the wrong arity");
    }
    std::size_t off = 0;
    for (int k : flat_indices) {
        if (k < 0 || k >= basis_size()) {
            throw std::out_of_range("correlator basis index out of range");
        }
        off = off * static_cast<std::size_t>(basis_size()) + static_cast<std::size_t>(k);
    }
    return off;
}

const ComplexBall &Correlator::coeff(const std::vector<int> &flat_indices) const { return c_[offset(flat_indices)]; }
ComplexBall &Correlator::coeff(const std::vector<int> &flat_indices) { return c_[offset(flat_indices)]; }

ComplexBall Correlator::evaluate(const std::vector<ComplexBall> &z, const std::vector<ComplexBall> &ram_points) const
{
    if (static_cast<int>(z.size()) != n_) {
        throw std::invalid_argument("correlator evaluated at the wrong number of points");
    }
    const int B = basis_size();
    std::vector<std::vector<ComplexBall>> e(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k) {
        auto &ek = e[static_cast<std::size_t>(k)];
        ek.resize(static_cast<std::size_t>(B));
        for (int i = 0; i < points_; ++i) {
            ComplexBall d = z[static_cast<std::size_t>(k)] - ram_points.at(static_cast<std::size_t>(i));
            if (d.contains_zero()) {
                throw PoleError("correlator evaluated at a ramification point");
            }
            ComplexBall inv = ComplexBall(1L) / d;
            ComplexBall power = inv * inv;
            for (int m = 1; m <= max_order_; ++m) {
                ek[static_cast<std::size_t>(flat({i, m}))] = power;
                power *= inv;
            }
        }
    }
    ComplexBall acc;
    std::vector<int> idx(static_cast<std::size_t>(n_), 0);
    std::size_t off = 0;
    do {
        const ComplexBall &c = c_[off++];
        if (c.is_exact_zero()) {
            continue;
        }
        ComplexBall term = c;
        for (int k = 0; k < n_; ++k) {
            term *= e[static_cast<std::size_t>(k)][static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
        }
        acc += term;
    } while (next_tuple(idx, B));
    return acc;
}

TRSolver::TRSolver(StripGeometry geom, TROptions options, int target_g, int target_n)
    : geom_(std::move(geom)), opts_(options)
{
    T_ = opts_.truncation > 0 ? opts_.truncation : 4 * (3 * target_g + target_n) + 8;
    working_bits_ = opts_.precision_bits + (opts_.guard_bits >= 0 ? opts_.guard_bits : 4L * T_);
    PrecisionScope scope(working_bits_);
    geom_.require_admissible();
    if (!log_vital_points(geom_, CurveFunction::x).empty()) {
        throw UnsupportedError("x has logarithmic singularities away from 0 and infinity");
    }
    if (2 * target_g + target_n - 2 > opts_.budget) {
        throw BudgetError("omega_{" + std::to_string(target_g) + "," + std::to_string(target_n) +
                          "} exceeds the recursion budget " + std::to_string(opts_.budget));
    }
    ram_ = ramification_points(geom_, working_bits_);
    if (ram_.empty()) {
        throw DegenerateGeometryError("curve has no ramification points");
    }
    for (int i = 0; i < static_cast<int>(ram_.size()); ++i) {
        frames_.push_back(make_frame(geom_, ram_, i, T_));
    }
}

std::shared_ptr<const Correlator> TRSolver::omega(int g, int n)
{
    if (g < 0 || n < 1 || 2 * g + n - 2 <= 0) {
        throw UnsupportedError("omega_{g,n} is computed by the recursion only for 2g + n - 2 > 0");
    }
    if (2 * g + n - 2 > opts_.budget) {
        throw BudgetError("omega_{" + std::to_string(g) + "," + std::to_string(n) +
                          "} exceeds the recursion budget " + std::to_string(opts_.budget));
    }
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    auto it = memo_.find({g, n});
    if (it != memo_.end()) {
        return it->second;
    }
    PrecisionScope scope(working_bits_);
    auto c = compute(g, n);
    memo_[{g, n}] = c;
    return c;
}

const LocalSeries &TRSolver::sigma_power(int i, int m)
{
    auto key = std::make_pair(i, m);
    auto it = sigma_power_cache_.find(key);
    if (it != sigma_power_cache_.end()) {
        return it->second;
    }
    LocalSeries s;
    if (m == 0) {
        s = LocalSeries::monomial(ComplexBall(1L), 0);
    } else if (m == 1) {
        s = frames_[static_cast<std::size_t>(i)].sigma;
    } else {
        s = multiply(sigma_power(i, m - 1), frames_[static_cast<std::size_t>(i)].sigma, LocalSeries::kUnbounded);
    }
    return sigma_power_cache_.emplace(key, std::move(s)).first->second;
}

const LocalSeries &TRSolver::pulled_power(int i, int j, int m)
{
    auto key = std::make_tuple(i, j, m);
    auto it = pulled_cache_.find(key);
    if (it != pulled_cache_.end()) {
        return it->second;
    }
    const LocalFrame &f = frames_[static_cast<std::size_t>(i)];
    LocalSeries base;
    if (j == i) {
        base = f.inv_sigma;
    } else {
        // 1/(p_i - p_j + sigma(t))
        TruncatedSeries<ComplexBall> s = f.deck.sigma;
        s[0] = f.center - frames_[static_cast<std::size_t>(j)].center;
        base = LocalSeries::from_series(s.inverse());
    }
    LocalSeries s = m == 0 ? base : multiply(pulled_power(i, j, m - 1), base, LocalSeries::kUnbounded);
    return pulled_cache_.emplace(key, std::move(s)).first->second;
}

const LocalSeries &TRSolver::basis_local(int i, const BasisIndex &b, bool at_sigma)
{
    auto key = std::make_tuple(i, b, at_sigma);
    auto it = basis_cache_.find(key);
    if (it != basis_cache_.end()) {
        return it->second;
    }
    const LocalFrame &f = frames_[static_cast<std::size_t>(i)];
    LocalSeries s;
    if (at_sigma) {
        s = multiply(pulled_power(i, b.point, b.order), f.dsigma, LocalSeries::kUnbounded);
    } else if (b.point == i) {
        s = LocalSeries::monomial(ComplexBall(1L), -(b.order + 1));
    } else {
        // (d + t)^{-(m+1)} with d = p_i - p_j
        ComplexBall d = f.center - frames_[static_cast<std::size_t>(b.point)].center;
        ComplexBall inv_d = ComplexBall(1L) / d;
        TruncatedSeries<ComplexBall> taylor(T_);
        ComplexBall c = ComplexBall(1L);
        for (int k = 0; k <= b.order; ++k) {
            c *= inv_d;
        }
        for (int k = 0; k <= T_; ++k) {
            if (k > 0) {
                c *= ComplexBall(static_cast<long>(-(b.order + k))) * inv_d / ComplexBall(static_cast<long>(k));
            }
            taylor[k] = c;
        }
        s = LocalSeries::from_series(taylor);
    }
    return basis_cache_.emplace(key, std::move(s)).first->second;
}

LocalSeries TRSolver::bergman_local(int i, const BasisIndex &b, bool at_sigma)
{
    if (b.point != i) {
        return LocalSeries();
    }
    ComplexBall m(static_cast<long>(b.order));
    if (!at_sigma) {
        return LocalSeries::monomial(m, b.order - 1);
    }
    return multiply(sigma_power(i, b.order - 1), frames_[static_cast<std::size_t>(i)].dsigma, LocalSeries::kUnbounded)
        .scaled(m);
}

const LocalSeries &TRSolver::diagonal_bergman(int i)
{
    auto it = diagonal_cache_.find(i);
    if (it != diagonal_cache_.end()) {
        return it->second;
    }
    const LocalFrame &f = frames_[static_cast<std::size_t>(i)];
    // sigma'(t) / (t - sigma(t))^2, with (t - sigma)/t = 2 + O(t).
    TruncatedSeries<ComplexBall> h(T_ - 1);
    for (int k = 0; k < T_; ++k) {
        h[k] = -f.deck.sigma[k + 1];
    }
    h[0] += ComplexBall(1L);
    auto hinv = h.inverse();
    auto sq = LocalSeries::from_series(hinv * hinv);
    auto s = multiply(multiply(LocalSeries::monomial(ComplexBall(1L), -2), sq, LocalSeries::kUnbounded), f.dsigma,
                      kIntegrandCap);
    return diagonal_cache_.emplace(i, std::move(s)).first->second;
}

const LocalSeries &TRSolver::pair_product(int i, const BasisIndex &b1, const BasisIndex &b2)
{
    auto key = std::make_tuple(i, b1, b2);
    auto it = pair_cache_.find(key);
    if (it != pair_cache_.end()) {
        return it->second;
    }
    auto s = multiply(basis_local(i, b1, false), basis_local(i, b2, true), kIntegrandCap);
    return pair_cache_.emplace(key, std::move(s)).first->second;
}

const LocalSeries &TRSolver::kernel(int i, int m)
{
    auto key = std::make_pair(i, m);
    auto it = kernel_cache_.find(key);
    if (it != kernel_cache_.end()) {
        return it->second;
    }
    LocalSeries num;
    num.axpy(ComplexBall(1L), LocalSeries::monomial(ComplexBall(1L), m));
    num.axpy(ComplexBall(-1L), sigma_power(i, m));
    auto s = multiply(num, frames_[static_cast<std::size_t>(i)].kernel_den_inv, LocalSeries::kUnbounded);
    return kernel_cache_.emplace(key, std::move(s)).first->second;
}

const LocalSeries *TRSolver::contracted(int g, const std::vector<BasisIndex> &spectators, int i, bool at_sigma,
                                        ContractionCache &cache)
{
    auto key = std::make_tuple(g, spectators, i, at_sigma);
    auto it = cache.find(key);
    if (it == cache.end()) {
        LocalSeries acc;
        if (g == 0 && spectators.size() == 1) {
            acc = bergman_local(i, spectators[0], at_sigma);
        } else {
            auto w = omega(g, static_cast<int>(spectators.size()) + 1);
            std::vector<int> idx;
            bool inside = true;
            for (const auto &b : spectators) {
                inside = inside && w->in_range(b);
                idx.push_back(inside ? w->flat(b) : 0);
            }
            if (inside) {
                idx.push_back(0);
                for (int b = 0; b < w->basis_size(); ++b) {
                    idx.back() = b;
                    const ComplexBall &c = w->coeff(idx);
                    if (!c.is_exact_zero()) {
                        acc.axpy(c, basis_local(i, w->unflat(b), at_sigma));
                    }
                }
            }
        }
        it = cache.emplace(key, std::move(acc)).first;
    }
    return it->second.empty() ? nullptr : &it->second;
}

std::shared_ptr<const Correlator> TRSolver::compute(int g, int n)
{
    const int N = static_cast<int>(ram_.size());
    const int M = max_basis_order(g, n);
    auto out = std::make_shared<Correlator>(g, n, N, M);
    const int B = out->basis_size();
    const int ns = n - 1;
    const ComplexBall half(Rational(1, 2));

    ContractionCache cache;
    std::shared_ptr<const Correlator> inner;
    if (g >= 1 && !(g == 1 && n == 1)) {
        inner = omega(g - 1, n + 1);
    }

    std::vector<int> tuple(static_cast<std::size_t>(ns), 0);
    std::vector<BasisIndex> beta(static_cast<std::size_t>(ns));
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    do {
        for (int k = 0; k < ns; ++k) {
            beta[static_cast<std::size_t>(k)] = out->unflat(tuple[static_cast<std::size_t>(k)]);
            idx[static_cast<std::size_t>(k)] = tuple[static_cast<std::size_t>(k)];
        }
        for (int i = 0; i < N; ++i) {
            LocalSeries R;
            bool touched = false;

            // omega_{g-1,n+1}(beta, q, sigma q)
            if (g == 1 && n == 1) {
                R.axpy(ComplexBall(1L), diagonal_bergman(i));
                touched = true;
            } else if (inner) {
                std::vector<int> j;
                bool inside = true;
                for (const auto &b : beta) {
                    inside = inside && inner->in_range(b);
                    j.push_back(inside ? inner->flat(b) : 0);
                }
                if (inside) {
                    j.push_back(0);
                    j.push_back(0);
                    const int Bi = inner->basis_size();
                    for (int b1 = 0; b1 < Bi; ++b1) {
                        j[static_cast<std::size_t>(ns)] = b1;
                        for (int b2 = 0; b2 < Bi; ++b2) {
                            j[static_cast<std::size_t>(ns + 1)] = b2;
                            const ComplexBall &c = inner->coeff(j);
                            if (c.is_exact_zero()) {
                                continue;
                            }
                            R.axpy(c, pair_product(i, inner->unflat(b1), inner->unflat(b2)));
                            touched = true;
                        }
                    }
                }
            }

            // Stable splits of (g, beta) into two correlators.
            for (int g1 = 0; g1 <= g; ++g1) {
                const int g2 = g - g1;
                for (unsigned mask = 0; mask < (1u << ns); ++mask) {
                    std::vector<BasisIndex> I1;
                    std::vector<BasisIndex> I2;
                    for (int k = 0; k < ns; ++k) {
                        (mask & (1u << k) ? I1 : I2).push_back(beta[static_cast<std::size_t>(k)]);
                    }
                    if ((g1 == 0 && I1.empty()) || (g2 == 0 && I2.empty())) {
                        continue;
                    }
                    const LocalSeries *a = contracted(g1, I1, i, false, cache);
                    if (!a) {
                        continue;
                    }
                    const LocalSeries *b = contracted(g2, I2, i, true, cache);
                    if (!b) {
                        continue;
                    }
                    R.add_product(*a, *b, kIntegrandCap);
                    touched = true;
                }
            }

            if (!touched || R.empty()) {
                continue;
            }
            for (int m = 1; m <= M + 2; ++m) {
                ComplexBall v = residue_of_product(R, kernel(i, m)) * half;
                if (m <= M) {
                    idx[static_cast<std::size_t>(ns)] = out->flat({i, m});
                    out->coeff(idx) += v;
                } else {
                    out->pole_defect = std::max(out->pole_defect, v.abs_upper());
                }
            }
        }
    } while (next_tuple(tuple, B));

    double scale = 0.0;
    for (const auto &c : out->data()) {
        scale = std::max(scale, c.abs_upper());
    }
    double tol = std::ldexp(1.0, -static_cast<int>(opts_.precision_bits / 2));
    if (!(out->pole_defect <= tol * std::max(1.0, scale))) {
        throw PrecisionError("omega_{" + std::to_string(g) + "," + std::to_string(n) +
                             "} has components beyond its pole bound (defect " + std::to_string(out->pole_defect) +
                             ")");
    }
    return out;
}

ComplexBall TRSolver::free_energy(int g, const ComplexBall &phi_constant)
{
    if (g < 2) {
        throw UnsupportedError("the recursion defines F_g through omega_{g,1} only for g >= 2");
    }
    auto w = omega(g, 1);
    std::lock_guard<std::recursive_mutex> lock(mutex_);
    PrecisionScope scope(working_bits_);
    ContractionCache cache;
    ComplexBall acc;
    for (int i = 0; i < static_cast<int>(ram_.size()); ++i) {
        const LocalFrame &f = frames_[static_cast<std::size_t>(i)];
        // Phi = phi_constant + int_0^t log(1 + s/p) x'(p + s) ds. The log p
        // x(t) part is deck-invariant while omega_{g,1} is anti-invariant, so
        // it contributes no residue.
        auto phi = (f.log_y * f.dx).integral();
        phi[0] = phi_constant;
        const LocalSeries *local = contracted(g, {}, i, false, cache);
        if (!local) {
            continue;
        }
        acc += residue_of_product(*local, LocalSeries::from_series(phi));
    }
    return acc / ComplexBall(static_cast<long>(2 - 2 * g));
}

ComplexBall tr_free_energy(int g, const StripGeometry &geom, long precision_bits, bool check_doubling,
                           const ComplexBall &phi_constant)
{
    TROptions opts;
    opts.precision_bits = precision_bits;
    TRSolver solver(geom, opts, g, 1);
    ComplexBall value = solver.free_energy(g, phi_constant);

    PrecisionScope scope(precision_bits);
    double magnitude = std::max(value.mid_abs(), 1e-300);
    if (!(value.radius() <= std::ldexp(magnitude, -static_cast<int>(precision_bits / 4)))) {
        throw PrecisionError("F_" + std::to_string(g) + " lost too much precision (radius " +
                             std::to_string(value.radius()) + ")");
    }
    if (check_doubling) {
        opts.truncation = 2 * solver.truncation();
        TRSolver wide(geom, opts, g, 1);
        ComplexBall again = wide.free_energy(g, phi_constant);
        double diff = (value - again).abs_upper();
        if (!(diff <= std::ldexp(magnitude, -static_cast<int>(precision_bits / 2)))) {
            throw PrecisionError("F_" + std::to_string(g) + " is unstable under order doubling (difference " +
                                 std::to_string(diff) + ")");
        }
    }
    return value;
}

} // namespace striptr
