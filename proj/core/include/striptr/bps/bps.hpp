#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "striptr/exact/monomial.hpp"
#include "striptr/exact/rational.hpp"
#include "striptr/strip/geometry.hpp"

namespace striptr {

/// Kahler monomial attached to a curve parameter (beta_0 maps to 1). Throws
/// ValidationError when the geometry carries no labels.
Monomial parameter_label(const StripGeometry &geom, const ParamRef &p);

/// Normalized ratio label(a)/label(b) of a parameter pair.
Monomial pair_ratio(const StripGeometry &geom, const ParamRef &a, const ParamRef &b);

/// Li coefficient sign of every D2 curve class: -1 for pairs within the alpha
/// list or within the beta list (beta_0 included), +1 for alpha-beta pairs.
/// Throws AmbiguityError if two pairs give the same normalized ratio.
std::map<Monomial, int> gv_signs(const StripGeometry &geom);

enum class ChargeKind { d0_tower, d2_bound, d2bar_bound };

/// A tower of BPS charges: nD0 (n >= 1), or D2/anti-D2 on a curve class bound
/// to k >= 0 anti-D0s.
struct ChargeClass {
    ChargeKind kind = ChargeKind::d0_tower;
    Monomial curve;

    /// "nD0", "D2_Q1*Q2-kD0", "D2bar_Q1*Q2-kD0".
    std::string to_string() const;
    friend auto operator<=>(const ChargeClass &, const ChargeClass &) = default;
    friend bool operator==(const ChargeClass &, const ChargeClass &) = default;
};

struct OmegaEntry {
    ChargeClass charge;
    long omega = 0;
};

/// 5D BPS indices, one entry per charge tower, in a fixed order: the D0
/// tower, then D2 classes by monomial, then anti-D2 classes by monomial.
class OmegaTable {
public:
    explicit OmegaTable(std::vector<OmegaEntry> entries);
    const std::vector<OmegaEntry> &entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    /// Throws std::out_of_range for an absent charge class.
    long at(const ChargeClass &c) const;
    /// One "charge, omega" line per entry.
    std::vector<std::string> lines() const;

private:
    std::vector<OmegaEntry> entries_;
};

/// Omega(nD0) = -(1+r+s), and Omega(D2_rho - kD0) = Omega(D2bar_rho - kD0)
/// = gv sign of rho.
OmegaTable omega_table(const StripGeometry &geom);

/// Truncated series sum_{k=0}^{N} q^k P_k with each P_k a Laurent polynomial
/// in Kahler monomials. An optional degree cap D drops monomials of signed
/// degree above D; the cap is only honest when no stored monomial has
/// negative degree, which is enforced.
class QSeries {
public:
    using Poly = std::map<Monomial, Rational>;

    QSeries(int q_order, std::optional<long> degree_cap = std::nullopt);

    int q_order() const noexcept { return N_; }
    const std::optional<long> &degree_cap() const noexcept { return D_; }

    /// Adds c * m * q^k (ignored beyond the truncations).
    void add(int k, const Monomial &m, const Rational &c);
    Rational coeff(int k, const Monomial &m) const;
    const Poly &at(int k) const;

    QSeries &operator+=(const QSeries &o);
    friend QSeries operator+(QSeries a, const QSeries &b) { return a += b; }
    friend QSeries operator*(const QSeries &a, const QSeries &b);
    QSeries scaled(const Rational &c) const;

    /// exp of a series with no q^0 part.
    QSeries exp() const;
    /// log of a series whose q^0 part is exactly 1.
    QSeries log() const;

    /// Restricts to monomials with all exponents >= 0 and to the given cap.
    QSeries restricted(long degree_cap, bool nonnegative_exponents) const;

    /// (q power, monomial, coefficient) triples in order, zeros omitted.
    std::vector<std::tuple<int, Monomial, Rational>> terms() const;

    friend bool operator==(const QSeries &a, const QSeries &b);

private:
    bool keeps(const Monomial &m) const;

    int N_;
    std::optional<long> D_;
    std::vector<Poly> p_;
};

/// log of prod_n [prod_cross (1 - rho q^n)^n / prod_{same, ordered} (1 - rho q^n)^{n/2}]
/// with every ratio normalized. Diagonal same-type factors give
/// -(1+r+s)/2 sum_n n log(1 - q^n). Truncated at q^N and, if given, at
/// degree D. Throws UnsupportedError for N < 1 or D < 1.
QSeries z_product_log_series(const StripGeometry &geom, int q_order, std::optional<long> degree);

struct CrosscheckReport {
    bool passed = true;
    int degree = 0;
    int genus = 0;
    /// One line per channel: label, product side, free-energy side.
    std::vector<std::string> lines;
    std::string first_failure;
};

/// Matches, channel by channel, the hbar^{2g-2} coefficient of the degree-d
/// term of log Z (with q = e^hbar) against the corresponding Li coefficient
/// of fg_closed, exactly. The diagonal channel is compared through the
/// zeta-regularized sum over d against the constant-map term.
CrosscheckReport coefficient_crosscheck(const StripGeometry &geom, int d, int g);

struct DTReading {
    /// (curve class monomial, power of q) -> coefficient of Z.
    std::map<std::pair<Monomial, int>, Rational> coefficients;
    /// The chamber is a convergence statement about the Kahler values; the
    /// coefficients are formal.
    std::string caveat;
};

/// Coefficients of exp(z_product_log_series) restricted to non-negative
/// exponents, through q^N and degree D.
DTReading dt_read(const StripGeometry &geom, int q_order, long degree);

} // namespace striptr
