#include "striptr/free_energy/free_energy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "striptr/dual/dual.hpp"
#include "striptr/error.hpp"
#include "striptr/exact/bernoulli.hpp"
#include "striptr/exact/laurent.hpp"
#include "striptr/polylog/polylog.hpp"

namespace striptr {

std::string to_string(Route r)
{
    switch (r) {
    case Route::closed:
        return "closed";
    case Route::residue:
        return "residue";
    case Route::tr:
        return "tr";
    }
    return "unknown";
}

std::string FreeEnergyValue::value_string(int digits) const
{
    if (exact) {
        return exact->to_string();
    }
    if (numeric) {
        const ComplexBall &z = *numeric;
        char rad[32];
        std::snprintf(rad, sizeof rad, "%.2e", z.radius());
        std::string s = z.real().to_string(digits);
        if (!z.imag().is_zero() && std::abs(z.imag().to_double()) > z.radius()) {
            std::string im = z.imag().to_string(digits);
            s += (im[0] == '-' ? "" : "+") + im + "i";
        }
        return s + " +/- " + rad;
    }
    return "";
}

double relative_deviation(const ComplexBall &value, const Rational &reference)
{
    PrecisionScope scope(value.real().precision() + 32);
    ComplexBall diff(value.real(), value.imag());
    diff -= ComplexBall(reference);
    double scale = reference.is_zero() ? 1.0 : std::abs(reference.to_double());
    return diff.mid_abs() / scale;
}

namespace {

void require_genus(int g, const char *what)
{
    if (g < 2) {
        throw UnsupportedError(std::string(what) + ": F_0 and F_1 are not computed (genus must be >= 2)");
    }
}

// log(1 + c t) as an exact-coefficient series known through t^{max_power}.
LaurentSeries<Rational> log_one_plus(const Rational &c, int max_power)
{
    std::vector<Rational> coeffs;
    Rational power = c;
    for (int k = 1; k <= max_power; ++k) {
        Rational term = power / Rational(k);
        coeffs.push_back(k % 2 == 1 ? term : -term);
        power *= c;
    }
    return LaurentSeries<Rational>(1, std::move(coeffs), max_power + 1);
}

Rational pair_coefficient(int g)
{
    return bernoulli(2 * g) / (Rational(2 * g) * factorial(2 * g - 2));
}

} // namespace

std::vector<ClosedTerm> fg_closed_terms(int g, const StripGeometry &geom)
{
    require_genus(g, "fg_closed");
    geom.require_admissible();
    std::vector<ClosedTerm> terms;

    ClosedTerm constant;
    constant.kind = ClosedTerm::Kind::constant_map;
    Rational chi(1 + geom.r() + geom.s());
    constant.value = -chi / Rational(2) * bernoulli(2 * g) * bernoulli(2 * g - 2) /
                     (Rational(2 * g) * Rational(2 - 2 * g) * factorial(2 * g - 2));
    terms.push_back(constant);

    Rational c = pair_coefficient(g);
    auto add_pair = [&](ParamRef a, ParamRef b, int sign) {
        ClosedTerm t;
        t.kind = ClosedTerm::Kind::pair;
        t.first = a;
        t.second = b;
        t.ratio = geom.parameter(a) / geom.parameter(b);
        t.sign = sign;
        t.value = Rational(sign) * c * li_neg(2 * g - 3, t.ratio);
        terms.push_back(t);
    };
    for (int i = 1; i <= geom.r(); ++i) {
        for (int j = i + 1; j <= geom.r(); ++j) {
            add_pair({ParamKind::alpha, i}, {ParamKind::alpha, j}, -1);
        }
    }
    for (int i = 0; i <= geom.s(); ++i) {
        for (int j = i + 1; j <= geom.s(); ++j) {
            add_pair({ParamKind::beta, i}, {ParamKind::beta, j}, -1);
        }
    }
    for (int i = 1; i <= geom.r(); ++i) {
        for (int j = 0; j <= geom.s(); ++j) {
            add_pair({ParamKind::alpha, i}, {ParamKind::beta, j}, +1);
        }
    }
    return terms;
}

Rational fg_closed(int g, const StripGeometry &geom)
{
    Rational total;
    for (const auto &t : fg_closed_terms(g, geom)) {
        total += t.value;
    }
    return total;
}

Rational residue_at_point(int g, const StripGeometry &geom, const ParamRef &ref)
{
    require_genus(g, "residue_at_point");
    geom.require_admissible();
    const Rational p = geom.parameter(ref).inverse();
    const int M = 2 * g + 8;

    auto dx = dx_dz(geom).laurent_at(p, M);
    auto dy = RationalFunction(Polynomial(Rational(1)), Polynomial::z()).laurent_at(p, M);
    auto log_ratio = log_one_plus(p.inverse(), M);

    LaurentSeries<Rational> bracket = omega_dual_primitive_laurent(g, geom, p, M) * dx;
    LaurentSeries<Rational> quadratic(0, {}, LaurentSeries<Rational>::kExact);
    for (int g1 = 1; g1 < g; ++g1) {
        auto w1 = omega_dual_laurent(g1, geom, p, M);
        auto w2 = omega_dual_laurent(g - g1, geom, p, M);
        quadratic += (w1 * w2) / (dx * dy) * dx;
    }
    bracket -= quadratic * Rational(1, 2);
    return (log_ratio * bracket).residue();
}

Rational residue_at_point_aggregate(int g, const StripGeometry &geom, const ParamRef &ref)
{
    require_genus(g, "residue_at_point_aggregate");
    geom.require_admissible();
    std::vector<Rational> same, other;
    if (ref.kind == ParamKind::beta) {
        same = geom.betas_with_unit();
        other = geom.alphas();
    } else {
        same = geom.alphas();
        other = geom.betas_with_unit();
    }
    const Rational &pj = geom.parameter(ref);
    const int n = 2 * g - 3;
    Rational same_sum, other_sum;
    for (const auto &x : same) {
        if (x != pj) {
            same_sum += li_neg(n, x / pj);
        }
    }
    for (const auto &x : other) {
        other_sum += li_neg(n, x / pj);
    }
    Rational k(2 * g - 2);
    return Rational(1, 2) * s_inverse_squared_coefficient(g) *
           (bernoulli(2 * g - 2) - k * same_sum + k * other_sum);
}

Rational fg_residue(int g, const StripGeometry &geom)
{
    require_genus(g, "fg_residue");
    auto params = geom.parameters();
    for (std::size_t a = 0; a < params.size(); ++a) {
        for (std::size_t b = a + 1; b < params.size(); ++b) {
            if (geom.parameter(params[a]) == geom.parameter(params[b])) {
                throw DegenerateGeometryError("residue points of " + params[a].name() + " and " +
                                              params[b].name() + " coincide");
            }
        }
    }
    Rational total;
    for (const auto &p : params) {
        total += residue_at_point(g, geom, p);
    }
    return total / Rational(2 - 2 * g);
}

Rational residue_lemma_linear(const Rational &a, int g)
{
    require_genus(g, "residue_lemma_linear");
    if (a.is_one()) {
        throw UnsupportedError("residue_lemma_linear: a = 1 is the divergent case; use residue_lemma_log_at_one");
    }
    if (a.is_zero()) {
        throw std::domain_error("residue_lemma_linear: a must be nonzero");
    }
    const int M = 2 * g + 8;
    Rational one(1);
    auto factor = RationalFunction(Polynomial(one), Polynomial({-one, a})).laurent_at(one, M);
    auto li = li_neg_rational(2 * g - 2).realization.laurent_at(one, M);
    return (log_one_plus(one, M) * factor * li).residue();
}

Rational residue_lemma_log_at_one(int g)
{
    require_genus(g, "residue_lemma_log_at_one");
    const int M = 2 * g + 8;
    Rational one(1);
    auto factor = RationalFunction(Polynomial(one), Polynomial({-one, one})).laurent_at(one, M);
    auto li = li_neg_rational(2 * g - 2).realization.laurent_at(one, M);
    return (log_one_plus(one, M) * factor * li).residue();
}

Rational residue_quadratic_diag(int g1, int g2)
{
    if (g1 < 1 || g2 < 1) {
        throw std::domain_error("residue_quadratic_diag: genera must be positive");
    }
    const int T = 2 * (g1 + g2) + 2;
    auto mu = LaurentSeries<Rational>::monomial(Rational(1), 1);
    return (mu * li_neg_at_exp(2 * g1 - 1, T) * li_neg_at_exp(2 * g2 - 1, T)).residue();
}

Rational residue_quadratic_mixed(const Rational &a, int g1, int g2)
{
    if (g1 < 1 || g2 < 1) {
        throw std::domain_error("residue_quadratic_mixed: genera must be positive");
    }
    if (a.is_zero() || a.is_one()) {
        throw std::domain_error("residue_quadratic_mixed: a must differ from 0 and 1");
    }
    const int T = 2 * (g1 + g2) + 2;
    // Li_{1-2g2}(a z) around z = 1, composed with z - 1 = e^mu - 1.
    auto around_one = li_neg_scaled(2 * g2 - 1, a).laurent_at(Rational(1), T);
    TruncatedSeries<Rational> taylor = around_one.regular_part(T);
    TruncatedSeries<Rational> e_minus_one(T);
    for (int k = 1; k <= T; ++k) {
        e_minus_one[k] = factorial(k).inverse();
    }
    LaurentSeries<Rational> shifted(taylor.compose(e_minus_one));
    auto mu = LaurentSeries<Rational>::monomial(Rational(1), 1);
    return (mu * li_neg_at_exp(2 * g1 - 1, T) * shifted).residue();
}

} // namespace striptr
