#include "striptr/bps/bps.hpp"

#include <algorithm>
#include <stdexcept>

#include "striptr/error.hpp"
#include "striptr/exact/bernoulli.hpp"
#include "striptr/free_energy/free_energy.hpp"

namespace striptr {

Monomial parameter_label(const StripGeometry &geom, const ParamRef &p)
{
    if (p.kind == ParamKind::beta && p.index == 0) {
        return Monomial();
    }
    const auto &k = geom.kahler();
    if (!k) {
        throw ValidationError("geometry has no Kahler labels for " + p.name());
    }
    const auto &labels = p.kind == ParamKind::alpha ? k->alpha_labels : k->beta_labels;
    std::size_t i = static_cast<std::size_t>(p.index - 1);
    if (p.index < 1 || i >= labels.size()) {
        throw ValidationError("missing Kahler label for " + p.name());
    }
    return labels[i];
}

Monomial pair_ratio(const StripGeometry &geom, const ParamRef &a, const ParamRef &b)
{
    return (parameter_label(geom, a) / parameter_label(geom, b)).normalized();
}

std::map<Monomial, int> gv_signs(const StripGeometry &geom)
{
    auto params = geom.parameters();
    std::map<Monomial, int> signs;
    std::map<Monomial, std::string> origin;
    for (std::size_t i = 0; i < params.size(); ++i) {
        for (std::size_t j = i + 1; j < params.size(); ++j) {
            Monomial rho = pair_ratio(geom, params[i], params[j]);
            std::string pair = params[i].name() + "/" + params[j].name();
            if (rho.is_one()) {
                throw ValidationError("Kahler labels of " + pair + " coincide");
            }
            int sign = params[i].kind == params[j].kind ? -1 : 1;
            auto [it, fresh] = signs.emplace(rho, sign);
            if (!fresh) {
                throw AmbiguityError("pairs " + origin[rho] + " and " + pair + " both give the curve class " +
                                     rho.to_string());
            }
            origin[rho] = pair;
        }
    }
    return signs;
}

std::string ChargeClass::to_string() const
{
    switch (kind) {
    case ChargeKind::d0_tower:
        return "nD0";
    case ChargeKind::d2_bound:
        return "D2_" + curve.to_string() + "-kD0";
    case ChargeKind::d2bar_bound:
        return "D2bar_" + curve.to_string() + "-kD0";
    }
    return {};
}

OmegaTable::OmegaTable(std::vector<OmegaEntry> entries) : entries_(std::move(entries))
{
    std::stable_sort(entries_.begin(), entries_.end(),
                     [](const OmegaEntry &a, const OmegaEntry &b) { return a.charge < b.charge; });
}

long OmegaTable::at(const ChargeClass &c) const
{
    for (const auto &e : entries_) {
        if (e.charge == c) {
            return e.omega;
        }
    }
    throw std::out_of_range("no BPS index recorded for " + c.to_string());
}

std::vector<std::string> OmegaTable::lines() const
{
    std::vector<std::string> out;
    for (const auto &e : entries_) {
        out.push_back(e.charge.to_string() + ", " + std::to_string(e.omega));
    }
    return out;
}

OmegaTable omega_table(const StripGeometry &geom)
{
    std::vector<OmegaEntry> entries;
    entries.push_back({{ChargeKind::d0_tower, Monomial()}, -(1L + geom.r() + geom.s())});
    for (const auto &[rho, sign] : gv_signs(geom)) {
        entries.push_back({{ChargeKind::d2_bound, rho}, sign});
        entries.push_back({{ChargeKind::d2bar_bound, rho}, sign});
    }
    return OmegaTable(std::move(entries));
}

QSeries::QSeries(int q_order, std::optional<long> degree_cap) : N_(q_order), D_(degree_cap)
{
    if (q_order < 0) {
        throw UnsupportedError("negative q truncation");
    }
    p_.resize(static_cast<std::size_t>(q_order) + 1);
}

bool QSeries::keeps(const Monomial &m) const
{
    if (!D_) {
        return true;
    }
    long d = m.degree();
    if (d < 0) {
        throw UnsupportedError("degree truncation needs monomials of non-negative degree, got " + m.to_string());
    }
    return d <= *D_;
}

void QSeries::add(int k, const Monomial &m, const Rational &c)
{
    if (k < 0 || k > N_ || c.is_zero() || !keeps(m)) {
        return;
    }
    auto &poly = p_[static_cast<std::size_t>(k)];
    Rational &slot = poly[m];
    slot += c;
    if (slot.is_zero()) {
        poly.erase(m);
    }
}

Rational QSeries::coeff(int k, const Monomial &m) const
{
    if (k < 0 || k > N_) {
        throw MalformedSeriesError("q power " + std::to_string(k) + " is beyond the truncation");
    }
    const auto &poly = p_[static_cast<std::size_t>(k)];
    auto it = poly.find(m);
    return it == poly.end() ? Rational() : it->second;
}

const QSeries::Poly &QSeries::at(int k) const { return p_.at(static_cast<std::size_t>(k)); }

QSeries &QSeries::operator+=(const QSeries &o)
{
    N_ = std::min(N_, o.N_);
    if (o.D_ && (!D_ || *o.D_ < *D_)) {
        D_ = o.D_;
    }
    p_.resize(static_cast<std::size_t>(N_) + 1);
    std::vector<Poly> mine = std::move(p_);
    p_.assign(static_cast<std::size_t>(N_) + 1, Poly());
    for (int k = 0; k <= N_; ++k) {
        for (const auto &[m, c] : mine[static_cast<std::size_t>(k)]) {
            add(k, m, c);
        }
        for (const auto &[m, c] : o.p_[static_cast<std::size_t>(k)]) {
            add(k, m, c);
        }
    }
    return *this;
}

QSeries operator*(const QSeries &a, const QSeries &b)
{
    std::optional<long> cap = a.D_;
    if (b.D_ && (!cap || *b.D_ < *cap)) {
        cap = b.D_;
    }
    QSeries out(std::min(a.N_, b.N_), cap);
    for (int i = 0; i <= out.N_; ++i) {
        for (const auto &[ma, ca] : a.p_[static_cast<std::size_t>(i)]) {
            for (int j = 0; i + j <= out.N_; ++j) {
                for (const auto &[mb, cb] : b.p_[static_cast<std::size_t>(j)]) {
                    out.add(i + j, ma * mb, ca * cb);
                }
            }
        }
    }
    return out;
}

QSeries QSeries::scaled(const Rational &c) const
{
    QSeries out(N_, D_);
    for (int k = 0; k <= N_; ++k) {
        for (const auto &[m, v] : p_[static_cast<std::size_t>(k)]) {
            out.add(k, m, v * c);
        }
    }
    return out;
}

namespace {

// out[k] += c * a * b over monomials.
void accumulate(QSeries &out, int k, const QSeries::Poly &a, const QSeries::Poly &b, const Rational &c)
{
    for (const auto &[ma, ca] : a) {
        for (const auto &[mb, cb] : b) {
            out.add(k, ma * mb, c * ca * cb);
        }
    }
}

} // namespace

QSeries QSeries::exp() const
{
    if (!p_[0].empty()) {
        throw MalformedSeriesError("exp of a q-series needs a vanishing q^0 part");
    }
    // k E_k = sum_{j=1}^{k} j L_j E_{k-j}
    QSeries e(N_, D_);
    e.add(0, Monomial(), Rational(1));
    for (int k = 1; k <= N_; ++k) {
        for (int j = 1; j <= k; ++j) {
            accumulate(e, k, p_[static_cast<std::size_t>(j)], e.p_[static_cast<std::size_t>(k - j)],
                       Rational(j, k));
        }
    }
    return e;
}

QSeries QSeries::log() const
{
    const auto &c0 = p_[0];
    if (c0.size() != 1 || !c0.begin()->first.is_one() || !c0.begin()->second.is_one()) {
        throw MalformedSeriesError("log of a q-series needs q^0 part exactly 1");
    }
    // L_k = E_k - (1/k) sum_{j=1}^{k-1} j L_j E_{k-j}
    QSeries l(N_, D_);
    for (int k = 1; k <= N_; ++k) {
        for (const auto &[m, c] : p_[static_cast<std::size_t>(k)]) {
            l.add(k, m, c);
        }
        for (int j = 1; j < k; ++j) {
            accumulate(l, k, l.p_[static_cast<std::size_t>(j)], p_[static_cast<std::size_t>(k - j)],
                       Rational(-j, k));
        }
    }
    return l;
}

QSeries QSeries::restricted(long degree_cap, bool nonnegative_exponents) const
{
    QSeries out(N_, degree_cap);
    for (int k = 0; k <= N_; ++k) {
        for (const auto &[m, c] : p_[static_cast<std::size_t>(k)]) {
            bool ok = true;
            for (const auto &[name, e] : m.exponents()) {
                ok = ok && (!nonnegative_exponents || e >= 0);
            }
            if (ok && (nonnegative_exponents || m.degree() >= 0)) {
                out.add(k, m, c);
            }
        }
    }
    return out;
}

std::vector<std::tuple<int, Monomial, Rational>> QSeries::terms() const
{
    std::vector<std::tuple<int, Monomial, Rational>> out;
    for (int k = 0; k <= N_; ++k) {
        for (const auto &[m, c] : p_[static_cast<std::size_t>(k)]) {
            out.emplace_back(k, m, c);
        }
    }
    return out;
}

bool operator==(const QSeries &a, const QSeries &b) { return a.N_ == b.N_ && a.D_ == b.D_ && a.p_ == b.p_; }

QSeries z_product_log_series(const StripGeometry &geom, int q_order, std::optional<long> degree)
{
    if (q_order < 1 || (degree && *degree < 1)) {
        throw UnsupportedError("z-series truncations must be at least 1");
    }
    QSeries out(q_order, degree);
    auto signs = gv_signs(geom);
    const Rational half_chi(1L + geom.r() + geom.s(), 2);
    // n log(1 - rho q^n) = -sum_k (n/k) rho^k q^{nk}
    for (int n = 1; n <= q_order; ++n) {
        for (int k = 1; n * k <= q_order; ++k) {
            Rational weight(n, k);
            out.add(n * k, Monomial(), half_chi * weight);
            for (const auto &[rho, sign] : signs) {
                out.add(n * k, rho.pow(k), -Rational(sign) * weight);
            }
        }
    }
    return out;
}

namespace {

long max_abs_exponent(const Monomial &m)
{
    long e = 0;
    for (const auto &[name, x] : m.exponents()) {
        e = std::max(e, x < 0 ? -x : x);
    }
    return e;
}

std::string describe_mismatch(const std::string &channel, const Rational &a, const Rational &b)
{
    return channel + ": product side " + a.to_string() + " vs free energy " + b.to_string();
}

} // namespace

CrosscheckReport coefficient_crosscheck(const StripGeometry &geom, int d, int g)
{
    if (d < 1 || g < 2) {
        throw UnsupportedError("coefficient cross-check needs d >= 1 and g >= 2");
    }
    CrosscheckReport rep;
    rep.degree = d;
    rep.genus = g;
    auto fail = [&rep](const std::string &msg) {
        if (rep.passed) {
            rep.first_failure = msg;
        }
        rep.passed = false;
    };

    auto signs = gv_signs(geom);
    auto terms = fg_closed_terms(g, geom);
    const int N = 3 * d;
    QSeries logz = z_product_log_series(geom, N, std::nullopt);

    // [x^{2g-2}] 1/(4 sinh^2(x/2)) = [x^{2g}] 1/S(x)^2.
    const Rational sinh_coeff = s_inverse_squared_coefficient(g);
    const Rational bern = bernoulli(2 * g) / (Rational(2 * g) * factorial(2 * g - 2));
    const Rational chi(1L + geom.r() + geom.s());

    for (const auto &[rho, sign] : signs) {
        const Monomial m = rho.pow(d);
        // Every (rho', d') with rho'^{d'} = m feeds this channel.
        std::vector<std::pair<Monomial, int>> sources;
        for (const auto &[other, s2] : signs) {
            long bound = static_cast<long>(d) * std::max(1L, max_abs_exponent(rho));
            for (long dd = 1; dd <= bound; ++dd) {
                if (other.pow(dd) == m) {
                    sources.emplace_back(other, static_cast<int>(dd));
                }
            }
        }
        // Series side: [rho^d q^k] log Z = -sum sign' (k/d')/d' over d' | k.
        for (int k = 1; k <= N; ++k) {
            Rational expect;
            for (const auto &[src, dd] : sources) {
                if (k % dd == 0) {
                    expect -= Rational(signs.at(src)) * Rational(k / dd, dd);
                }
            }
            Rational got = logz.coeff(k, m);
            if (got != expect) {
                fail(describe_mismatch(m.to_string() + " at q^" + std::to_string(k), got, expect));
            }
        }
        // hbar side: sum_n n q^{d' n} = 1/(4 sinh^2(d' hbar/2)).
        Rational product;
        Rational closed;
        for (const auto &[src, dd] : sources) {
            const int s2 = signs.at(src);
            product -= Rational(s2) * Rational(dd).pow(2 * g - 2) / Rational(dd) * sinh_coeff;
            for (const auto &t : terms) {
                if (t.kind == ClosedTerm::Kind::pair && pair_ratio(geom, t.first, t.second) == src) {
                    closed += Rational(t.sign) * bern * Rational(dd).pow(2 * g - 3);
                }
            }
        }
        std::string label = m.to_string();
        rep.lines.push_back(label + ", " + product.to_string() + ", " + closed.to_string());
        if (product != closed) {
            fail(describe_mismatch(label, product, closed));
        }
    }

    // Diagonal channel: -(chi/2) sum_n n log(1 - q^n) contributes
    // (chi/2) d^{2g-3} [x^{2g-2}] 1/(4 sinh^2(x/2)) at degree d; the sum over d
    // is zeta(3-2g) = -B_{2g-2}/(2g-2) times the d = 1 value.
    for (int k = 1; k <= N; ++k) {
        Rational expect;
        for (int dd = 1; dd <= k; ++dd) {
            if (k % dd == 0) {
                expect += chi / Rational(2) * Rational(k / dd, dd);
            }
        }
        Rational got = logz.coeff(k, Monomial());
        if (got != expect) {
            fail(describe_mismatch("diagonal at q^" + std::to_string(k), got, expect));
        }
    }
    Rational constant_map;
    for (const auto &t : terms) {
        if (t.kind == ClosedTerm::Kind::constant_map) {
            constant_map += t.value;
        }
    }
    const Rational zeta = -bernoulli(2 * g - 2) / Rational(2 * g - 2);
    Rational product = chi / Rational(2) * Rational(d).pow(2 * g - 3) * sinh_coeff;
    Rational closed = constant_map / zeta * Rational(d).pow(2 * g - 3);
    rep.lines.push_back("1, " + product.to_string() + ", " + closed.to_string());
    if (product != closed) {
        fail(describe_mismatch("diagonal", product, closed));
    }
    return rep;
}

DTReading dt_read(const StripGeometry &geom, int q_order, long degree)
{
    if (degree < 1) {
        throw UnsupportedError("DT reading needs a degree truncation of at least 1");
    }
    // Exponentiate without a degree cap so that cancellations between
    // positive and negative exponents are kept, then restrict.
    QSeries z = z_product_log_series(geom, q_order, std::nullopt).exp().restricted(degree, true);
    DTReading out;
    for (const auto &[k, m, c] : z.terms()) {
        out.coefficients[{m, k}] = c;
    }
    out.caveat = "formal coefficients; the DT chamber depends on convergence conditions on the Kahler "
                 "parameters, which are not resolved";
    return out;
}

} // namespace striptr
