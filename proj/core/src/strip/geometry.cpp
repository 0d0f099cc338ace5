#include "striptr/strip/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "striptr/error.hpp"

namespace striptr {

std::string ParamRef::name() const
{
    return (kind == ParamKind::alpha ? "alpha_" : "beta_") + std::to_string(index);
}

StripGeometry::StripGeometry(std::vector<Rational> alphas, std::vector<Rational> betas, long framing,
                             std::optional<KahlerMap> kahler)
    : alphas_(std::move(alphas)), betas_(std::move(betas)), framing_(framing), kahler_(std::move(kahler))
{
    if (kahler_) {
        if (kahler_->alpha_labels.size() != alphas_.size() || kahler_->beta_labels.size() != betas_.size()) {
            throw ValidationError("Kahler map must label every alpha and every beta");
        }
    }
}

std::vector<Rational> StripGeometry::betas_with_unit() const
{
    std::vector<Rational> b;
    b.reserve(betas_.size() + 1);
    b.emplace_back(1);
    b.insert(b.end(), betas_.begin(), betas_.end());
    return b;
}

const Rational &StripGeometry::parameter(const ParamRef &p) const
{
    static const Rational unit(1);
    if (p.kind == ParamKind::alpha) {
        return alphas_.at(static_cast<std::size_t>(p.index - 1));
    }
    if (p.index == 0) {
        return unit;
    }
    return betas_.at(static_cast<std::size_t>(p.index - 1));
}

std::vector<ParamRef> StripGeometry::parameters() const
{
    std::vector<ParamRef> out;
    for (int i = 1; i <= r(); ++i) {
        out.push_back({ParamKind::alpha, i});
    }
    for (int j = 0; j <= s(); ++j) {
        out.push_back({ParamKind::beta, j});
    }
    return out;
}

StripGeometry StripGeometry::with_framing(long f) const
{
    return StripGeometry(alphas_, betas_, f, kahler_);
}

namespace {

void parameter_issues(const StripGeometry &g, std::vector<ValidationIssue> &out)
{
    auto params = g.parameters();
    for (const auto &p : params) {
        if (g.parameter(p).is_zero()) {
            out.push_back({IssueKind::zero_parameter, p.name() + " is zero"});
        }
    }
    for (std::size_t a = 0; a < params.size(); ++a) {
        for (std::size_t b = a + 1; b < params.size(); ++b) {
            if (g.parameter(params[a]) == g.parameter(params[b])) {
                out.push_back({IssueKind::collision, params[a].name() + " = " + params[b].name() + " = " +
                                                         g.parameter(params[a]).to_string()});
            }
        }
    }
    long f = g.framing();
    if (f == -1) {
        out.push_back({IssueKind::forbidden_framing, "framing f = -1 is forbidden"});
    }
    if (f == g.s() - g.r()) {
        out.push_back({IssueKind::forbidden_framing,
                       "framing f = s - r = " + std::to_string(g.s() - g.r()) + " is forbidden"});
    }
}

void kahler_issues(const StripGeometry &g, std::vector<ValidationIssue> &out)
{
    if (!g.kahler()) {
        return;
    }
    const KahlerMap &k = *g.kahler();
    auto check = [&](const Monomial &m, const Rational &value, const std::string &name) {
        for (const auto &[var, e] : m.exponents()) {
            if (std::find(k.variables.begin(), k.variables.end(), var) == k.variables.end()) {
                out.push_back({IssueKind::kahler_mismatch, name + " label uses undeclared variable '" + var + "'"});
                return;
            }
            if (!k.values.count(var)) {
                return;  // unvalued labels are accepted as pure labels
            }
        }
        Rational v = m.evaluate(k.values);
        if (v != value) {
            out.push_back({IssueKind::kahler_mismatch, name + " = " + value.to_string() + " but its label " +
                                                           m.to_string() + " evaluates to " + v.to_string()});
        }
    };
    for (int i = 0; i < g.r(); ++i) {
        check(k.alpha_labels[static_cast<std::size_t>(i)], g.alphas()[static_cast<std::size_t>(i)],
              "alpha_" + std::to_string(i + 1));
    }
    for (int j = 0; j < g.s(); ++j) {
        check(k.beta_labels[static_cast<std::size_t>(j)], g.betas()[static_cast<std::size_t>(j)],
              "beta_" + std::to_string(j + 1));
    }
}

} // namespace

void StripGeometry::require_admissible() const
{
    std::vector<ValidationIssue> issues;
    parameter_issues(*this, issues);
    if (!issues.empty()) {
        ValidationReport rep{issues};
        throw ValidationError(rep.to_string());
    }
}

std::string StripGeometry::describe() const
{
    std::ostringstream os;
    os << "alphas=[";
    for (std::size_t i = 0; i < alphas_.size(); ++i) {
        os << (i ? ", " : "") << alphas_[i];
    }
    os << "] betas=[";
    for (std::size_t i = 0; i < betas_.size(); ++i) {
        os << (i ? ", " : "") << betas_[i];
    }
    os << "] f=" << framing_;
    return os.str();
}

bool ValidationReport::has(IssueKind k) const
{
    return std::any_of(issues.begin(), issues.end(), [k](const ValidationIssue &i) { return i.kind == k; });
}

std::string ValidationReport::to_string() const
{
    if (issues.empty()) {
        return "accepted";
    }
    std::string s = "rejected:";
    for (const auto &i : issues) {
        s += "\n  - " + i.message;
    }
    return s;
}

ValidationReport validate(const StripGeometry &g, long precision_bits)
{
    ValidationReport rep;
    parameter_issues(g, rep.issues);
    kahler_issues(g, rep.issues);
    if (rep.issues.empty()) {
        try {
            ramification_points(g, precision_bits);
        } catch (const DegenerateGeometryError &e) {
            rep.issues.push_back({IssueKind::nonsimple_ramification, e.what()});
        } catch (const PrecisionError &e) {
            rep.issues.push_back({IssueKind::nonsimple_ramification, e.what()});
        }
    }
    return rep;
}

RationalFunction dx_dz(const StripGeometry &g)
{
    Polynomial one(Rational(1));
    Polynomial z = Polynomial::z();
    RationalFunction dx;
    for (const auto &b : g.betas_with_unit()) {
        dx += RationalFunction(Polynomial(-b), one - z * b);
    }
    for (const auto &a : g.alphas()) {
        dx += RationalFunction(Polynomial(a), one - z * a);
    }
    dx -= RationalFunction(Polynomial(Rational(1 + g.framing())), z);
    return dx;
}

Rational exp_x(const StripGeometry &g, const Rational &z)
{
    if (z.is_zero()) {
        throw PoleError("x is singular at z = 0");
    }
    Rational num(1), den(1);
    for (const auto &b : g.betas_with_unit()) {
        num *= Rational(1) - b * z;
    }
    for (const auto &a : g.alphas()) {
        den *= Rational(1) - a * z;
    }
    if (num.is_zero() || den.is_zero()) {
        throw PoleError("x is singular at z = " + z.to_string());
    }
    den *= (-z).pow(1 + g.framing());
    return num / den;
}

Rational implicit_identity_check(const StripGeometry &g, const Rational &z)
{
    Rational X = exp_x(g, z);
    Rational Y = z;
    Rational first = Rational(1) - Y;
    for (const auto &b : g.betas()) {
        first *= Rational(1) - b * Y;
    }
    Rational second = X * Y.pow(1 + g.framing());
    if (g.framing() % 2 != 0) {
        second = -second;
    }
    for (const auto &a : g.alphas()) {
        second *= Rational(1) - a * Y;
    }
    return first + second;
}

namespace {

ComplexBall midpoint(const ComplexBall &z)
{
    return ComplexBall(z.real(), z.imag(), 0.0);
}

bool lex_less(const ComplexBall &a, const ComplexBall &b, double tol)
{
    double dr = (a.real() - b.real()).to_double();
    if (std::fabs(dr) > tol) {
        return dr < 0;
    }
    return (a.imag() - b.imag()).to_double() < 0;
}

} // namespace

std::vector<ComplexBall> ramification_points(const StripGeometry &g, long precision_bits)
{
    g.require_admissible();
    if (precision_bits < 64) {
        throw PrecisionError("ramification_points: precision below 64 bits");
    }
    RationalFunction dx = dx_dz(g);
    RationalFunction d2x = dx.derivative();
    Polynomial p = dx.numerator();
    int n = p.degree();
    if (n <= 0) {
        return {};
    }

    // Initial estimates from the companion matrix of the monic numerator.
    Polynomial m = p.monic();
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        comp(i, i - 1) = 1.0;
    }
    for (int i = 0; i < n; ++i) {
        comp(i, n - 1) = -m.coeff(i).to_double();
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
    if (solver.info() != Eigen::Success) {
        throw PrecisionError("companion eigenvalue solve failed");
    }
    auto estimates = solver.eigenvalues();

    PrecisionScope scope(precision_bits + 32);
    Polynomial dp = p.derivative();
    double target = std::ldexp(1.0, -static_cast<int>(precision_bits) - 8);
    double simple_tol = std::ldexp(1.0, -static_cast<int>(precision_bits / 4));

    std::vector<ComplexBall> roots;
    for (int k = 0; k < n; ++k) {
        ComplexBall z(BigFloat(estimates[k].real()), BigFloat(estimates[k].imag()));
        bool converged = false;
        for (int it = 0; it < 400; ++it) {
            ComplexBall fp = dp.evaluate(z);
            if (fp.mid_abs() == 0.0) {
                throw DegenerateGeometryError("dx has a multiple zero near " + z.to_string(12));
            }
            ComplexBall step = midpoint(p.evaluate(z)) / midpoint(fp);
            z = midpoint(z - step);
            double scale = std::max(1.0, z.mid_abs());
            if (step.mid_abs() <= target * scale) {
                converged = true;
                // One more step for the error estimate.
                ComplexBall last = midpoint(p.evaluate(z)) / midpoint(dp.evaluate(z));
                z = midpoint(z - last);
                z.add_error(2.0 * last.mid_abs() + std::ldexp(scale, -static_cast<int>(precision_bits) - 16));
                break;
            }
        }
        if (!converged) {
            throw PrecisionError("Newton polishing did not converge from " + std::to_string(estimates[k].real()) +
                                 " + " + std::to_string(estimates[k].imag()) + "i");
        }
        ComplexBall second = d2x.evaluate(midpoint(z));
        if (second.mid_abs() <= simple_tol) {
            throw DegenerateGeometryError("ramification point " + z.to_string(12) + " is not simple");
        }
        roots.push_back(std::move(z));
    }
    for (std::size_t a = 0; a < roots.size(); ++a) {
        for (std::size_t b = a + 1; b < roots.size(); ++b) {
            if ((roots[a] - roots[b]).mid_abs() <= simple_tol) {
                throw DegenerateGeometryError("ramification points " + roots[a].to_string(12) + " and " +
                                              roots[b].to_string(12) + " coincide");
            }
        }
    }
    std::sort(roots.begin(), roots.end(),
              [&](const ComplexBall &a, const ComplexBall &b) { return lex_less(a, b, simple_tol); });
    return roots;
}

std::vector<ComplexBall> y_ramification_points(const StripGeometry &g)
{
    g.require_admissible();
    // dy = dz/z: numerator is the constant 1, so there are no zeros; the
    // only candidates would be z = 0 and infinity, where dy has poles.
    RationalFunction dy(Polynomial(Rational(1)), Polynomial::z());
    if (dy.numerator().degree() > 0) {
        throw UnsupportedError("dy unexpectedly has zeros");
    }
    return {};
}

std::string SpherePoint::to_string() const
{
    return at_infinity ? "inf" : z.to_string();
}

std::vector<SpherePoint> log_vital_points(const StripGeometry &g, CurveFunction side)
{
    g.require_admissible();
    std::vector<SpherePoint> out;
    if (side == CurveFunction::x) {
        // y = log z is logarithmic at 0 and infinity; such a point is vital
        // unless dx has a pole there too.
        RationalFunction dx = dx_dz(g);
        if (dx.pole_order(Rational(0)) == 0) {
            out.push_back({Rational(0), false});
        }
        // At infinity w = 1/z: dx has a pole there iff z * dx_dz(z) has a
        // nonzero limit.
        RationalFunction zdx = RationalFunction::z() * dx;
        const auto &num = zdx.numerator();
        const auto &den = zdx.denominator();
        bool pole_at_inf = num.degree() == den.degree();
        if (!pole_at_inf) {
            out.push_back({Rational(0), true});
        }
        return out;
    }
    out.push_back({Rational(1), false});
    for (const auto &a : g.alphas()) {
        out.push_back({a.inverse(), false});
    }
    for (const auto &b : g.betas()) {
        out.push_back({b.inverse(), false});
    }
    return out;
}

} // namespace striptr
