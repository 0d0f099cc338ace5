#include "commands.hpp"

#include <cmath>
#include <future>
#include <ostream>
#include <random>
#include <sstream>
#include <utility>
#include <vector>

#include "striptr/bps/bps.hpp"
#include "striptr/error.hpp"
#include "striptr/exact/bernoulli.hpp"
#include "striptr/free_energy/free_energy.hpp"
#include "striptr/polylog/polylog.hpp"
#include "striptr/trcore/recursion.hpp"

namespace striptr::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

// One output row: named fields, printed either as "a, b, c" or as a JSON line.
class Emitter {
public:
    Emitter(OutputFormat fmt, std::ostream &out) : fmt_(fmt), out_(out) {}

    void row(std::initializer_list<std::pair<const char *, ordered_json>> fields)
    {
        if (fmt_ == OutputFormat::records) {
            ordered_json j = ordered_json::object();
            for (const auto &[k, v] : fields) {
                j[k] = v;
            }
            out_ << j.dump() << '\n';
            return;
        }
        bool first = true;
        for (const auto &[k, v] : fields) {
            out_ << (first ? "" : ", ") << (v.is_string() ? v.get<std::string>() : v.dump());
            first = false;
        }
        out_ << '\n';
    }

private:
    OutputFormat fmt_;
    std::ostream &out_;
};

const char *issue_name(IssueKind k)
{
    switch (k) {
    case IssueKind::zero_parameter:
        return "zero parameter";
    case IssueKind::collision:
        return "collision";
    case IssueKind::forbidden_framing:
        return "forbidden framing";
    case IssueKind::nonsimple_ramification:
        return "non-simple ramification";
    case IssueKind::kahler_mismatch:
        return "kahler mismatch";
    }
    return "issue";
}

// Writes the rejection reasons and returns false for an unusable geometry.
bool precheck(const RunConfig &cfg, Streams io)
{
    ValidationReport rep = validate(cfg.geometry, cfg.precision_bits);
    if (rep.accepted()) {
        return true;
    }
    io.err << "invalid geometry:\n";
    for (const auto &issue : rep.issues) {
        io.err << "  " << issue_name(issue.kind) << ": " << issue.message << '\n';
    }
    return false;
}

// Relative tolerance of the numeric route at P bits.
double tr_tolerance(long precision_bits)
{
    return std::ldexp(1.0, static_cast<int>(-precision_bits / 3));
}

std::string format_double(double v)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

// Runs f(g) for g = 2..g_max concurrently; results come back in g order.
template <class F>
auto per_genus(int g_max, F f)
{
    using R = decltype(f(2));
    std::vector<std::future<R>> jobs;
    for (int g = 2; g <= g_max; ++g) {
        jobs.push_back(std::async(std::launch::async, f, g));
    }
    std::vector<R> out;
    for (auto &j : jobs) {
        out.push_back(j.get());
    }
    return out;
}

struct GenusValues {
    std::optional<Rational> closed;
    std::optional<Rational> residue;
    std::optional<ComplexBall> tr;
};

} // namespace

int run_validate(const RunConfig &cfg, Streams io)
{
    Emitter emit(cfg.format, io.out);
    ValidationReport rep = validate(cfg.geometry, cfg.precision_bits);
    if (rep.accepted()) {
        emit.row({{"status", "accepted"}, {"geometry", cfg.geometry.describe()}});
        return ok;
    }
    for (const auto &issue : rep.issues) {
        emit.row({{"status", "rejected"}, {"issue", issue_name(issue.kind)}, {"message", issue.message}});
    }
    return invalid;
}

int run_free_energy(const RunConfig &cfg, RouteChoice route, Streams io)
{
    if (cfg.g_max < 2) {
        io.err << "--g-max must be at least 2\n";
        return invalid;
    }
    if (!precheck(cfg, io)) {
        return invalid;
    }
    const bool want_residue = route == RouteChoice::residue || route == RouteChoice::all;
    const bool want_tr = route == RouteChoice::tr || route == RouteChoice::all;
    const StripGeometry &geom = cfg.geometry;
    const long P = cfg.precision_bits;

    auto values = per_genus(cfg.g_max, [&](int g) {
        GenusValues v;
        v.closed = fg_closed(g, geom);
        if (want_residue) {
            v.residue = fg_residue(g, geom);
        }
        if (want_tr) {
            v.tr = tr_free_energy(g, geom, P);
        }
        return v;
    });

    Emitter emit(cfg.format, io.out);
    int status = ok;
    for (int g = 2; g <= cfg.g_max; ++g) {
        const GenusValues &v = values[g - 2];
        auto print = [&](Route r, const std::string &value) {
            emit.row({{"g", g}, {"route", to_string(r)}, {"value", value}});
        };
        if (route == RouteChoice::closed || route == RouteChoice::all) {
            print(Route::closed, v.closed->to_string());
        }
        if (want_residue) {
            print(Route::residue, v.residue->to_string());
        }
        double tr_dev = 0.0;
        if (want_tr) {
            FreeEnergyValue fv{g, Route::tr, std::nullopt, v.tr};
            print(Route::tr, fv.value_string());
            tr_dev = relative_deviation(*v.tr, *v.closed);
        }
        const bool residue_ok = !want_residue || *v.residue == *v.closed;
        const bool tr_ok = !want_tr || tr_dev <= tr_tolerance(P);
        if (!residue_ok || !tr_ok) {
            status = mismatch;
        }
        if (route == RouteChoice::all) {
            std::string verdict = std::string(residue_ok ? "closed = residue" : "closed != residue") + "; tr " +
                                  (tr_ok ? "agrees" : "disagrees") + " (relative deviation " +
                                  format_double(tr_dev) + ", tolerance " + format_double(tr_tolerance(P)) + ")";
            emit.row({{"g", g}, {"route", "verdict"}, {"value", verdict}});
        } else if (!tr_ok) {
            io.err << "g = " << g << ": tr deviates from the exact value by " << format_double(tr_dev)
                   << " (tolerance " << format_double(tr_tolerance(P)) << ")\n";
        }
    }
    return status;
}

int run_bps_table(const RunConfig &cfg, Streams io)
{
    if (!cfg.geometry.kahler()) {
        io.err << "bps-table needs Kahler labels (kahler_values, kahler_variables or *_labels)\n";
        return invalid;
    }
    if (!precheck(cfg, io)) {
        return invalid;
    }
    Emitter emit(cfg.format, io.out);
    const OmegaTable table = omega_table(cfg.geometry);
    for (const auto &e : table.entries()) {
        emit.row({{"charge", e.charge.to_string()}, {"omega", e.omega}});
    }
    return ok;
}

int run_z_series(const RunConfig &cfg, bool dt, Streams io)
{
    if (!cfg.geometry.kahler()) {
        io.err << "z-series needs Kahler labels (kahler_values, kahler_variables or *_labels)\n";
        return invalid;
    }
    if (!precheck(cfg, io)) {
        return invalid;
    }
    Emitter emit(cfg.format, io.out);
    if (!dt) {
        for (const auto &[k, m, c] : z_product_log_series(cfg.geometry, cfg.q_order, cfg.degree).terms()) {
            emit.row({{"qpow", k}, {"monomial", m.to_string()}, {"coeff", c.to_string()}});
        }
        return ok;
    }
    DTReading reading = dt_read(cfg.geometry, cfg.q_order, cfg.degree);
    std::map<std::pair<int, Monomial>, Rational> by_q;
    for (const auto &[key, c] : reading.coefficients) {
        by_q.emplace(std::make_pair(key.second, key.first), c);
    }
    for (const auto &[key, c] : by_q) {
        if (!c.is_zero()) {
            emit.row({{"qpow", key.first}, {"monomial", key.second.to_string()}, {"coeff", c.to_string()}});
        }
    }
    io.err << "note: " << reading.caveat << '\n';
    return ok;
}

namespace {

// Collects verification cases and remembers the first failure.
class Checker {
public:
    Checker(const char *suite, OutputFormat fmt, std::ostream &out) : suite_(suite), emit_(fmt, out) {}

    void check(const std::string &name, const std::string &value, const std::string &expected, bool pass)
    {
        emit_.row({{"suite", suite_},
                   {"case", name},
                   {"value", value},
                   {"expected", expected},
                   {"pass", pass}});
        if (!pass && first_failure_.empty()) {
            first_failure_ = name + ": got " + value + ", expected " + expected;
        }
    }

    void exact(const std::string &name, const Rational &value, const Rational &expected)
    {
        check(name, value.to_string(), expected.to_string(), value == expected);
    }

    int finish(std::ostream &err) const
    {
        if (first_failure_.empty()) {
            return ok;
        }
        err << suite_ << " suite failed; first counterexample: " << first_failure_ << '\n';
        return mismatch;
    }

private:
    const char *suite_;
    Emitter emit_;
    std::string first_failure_;
};

const std::vector<Rational> &lemma_grid()
{
    static const std::vector<Rational> grid{Rational(2), Rational(1, 2), Rational(-3), Rational(5, 7)};
    return grid;
}

void verify_lemmas(Checker &c)
{
    for (int g = 2; g <= 6; ++g) {
        std::string gs = std::to_string(g);
        for (const Rational &a : lemma_grid()) {
            Rational expected = Rational(2 * g - 2) * li_neg(2 * g - 3, a) / a;
            c.exact("linear a=" + a.to_string() + " g=" + gs, residue_lemma_linear(a, g), expected);
        }
        c.exact("log_at_one g=" + gs, residue_lemma_log_at_one(g), -bernoulli(2 * g - 2));
    }
    for (int g1 = 1; g1 <= 6; ++g1) {
        for (int g2 = 1; g2 <= 6; ++g2) {
            std::string gs = " g1=" + std::to_string(g1) + " g2=" + std::to_string(g2);
            c.exact("quadratic_diag" + gs, residue_quadratic_diag(g1, g2), -bernoulli(2 * g1 + 2 * g2 - 2));
            for (const Rational &a : lemma_grid()) {
                Rational expected = Rational(2 * g1 - 1) * li_neg(2 * g1 + 2 * g2 - 3, a);
                c.exact("quadratic_mixed a=" + a.to_string() + gs, residue_quadratic_mixed(a, g1, g2), expected);
            }
        }
    }
}

void verify_routes(const RunConfig &cfg, Checker &c)
{
    auto pairs = per_genus(cfg.g_max, [&](int g) {
        return std::make_pair(fg_closed(g, cfg.geometry), fg_residue(g, cfg.geometry));
    });
    for (int g = 2; g <= cfg.g_max; ++g) {
        c.exact("closed vs residue g=" + std::to_string(g), pairs[g - 2].second, pairs[g - 2].first);
    }
}

void verify_product(const RunConfig &cfg, Checker &c)
{
    for (int d = 1; d <= cfg.degree; ++d) {
        for (int g = 2; g <= cfg.g_max; ++g) {
            CrosscheckReport rep = coefficient_crosscheck(cfg.geometry, d, g);
            std::string name = "crosscheck d=" + std::to_string(d) + " g=" + std::to_string(g);
            c.check(name, rep.passed ? "match" : rep.first_failure, "match", rep.passed);
        }
    }
}

void verify_tr(const RunConfig &cfg, Checker &c)
{
    const long P = cfg.precision_bits;
    const double tol = tr_tolerance(P);
    auto values = per_genus(cfg.g_max, [&](int g) { return tr_free_energy(g, cfg.geometry, P); });
    for (int g = 2; g <= cfg.g_max; ++g) {
        double dev = relative_deviation(values[g - 2], fg_closed(g, cfg.geometry));
        c.check("tr vs closed g=" + std::to_string(g), format_double(dev), "<= " + format_double(tol), dev <= tol);
    }
    // The additive constant of the primitive must drop out.
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
    Rational constant(num(rng), den(rng));
    ComplexBall shifted = tr_free_energy(2, cfg.geometry, P, true, ComplexBall(constant));
    double dev = relative_deviation(shifted, fg_closed(2, cfg.geometry));
    c.check("tr primitive constant " + constant.to_string() + " g=2", format_double(dev),
            "<= " + format_double(tol), dev <= tol);
}

} // namespace

int run_verify(const RunConfig &cfg, Suite suite, Streams io)
{
    if (suite != Suite::lemmas && !precheck(cfg, io)) {
        return invalid;
    }
    const char *name = suite == Suite::lemmas    ? "lemmas"
                       : suite == Suite::routes  ? "routes"
                       : suite == Suite::product ? "product"
                                                 : "tr";
    Checker c(name, cfg.format, io.out);
    switch (suite) {
    case Suite::lemmas:
        verify_lemmas(c);
        break;
    case Suite::routes:
        verify_routes(cfg, c);
        break;
    case Suite::product:
        verify_product(cfg, c);
        break;
    case Suite::tr:
        verify_tr(cfg, c);
        break;
    }
    return c.finish(io.err);
}

int report_exception(std::ostream &err)
{
    try {
        throw;
    } catch (const BudgetError &e) {
        err << "budget exceeded: " << e.what() << '\n';
        return exhausted;
    } catch (const PrecisionError &e) {
        err << "precision failure: " << e.what() << '\n';
        return exhausted;
    } catch (const ParseError &e) {
        err << "config error: " << e.what() << '\n';
        return invalid;
    } catch (const ValidationError &e) {
        err << "invalid geometry: " << e.what() << '\n';
        return invalid;
    } catch (const DegenerateGeometryError &e) {
        err << "invalid geometry: " << e.what() << '\n';
        return invalid;
    } catch (const AmbiguityError &e) {
        err << "ambiguous curve classes: " << e.what() << '\n';
        return invalid;
    } catch (const UnsupportedError &e) {
        err << "unsupported request: " << e.what() << '\n';
        return invalid;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return failure;
    }
}

} // namespace striptr::cli
