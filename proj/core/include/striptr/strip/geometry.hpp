#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "striptr/exact/complex_ball.hpp"
#include "striptr/exact/monomial.hpp"
#include "striptr/exact/rational.hpp"
#include "striptr/polylog/rational_function.hpp"

namespace striptr {

/// Optional labels attaching a Kahler monomial to every curve parameter.
struct KahlerMap {
    std::vector<std::string> variables;
    std::vector<Monomial> alpha_labels;  // one per alpha
    std::vector<Monomial> beta_labels;   // one per beta_1..beta_s; beta_0 is the empty monomial
    std::map<std::string, Rational> values;
};

/// Which parameter list an index refers to.
enum class ParamKind { alpha, beta };

struct ParamRef {
    ParamKind kind;
    int index;  // alphas: 1..r, betas: 0..s (0 is the implicit beta_0 = 1)
    std::string name() const;
    friend auto operator<=>(const ParamRef &, const ParamRef &) = default;
};

/// Strip mirror curve
///   x(z) = log( prod_{j=0}^{s} (1 - b_j z) / prod_{i=1}^{r} (1 - a_i z) ) - (1+f) log(-z),
///   y(z) = log z,
/// with b_0 = 1 prepended implicitly.
class StripGeometry {
public:
    StripGeometry() = default;
    StripGeometry(std::vector<Rational> alphas, std::vector<Rational> betas, long framing,
                  std::optional<KahlerMap> kahler = std::nullopt);

    const std::vector<Rational> &alphas() const noexcept { return alphas_; }
    /// beta_1..beta_s as given.
    const std::vector<Rational> &betas() const noexcept { return betas_; }
    /// beta_0 = 1 followed by beta_1..beta_s.
    std::vector<Rational> betas_with_unit() const;
    long framing() const noexcept { return framing_; }
    int r() const noexcept { return static_cast<int>(alphas_.size()); }
    int s() const noexcept { return static_cast<int>(betas_.size()); }
    const std::optional<KahlerMap> &kahler() const noexcept { return kahler_; }

    const Rational &parameter(const ParamRef &p) const;
    /// All parameters in order alpha_1..alpha_r, beta_0..beta_s.
    std::vector<ParamRef> parameters() const;

    StripGeometry with_framing(long f) const;

    /// Throws ValidationError unless the parameter-level invariants hold
    /// (nonzero, pairwise distinct, admissible framing). Does not run the
    /// numeric ramification check; see validate().
    void require_admissible() const;

    std::string describe() const;

private:
    std::vector<Rational> alphas_;
    std::vector<Rational> betas_;
    long framing_ = 0;
    std::optional<KahlerMap> kahler_;
};

enum class IssueKind { zero_parameter, collision, forbidden_framing, nonsimple_ramification, kahler_mismatch };

struct ValidationIssue {
    IssueKind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool accepted() const noexcept { return issues.empty(); }
    bool has(IssueKind k) const;
    std::string to_string() const;
};

/// Checks every standing assumption individually, including simplicity of
/// the ramification points at the given precision.
ValidationReport validate(const StripGeometry &g, long precision_bits = 256);

/// dx/dz as a reduced rational function.
RationalFunction dx_dz(const StripGeometry &g);

/// e^{x(z)} = prod_j (1 - b_j z) / (prod_i (1 - a_i z) (-z)^{1+f}). Throws
/// PoleError at excluded points.
Rational exp_x(const StripGeometry &g, const Rational &z);

/// A(e^{x(z)}, e^{y(z)}) for the defining polynomial
///   A(X, Y) = (1 - Y) prod_{j>=1} (1 - b_j Y) + (-1)^f X Y^{1+f} prod_i (1 - a_i Y).
Rational implicit_identity_check(const StripGeometry &g, const Rational &z);

/// Zeros of dx, Newton-polished at the given precision and sorted by
/// (real, imaginary). Throws DegenerateGeometryError for a non-simple root
/// and PrecisionError if polishing does not converge.
std::vector<ComplexBall> ramification_points(const StripGeometry &g, long precision_bits = 256);

/// Zeros of dy = dz/z; always empty.
std::vector<ComplexBall> y_ramification_points(const StripGeometry &g);

/// A point of the Riemann sphere with rational affine coordinate.
struct SpherePoint {
    Rational z;
    bool at_infinity = false;
    friend bool operator==(const SpherePoint &, const SpherePoint &) = default;
    std::string to_string() const;
};

enum class CurveFunction { x, y };

/// Logarithmic singularities of the chosen function that are not poles of
/// the other function's differential. For the x side this is the set of
/// log-poles of y (z = 0, infinity) where dx is regular, which is empty for
/// admissible framing. For the y side these are the log-points of x:
/// 1, 1/a_i, 1/b_j.
std::vector<SpherePoint> log_vital_points(const StripGeometry &g, CurveFunction side);

} // namespace striptr
