#pragma once

#include <optional>
#include <string>
#include <vector>

#include "striptr/exact/complex_ball.hpp"
#include "striptr/exact/rational.hpp"
#include "striptr/strip/geometry.hpp"

namespace striptr {

enum class Route { closed, residue, tr };

std::string to_string(Route r);

/// F_g from one route: exact for closed/residue, a ball for tr.
struct FreeEnergyValue {
    int genus = 2;
    Route route = Route::closed;
    std::optional<Rational> exact;
    std::optional<ComplexBall> numeric;

    /// "p/q" for exact values, "re +/- rad" (or with imaginary part) for balls.
    std::string value_string(int digits = 30) const;
};

/// One summand of the closed formula.
struct ClosedTerm {
    enum class Kind { constant_map, pair };
    Kind kind = Kind::constant_map;
    ParamRef first{ParamKind::alpha, 0};   // numerator parameter of the ratio
    ParamRef second{ParamKind::alpha, 0};  // denominator parameter
    Rational ratio;                        // first / second
    int sign = 0;                          // -1 same-type pair, +1 cross pair
    Rational value;                        // contribution to F_g
};

/// |mid(value) - reference| / |reference| (absolute when reference is 0),
/// evaluated at the midpoint's precision.
double relative_deviation(const ComplexBall &value, const Rational &reference);

/// Summands of
///   F_g = -(1+r+s)/2 B_{2g} B_{2g-2} / (2g (2-2g) (2g-2)!)
///         + sum over pairs sign * B_{2g} Li_{3-2g}(ratio) / (2g (2g-2)!),
/// sign -1 for alpha-alpha and beta-beta pairs (beta_0 = 1 included), +1 for
/// alpha-beta pairs. Throws UnsupportedError for g < 2.
std::vector<ClosedTerm> fg_closed_terms(int g, const StripGeometry &geom);

/// Sum of fg_closed_terms.
Rational fg_closed(int g, const StripGeometry &geom);

/// Raw residue at q -> 1/parameter(p) of
///   log(q/p) [ P_g(q) dx(q) - 1/2 sum_{g1+g2=g} w_{g1}(q) w_{g2}(q) / (dx dy) dx ]
/// where P_g is the dual primitive and w the dual correlators, by exact
/// Laurent expansion in the local coordinate.
Rational residue_at_point(int g, const StripGeometry &geom, const ParamRef &p);

/// Closed form of the same per-point residue, e.g. at 1/b_j:
///   1/2 [hbar^{2g}] S^{-2} (B_{2g-2} - (2g-2) sum_{i != j} Li_{3-2g}(b_i/b_j)
///                           + (2g-2) sum_i Li_{3-2g}(a_i/b_j)),
/// and the same with the roles of alpha and beta exchanged at 1/a_j.
Rational residue_at_point_aggregate(int g, const StripGeometry &geom, const ParamRef &p);

/// F_g = 1/(2-2g) * sum of residue_at_point over all parameters. Throws
/// DegenerateGeometryError if two residue points coincide.
Rational fg_residue(int g, const StripGeometry &geom);

/// Res_{q->1} log(q) dq Li_{2-2g}(q) / (a q - 1), by local expansion.
/// Throws UnsupportedError for a = 1 (use residue_lemma_log_at_one).
Rational residue_lemma_linear(const Rational &a, int g);

/// Res_{q->1} log(q) dq Li_{2-2g}(q) / (q - 1).
Rational residue_lemma_log_at_one(int g);

/// Res_{mu->0} mu dmu Li_{1-2g1}(e^mu) Li_{1-2g2}(e^mu), from the mu-expansion
/// blocks.
Rational residue_quadratic_diag(int g1, int g2);

/// Res_{mu->0} mu dmu Li_{1-2g1}(e^mu) Li_{1-2g2}(a e^mu); the second factor
/// is regular at mu = 0 and expanded by composing with e^mu.
Rational residue_quadratic_mixed(const Rational &a, int g1, int g2);

} // namespace striptr
