#pragma once

#include <string>
#include <vector>

#include "striptr/strip/geometry.hpp"

namespace testgeom {

using striptr::KahlerMap;
using striptr::Monomial;
using striptr::Rational;
using striptr::StripGeometry;

inline StripGeometry labelled(std::vector<Rational> alphas, std::vector<Rational> betas, long framing,
                              const std::vector<std::string> &alpha_labels,
                              const std::vector<std::string> &beta_labels,
                              const std::vector<std::string> &variables)
{
    KahlerMap k;
    k.variables = variables;
    for (const auto &s : alpha_labels) {
        k.alpha_labels.push_back(Monomial::parse(s));
    }
    for (const auto &s : beta_labels) {
        k.beta_labels.push_back(Monomial::parse(s));
    }
    return StripGeometry(std::move(alphas), std::move(betas), framing, k);
}

inline StripGeometry c3() { return labelled({}, {}, 1, {}, {}, {}); }
inline StripGeometry conifold() { return labelled({Rational(1, 2)}, {}, 0, {"Q"}, {}, {"Q"}); }
inline StripGeometry one_beta() { return labelled({}, {Rational(1, 2)}, 0, {}, {"Q"}, {"Q"}); }
inline StripGeometry spp()
{
    return labelled({Rational(2), Rational(1, 3)}, {}, 0, {"Q^-1", "mu"}, {}, {"Q", "mu"});
}
inline StripGeometry six_punctured()
{
    return labelled({Rational(1, 2), Rational(1, 5)}, {Rational(1, 3)}, 0, {"Q1", "Q1*Q2*Q3"}, {"Q1*Q2"},
                    {"Q1", "Q2", "Q3"});
}
inline StripGeometry c3_z3()
{
    return labelled({}, {Rational(1, 2), Rational(1, 3)}, 0, {}, {"Q1", "Q1*Q2"}, {"Q1", "Q2"});
}

struct Named {
    std::string name;
    StripGeometry geom;
};

/// The five geometries of the route-equality and product checks.
inline std::vector<Named> standard_five()
{
    return {{"C3", c3()},
            {"conifold", conifold()},
            {"one-beta", one_beta()},
            {"SPP", spp()},
            {"six-punctured sphere", six_punctured()}};
}

} // namespace testgeom
