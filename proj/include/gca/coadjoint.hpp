#pragma once

#include <string>
#include <vector>

#include "gca/rational.hpp"
#include "gca/trig_poly.hpp"

namespace gca {

// Element of the regular dual: three quadratic densities, one linear
// density and the two central coordinates.
struct DensityVector {
    TrigPoly gamma0, gamma1, gamma2, gamma3;
    Rational a{0}, b{0};

    bool operator==(const DensityVector&) const = default;
};

// Current-algebra element (f0, f1, f2, f3, alpha, beta): L-, P1-, P2- and
// J-components plus the two central coordinates.
struct CurrentElement {
    TrigPoly f0, f1, f2, f3;
    Rational alpha{0}, beta{0};

    bool operator==(const CurrentElement&) const = default;
};

// Density phi(theta) dtheta^{-lambda}.
struct Density {
    Rational lambda;
    TrigPoly profile;
};

// <gamma, X> = sum_i mean(gamma_i f_i) + a alpha + b beta, with the circle
// measure normalized to total mass one.
Rational pairing(const DensityVector& gamma, const CurrentElement& x,
                 int degree_cap = kDefaultTrigDegreeCap);

// L_f on F_lambda: profile -> f phi' - lambda f' phi.
Density density_act(const TrigPoly& f, const Density& d, int degree_cap = kDefaultTrigDegreeCap);

// Coadjoint action of the current algebra on the regular dual; additive in
// the four current components, trivial on (a, b).
DensityVector coad_algebra(const CurrentElement& x, const DensityVector& gamma,
                           int degree_cap = kDefaultTrigDegreeCap);

// Current-algebra bracket. The central components of the result hold the
// cocycle values -mean(f0_x''' f0_y) and -mean(f3_x' f3_y), which is the
// extension the coadjoint action above is dual to.
CurrentElement current_bracket(const CurrentElement& x, const CurrentElement& y,
                               int degree_cap = kDefaultTrigDegreeCap);

struct IsotropyReport {
    int degree = 0;
    std::size_t dimension = 0;
    std::vector<CurrentElement> basis;
    // Set when the nullspace dimension changes between `degree` and
    // `degree + 1`, i.e. the truncation did not stabilize.
    bool truncation_unstable = false;
    std::size_t dimension_next = 0;
};

// Exact nullspace of (L_{f0} + J_{f3} - P1_{f1} - P2_{f2})(gamma) = 0 over
// trig polynomials of harmonic degree <= degree. Requires
// degree >= deg(gamma) + 2.
IsotropyReport isotropy_solve(const DensityVector& gamma, int degree);

}  // namespace gca
