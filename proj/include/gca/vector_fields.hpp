#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gca/algebra.hpp"
#include "gca/rational.hpp"

namespace gca {

// Monomial t^a x1^b x2^c with a any integer, b, c >= 0.
using SpaceTimeMonomial = std::array<int, 3>;

// Finite rational combination of spacetime monomials.
using SpaceTimePoly = std::map<SpaceTimeMonomial, Rational>;

// First-order differential operator realization of a generator:
//   L_m  = -t^{m+1} d_t - (m+1) t^m (x1 d_{x1} + x2 d_{x2})
//   J_m  = -t^m (x1 d_{x2} - x2 d_{x1})
//   P^i_m = -t^{m+1} d_{xi}
// Central labels act as zero.
SpaceTimePoly vf_apply(const GenLabel& g, const SpaceTimeMonomial& mono);
SpaceTimePoly vf_apply(const GenLabel& g, const SpaceTimePoly& p);
SpaceTimePoly vf_apply(const AlgebraElement& x, const SpaceTimePoly& p);

struct VfFailure {
    GenLabel x, y;
    SpaceTimeMonomial monomial;
    std::string detail;
};

struct VfReport {
    int window = 0;
    std::size_t pairs_checked = 0;
    std::size_t monomials_per_pair = 0;
    bool pass = false;
    std::optional<VfFailure> first_failure;
};

// Checks [vf(X), vf(Y)] = vf([X, Y]) with the centerless bracket for every
// generator pair with |mode| <= window, on a spanning set of monomials
// (a in [-3, 3], b, c in [0, 3]); the commutator coefficients are
// polynomial of low degree in (a, b, c), so equality on this grid is
// equality everywhere.
VfReport vf_realize_check(int window);

}  // namespace gca
