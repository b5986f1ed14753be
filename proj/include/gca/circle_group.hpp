#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gca/coadjoint.hpp"
#include "gca/rational.hpp"
#include "gca/trig_poly.hpp"

namespace gca {

struct NotADiffeomorphism : std::runtime_error {
    NotADiffeomorphism(double theta_witness, double derivative)
        : std::runtime_error("map is not orientation-preserving: derivative " +
                             std::to_string(derivative) + " at theta = " +
                             std::to_string(theta_witness)),
          theta(theta_witness) {}
    double theta;
};

// Double-precision trig polynomial; the numeric carrier for group-level
// computations. Coefficients come from exact TrigPoly inputs, operations
// stay coefficientwise.
struct RealTrig {
    double c0 = 0.0;
    std::vector<double> cs, sn;

    static RealTrig from(const TrigPoly& p);
    static RealTrig constant(double v);

    double eval(double theta) const;
    RealTrig derivative() const;
    RealTrig scaled(double s) const;
    RealTrig operator+(const RealTrig& rhs) const;
    // Argument shift theta -> theta + c.
    RealTrig shifted(double c) const;
    bool is_constant(double tol = 0.0) const;
    int degree() const { return static_cast<int>(std::max(cs.size(), sn.size())); }
};

// Samples of a function at N equispaced circle points, N a power of two.
struct GridFunction {
    explicit GridFunction(std::size_t n);
    GridFunction(std::size_t n, std::function<double(double)> f);

    std::size_t size() const { return samples.size(); }
    double theta(std::size_t k) const;

    std::vector<double> samples;
};

double max_abs(const GridFunction& g);
double max_abs_diff(const GridFunction& a, const GridFunction& b);

// Value plus first derivative, both as closures.
struct SmoothFn {
    std::function<double(double)> f;
    std::function<double(double)> df;

    static SmoothFn from(const RealTrig& p);
    static SmoothFn from(const TrigPoly& p) { return from(RealTrig::from(p)); }
    static SmoothFn zero();
};

// Circle diffeomorphism as value plus three derivatives.
struct DiffeoFn {
    std::function<double(double)> f, d1, d2, d3;

    // phi(theta) = theta + p(theta)
    static DiffeoFn from_displacement(const RealTrig& p);
    static DiffeoFn identity();
    static DiffeoFn compose(const DiffeoFn& outer, const DiffeoFn& inner);
};

double schwarzian_at(const DiffeoFn& phi, double theta);

// Schwarzian of phi = theta + p on the grid. Throws NotADiffeomorphism
// with a witness point when phi' <= 0 somewhere on the grid.
GridFunction schwarzian(const TrigPoly& p, std::size_t n);

// Group element (phi, xi, eta1, eta2) with phi = theta + p. Orientation is
// checked on the grid at construction.
struct GroupElement {
    TrigPoly p;
    TrigPoly xi, eta1, eta2;

    static GroupElement internal(TrigPoly xi, TrigPoly eta1, TrigPoly eta2);
    static GroupElement diffeo(TrigPoly p, std::size_t check_grid = 1024);
    static GroupElement make(TrigPoly p, TrigPoly xi, TrigPoly eta1, TrigPoly eta2,
                             std::size_t check_grid = 1024);
};

// (xi, eta1, eta2)-subgroup operations. The multiplication law mixes
// eta-components through the right factor's rotation angle, so the right
// factor (and for the inverse, the element itself) must have constant xi;
// anything else is rejected.
struct InternalElement {
    RealTrig xi, eta1, eta2;

    static InternalElement from(const TrigPoly& xi, const TrigPoly& eta1, const TrigPoly& eta2);
    static InternalElement identity();
};

InternalElement internal_mul(const InternalElement& g, const InternalElement& h);
InternalElement internal_inv(const InternalElement& g);

// Conjugation of the internal data by a rotation theta -> theta + c:
// components get their arguments shifted (the rotation has unit
// derivative). General diffeo conjugation is available on the closure
// level via conj_by_diffeo.
InternalElement conj_by_rotation(double c, const InternalElement& g);

struct InternalFns {
    SmoothFn xi, eta1, eta2;
};

// (phi,0,0,0)(id,xi,eta1,eta2) = (phi, xi o phi, (eta1 o phi)/phi',
// (eta2 o phi)/phi'), returned as closures.
InternalFns conj_by_diffeo(const DiffeoFn& phi, const InternalElement& g);

// Closure form of a group element; products of group elements live here.
struct GroupElementFns {
    DiffeoFn phi;
    SmoothFn xi, eta1, eta2;

    static GroupElementFns from(const GroupElement& g);
};

// g * h for closure-form elements; requires h's rotation component to be
// constant (the mixing law is only defined there).
GroupElementFns group_mul(const GroupElementFns& g, const GroupElementFns& h);

// Dual-space element in closure form: gamma0 and gamma3 as values, gamma1
// and gamma2 with first derivatives; central coordinates as doubles.
struct DensityFns {
    std::function<double(double)> g0;
    SmoothFn g1, g2;
    std::function<double(double)> g3;
    double a = 0.0, b = 0.0;

    static DensityFns from(const DensityVector& gamma);
};

// Group coadjoint action in closure form: the diffeo factor acts first
// (densities transform with Schwarzian anomaly on gamma0), then the
// internal factor.
DensityFns coad_group(const GroupElementFns& g, const DensityFns& gamma);

struct GridDensity {
    GridFunction g0, g1, g2, g3;
    Rational a{0}, b{0};
};

GridDensity coad_group(const GroupElement& g, const DensityVector& gamma, std::size_t n);

GridDensity sample_density(const DensityFns& fns, std::size_t n, const Rational& a,
                           const Rational& b);

struct LinearizeReport {
    std::vector<double> eps;
    std::vector<double> deviation;   // max over grid and components, per eps
    std::vector<double> ratios;      // deviation[i+1] / deviation[i]
    double limit_error = 0.0;        // Richardson-extrapolated limit vs exact action
    double noise_floor = 1e-10;
    bool ratios_ok = false;  // each ratio in [0.4, 0.6], or deviation below the floor
    bool limit_ok = false;   // limit_error <= limit_tol
    double limit_tol = 1e-6;
};

// Finite-difference consistency of the group action with the algebra
// action: realizes exp(eps z) to first order (diffeo theta + eps f0,
// internal (eps f3, eps f1, eps f2)), compares [coad_group - id]/eps
// against coad_algebra on the grid for each eps, and Richardson-
// extrapolates the limit. Directions whose group action is exactly linear
// sit at machine noise; the ratio test treats anything under `floor` as
// converged.
LinearizeReport linearize_check(const CurrentElement& z, const DensityVector& gamma,
                                const std::vector<double>& eps, std::size_t n,
                                double limit_tol = 1e-6, double floor = 1e-10);

}  // namespace gca
