#include <doctest.h>

#include <cmath>
#include <random>

#include "gca/circle_group.hpp"

using namespace gca;

namespace {

constexpr double kPi = 3.14159265358979323846;

TrigPoly small_perturbation(std::mt19937_64& rng, int degree, long denom) {
    TrigPoly p;
    for (int k = 1; k <= degree; ++k) {
        p.set_cos(k, Rational(static_cast<long>(rng() % 5) - 2, denom * k));
        p.set_sin(k, Rational(static_cast<long>(rng() % 5) - 2, denom * k));
    }
    return p;
}

DensityVector sample_gamma() {
    DensityVector g;
    g.gamma0 = TrigPoly::cos_term(1, Rational(1, 2)) + TrigPoly(1);
    g.gamma1 = TrigPoly::sin_term(1, Rational(1, 3)) + TrigPoly(2);
    g.gamma2 = TrigPoly::cos_term(2, Rational(1, 4)) + TrigPoly(1);
    g.gamma3 = TrigPoly::sin_term(2, Rational(1, 5));
    g.a = Rational(1, 2);
    g.b = Rational(2, 3);
    return g;
}

}  // namespace

TEST_CASE("schwarzian of a rotation vanishes") {
    const GridFunction theta0 = schwarzian(TrigPoly(Rational(7, 5)), 256);
    CHECK(max_abs(theta0) <= 1e-12);
}

TEST_CASE("schwarzian of a small perturbation matches its first order") {
    // phi = theta + eps sin(theta): Theta(phi) = -eps cos(theta) + O(eps^2)
    const double eps = 1e-3;
    const TrigPoly p = TrigPoly::sin_term(1, Rational(1, 1000));
    const GridFunction s = schwarzian(p, 512);
    double worst = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        worst = std::max(worst, std::abs(s.samples[k] + eps * std::cos(s.theta(k))));
    }
    CHECK(worst <= 1e-5);
}

TEST_CASE("schwarzian rejects non-diffeomorphisms with a witness") {
    try {
        schwarzian(TrigPoly::sin_term(1, Rational(2)), 128);
        FAIL("expected NotADiffeomorphism");
    } catch (const NotADiffeomorphism& e) {
        CHECK(std::string(e.what()).find("theta") != std::string::npos);
    }
}

TEST_CASE("schwarzian cocycle identity under composition") {
    std::mt19937_64 rng(90210);
    const std::size_t n = 1024;
    for (int trial = 0; trial < 5; ++trial) {
        // ||p'||_inf <= ~0.3 by construction
        const DiffeoFn phi =
            DiffeoFn::from_displacement(RealTrig::from(small_perturbation(rng, 3, 25)));
        const DiffeoFn psi =
            DiffeoFn::from_displacement(RealTrig::from(small_perturbation(rng, 3, 25)));
        const DiffeoFn comp = DiffeoFn::compose(phi, psi);
        double worst = 0.0;
        GridFunction probe(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double t = probe.theta(k);
            const double lhs = schwarzian_at(comp, t);
            const double d1 = psi.d1(t);
            const double rhs = schwarzian_at(phi, psi.f(t)) * d1 * d1 + schwarzian_at(psi, t);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("internal subgroup multiplication and inverse") {
    const auto g = InternalElement::from(TrigPoly(Rational(2, 3)),
                                         TrigPoly::cos_term(1) + TrigPoly(1),
                                         TrigPoly::sin_term(2, Rational(1, 2)));

    SUBCASE("g g^{-1} is the identity") {
        const InternalElement prod = internal_mul(g, internal_inv(g));
        GridFunction probe(64);
        for (std::size_t k = 0; k < probe.size(); ++k) {
            const double t = probe.theta(k);
            CHECK(std::abs(prod.xi.eval(t)) <= 1e-15);
            CHECK(std::abs(prod.eta1.eval(t)) <= 1e-15);
            CHECK(std::abs(prod.eta2.eval(t)) <= 1e-15);
        }
    }
    SUBCASE("pure rotations add") {
        const auto r1 = InternalElement::from(TrigPoly(Rational(1, 4)), TrigPoly(), TrigPoly());
        const auto r2 = InternalElement::from(TrigPoly(Rational(1, 3)), TrigPoly(), TrigPoly());
        const InternalElement prod = internal_mul(r1, r2);
        CHECK(prod.xi.is_constant());
        CHECK(prod.xi.c0 == doctest::Approx(1.0 / 4 + 1.0 / 3).epsilon(1e-15));
        CHECK(prod.eta1.is_constant(1e-18));
        CHECK(prod.eta2.is_constant(1e-18));
    }
    SUBCASE("non-constant rotation on the right is rejected") {
        const auto bad = InternalElement::from(TrigPoly::cos_term(1), TrigPoly(), TrigPoly());
        CHECK_THROWS_AS(internal_mul(g, bad), std::invalid_argument);
        CHECK_THROWS_AS(internal_inv(bad), std::invalid_argument);
    }
}

TEST_CASE("conjugation by a rotation shifts arguments") {
    const auto g = InternalElement::from(TrigPoly::sin_term(1), TrigPoly::cos_term(2),
                                         TrigPoly(Rational(1, 2)));
    const double c = 0.7;
    const InternalElement moved = conj_by_rotation(c, g);
    for (double t : {0.0, 1.1, 2.9, 4.4}) {
        CHECK(moved.xi.eval(t) == doctest::Approx(g.xi.eval(t + c)).epsilon(1e-14));
        CHECK(moved.eta1.eval(t) == doctest::Approx(g.eta1.eval(t + c)).epsilon(1e-14));
    }

    // General diffeo conjugation at phi = theta + c agrees.
    const DiffeoFn rot = DiffeoFn::from_displacement(RealTrig::constant(c));
    const InternalFns fns = conj_by_diffeo(rot, g);
    for (double t : {0.5, 1.7, 3.3}) {
        CHECK(fns.xi.f(t) == doctest::Approx(g.xi.eval(t + c)).epsilon(1e-14));
        CHECK(fns.eta1.f(t) == doctest::Approx(g.eta1.eval(t + c)).epsilon(1e-14));
        CHECK(fns.eta2.f(t) == doctest::Approx(g.eta2.eval(t + c)).epsilon(1e-14));
    }
}

TEST_CASE("group coadjoint action basics") {
    const DensityVector gamma = sample_gamma();
    const std::size_t n = 256;

    SUBCASE("identity fixes gamma") {
        const GroupElement id = GroupElement::make(TrigPoly(), TrigPoly(), TrigPoly(), TrigPoly());
        const GridDensity moved = coad_group(id, gamma, n);
        const GridDensity base = sample_density(DensityFns::from(gamma), n, gamma.a, gamma.b);
        CHECK(max_abs_diff(moved.g0, base.g0) <= 1e-14);
        CHECK(max_abs_diff(moved.g1, base.g1) <= 1e-14);
        CHECK(max_abs_diff(moved.g2, base.g2) <= 1e-14);
        CHECK(max_abs_diff(moved.g3, base.g3) <= 1e-14);
        CHECK(moved.a == gamma.a);
        CHECK(moved.b == gamma.b);
    }

    SUBCASE("quarter rotation in the internal SO(2) swaps the P block") {
        GroupElementFns g;
        g.phi = DiffeoFn::identity();
        g.xi = SmoothFn{[](double) { return kPi / 2; }, [](double) { return 0.0; }};
        g.eta1 = SmoothFn::zero();
        g.eta2 = SmoothFn::zero();
        const DensityFns moved = coad_group(g, DensityFns::from(gamma));
        const GridDensity grid = sample_density(moved, n, gamma.a, gamma.b);
        const GridDensity base = sample_density(DensityFns::from(gamma), n, gamma.a, gamma.b);
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(grid.g0.samples[k] == doctest::Approx(base.g0.samples[k]).epsilon(1e-13));
            CHECK(grid.g1.samples[k] == doctest::Approx(base.g2.samples[k]).epsilon(1e-13));
            CHECK(grid.g2.samples[k] == doctest::Approx(-base.g1.samples[k]).epsilon(1e-13));
            CHECK(grid.g3.samples[k] == doctest::Approx(base.g3.samples[k]).epsilon(1e-13));
        }
    }

    SUBCASE("pure diffeo on the vacuum with a = 1 produces the Schwarzian") {
        DensityVector vac;
        vac.a = Rational(1);
        const TrigPoly p = TrigPoly::sin_term(1, Rational(1, 5));
        const GroupElement g = GroupElement::diffeo(p);
        const GridDensity moved = coad_group(g, vac, n);
        const GridFunction theta = schwarzian(p, n);
        CHECK(max_abs_diff(moved.g0, theta) <= 1e-13);
        CHECK(max_abs(moved.g1) <= 1e-15);
        CHECK(max_abs(moved.g3) <= 1e-15);
    }
}

TEST_CASE("group action is compatible with the group law") {
    std::mt19937_64 rng(5150);
    const DensityVector gamma = sample_gamma();
    const std::size_t n = 1024;

    for (int trial = 0; trial < 3; ++trial) {
        GroupElementFns g;
        g.phi = DiffeoFn::from_displacement(RealTrig::from(small_perturbation(rng, 2, 20)));
        g.xi = SmoothFn::from(small_perturbation(rng, 2, 10));
        g.eta1 = SmoothFn::from(small_perturbation(rng, 2, 8));
        g.eta2 = SmoothFn::from(small_perturbation(rng, 2, 8));

        GroupElementFns h;
        h.phi = DiffeoFn::from_displacement(RealTrig::from(small_perturbation(rng, 2, 20)));
        // constant rotation so the mixing law applies
        h.xi = SmoothFn{[](double) { return 0.4; }, [](double) { return 0.0; }};
        h.eta1 = SmoothFn::from(small_perturbation(rng, 2, 8));
        h.eta2 = SmoothFn::from(small_perturbation(rng, 2, 8));

        const DensityFns via_product = coad_group(group_mul(g, h), DensityFns::from(gamma));
        const DensityFns nested = coad_group(g, coad_group(h, DensityFns::from(gamma)));

        const GridDensity a = sample_density(via_product, n, gamma.a, gamma.b);
        const GridDensity b = sample_density(nested, n, gamma.a, gamma.b);
        CHECK(max_abs_diff(a.g0, b.g0) <= 1e-8);
        CHECK(max_abs_diff(a.g1, b.g1) <= 1e-8);
        CHECK(max_abs_diff(a.g2, b.g2) <= 1e-8);
        CHECK(max_abs_diff(a.g3, b.g3) <= 1e-8);
    }
}

// (phi, 0)(id, xi, eta) = (phi, xi o phi, (eta o phi)/phi') as actions:
// pushing gamma through the internal factor and then the diffeo agrees
// with acting by the conjugated internal data after the diffeo.
TEST_CASE("diffeo conjugation of the internal subgroup at the action level") {
    const DensityVector gamma = sample_gamma();
    const std::size_t n = 512;

    const TrigPoly p = TrigPoly::sin_term(1, Rational(1, 6)) + TrigPoly::cos_term(2, Rational(1, 9));
    const auto internal = InternalElement::from(TrigPoly(Rational(2, 5)),
                                                TrigPoly::cos_term(1, Rational(1, 3)),
                                                TrigPoly::sin_term(1, Rational(1, 4)));

    GroupElementFns phi_only;
    phi_only.phi = DiffeoFn::from_displacement(RealTrig::from(p));
    phi_only.xi = SmoothFn::zero();
    phi_only.eta1 = SmoothFn::zero();
    phi_only.eta2 = SmoothFn::zero();

    GroupElementFns int_only;
    int_only.phi = DiffeoFn::identity();
    int_only.xi = SmoothFn::from(internal.xi);
    int_only.eta1 = SmoothFn::from(internal.eta1);
    int_only.eta2 = SmoothFn::from(internal.eta2);

    const DensityFns lhs = coad_group(phi_only, coad_group(int_only, DensityFns::from(gamma)));

    const InternalFns conj = conj_by_diffeo(phi_only.phi, internal);
    GroupElementFns combined;
    combined.phi = phi_only.phi;
    combined.xi = conj.xi;
    combined.eta1 = conj.eta1;
    combined.eta2 = conj.eta2;
    const DensityFns rhs = coad_group(combined, DensityFns::from(gamma));

    const GridDensity a = sample_density(lhs, n, gamma.a, gamma.b);
    const GridDensity b = sample_density(rhs, n, gamma.a, gamma.b);
    CHECK(max_abs_diff(a.g0, b.g0) <= 1e-10);
    CHECK(max_abs_diff(a.g1, b.g1) <= 1e-10);
    CHECK(max_abs_diff(a.g2, b.g2) <= 1e-10);
    CHECK(max_abs_diff(a.g3, b.g3) <= 1e-10);
}

TEST_CASE("group_mul rejects a non-constant right rotation") {
    GroupElementFns g = GroupElementFns::from(
        GroupElement::make(TrigPoly(), TrigPoly(), TrigPoly(), TrigPoly()));
    GroupElementFns h = g;
    h.xi = SmoothFn::from(TrigPoly::cos_term(1));
    CHECK_THROWS_AS(group_mul(g, h), std::invalid_argument);
}

TEST_CASE("linearized group action converges to the algebra action") {
    const DensityVector gamma = sample_gamma();
    const std::vector<double> eps = {1e-2, 5e-3, 2.5e-3};
    const std::size_t n = 1024;

    SUBCASE("L direction") {
        CurrentElement z;
        z.f0 = TrigPoly::sin_term(1);
        const LinearizeReport r = linearize_check(z, gamma, eps, n);
        CHECK(r.ratios_ok);
        CHECK(r.limit_ok);
        CHECK(r.deviation.front() > r.noise_floor);  // genuinely quadratic direction
    }
    SUBCASE("J direction") {
        CurrentElement z;
        z.f3 = TrigPoly(1);
        const LinearizeReport r = linearize_check(z, gamma, eps, n);
        CHECK(r.ratios_ok);
        CHECK(r.limit_ok);
    }
    SUBCASE("P1 direction is exactly linear, deviation at machine noise") {
        CurrentElement z;
        z.f1 = TrigPoly::cos_term(1);
        const LinearizeReport r = linearize_check(z, gamma, eps, n);
        CHECK(r.ratios_ok);
        CHECK(r.limit_ok);
        CHECK(r.deviation.back() <= r.noise_floor);
    }
    SUBCASE("P2 direction") {
        CurrentElement z;
        z.f2 = TrigPoly::sin_term(1) + TrigPoly(1);
        const LinearizeReport r = linearize_check(z, gamma, eps, n);
        CHECK(r.ratios_ok);
        CHECK(r.limit_ok);
    }
}
