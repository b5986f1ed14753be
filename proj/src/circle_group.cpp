#include "gca/circle_group.hpp"

#include <cmath>

namespace gca {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

}  // namespace

RealTrig RealTrig::from(const TrigPoly& p) {
    RealTrig out;
    out.c0 = to_double(p.constant());
    const int deg = p.degree();
    out.cs.resize(deg, 0.0);
    out.sn.resize(deg, 0.0);
    for (int k = 1; k <= deg; ++k) {
        out.cs[k - 1] = to_double(p.cos_coeff(k));
        out.sn[k - 1] = to_double(p.sin_coeff(k));
    }
    return out;
}

RealTrig RealTrig::constant(double v) {
    RealTrig out;
    out.c0 = v;
    return out;
}

double RealTrig::eval(double theta) const {
    double v = c0;
    for (std::size_t k = 0; k < cs.size(); ++k) v += cs[k] * std::cos((double)(k + 1) * theta);
    for (std::size_t k = 0; k < sn.size(); ++k) v += sn[k] * std::sin((double)(k + 1) * theta);
    return v;
}

RealTrig RealTrig::derivative() const {
    RealTrig out;
    const std::size_t deg = std::max(cs.size(), sn.size());
    out.cs.resize(deg, 0.0);
    out.sn.resize(deg, 0.0);
    for (std::size_t k = 0; k < cs.size(); ++k) out.sn[k] = -(double)(k + 1) * cs[k];
    for (std::size_t k = 0; k < sn.size(); ++k) out.cs[k] = (double)(k + 1) * sn[k];
    return out;
}

RealTrig RealTrig::scaled(double s) const {
    RealTrig out = *this;
    out.c0 *= s;
    for (auto& v : out.cs) v *= s;
    for (auto& v : out.sn) v *= s;
    return out;
}

RealTrig RealTrig::operator+(const RealTrig& rhs) const {
    RealTrig out = *this;
    out.c0 += rhs.c0;
    if (rhs.cs.size() > out.cs.size()) out.cs.resize(rhs.cs.size(), 0.0);
    if (rhs.sn.size() > out.sn.size()) out.sn.resize(rhs.sn.size(), 0.0);
    for (std::size_t k = 0; k < rhs.cs.size(); ++k) out.cs[k] += rhs.cs[k];
    for (std::size_t k = 0; k < rhs.sn.size(); ++k) out.sn[k] += rhs.sn[k];
    return out;
}

RealTrig RealTrig::shifted(double c) const {
    // cos k(t+c) = cos kc cos kt - sin kc sin kt
    // sin k(t+c) = cos kc sin kt + sin kc cos kt
    RealTrig out;
    out.c0 = c0;
    const std::size_t deg = std::max(cs.size(), sn.size());
    out.cs.resize(deg, 0.0);
    out.sn.resize(deg, 0.0);
    for (std::size_t i = 0; i < deg; ++i) {
        const double k = (double)(i + 1);
        const double a = i < cs.size() ? cs[i] : 0.0;
        const double b = i < sn.size() ? sn[i] : 0.0;
        const double ck = std::cos(k * c), sk = std::sin(k * c);
        out.cs[i] = a * ck + b * sk;
        out.sn[i] = -a * sk + b * ck;
    }
    return out;
}

bool RealTrig::is_constant(double tol) const {
    for (double v : cs) {
        if (std::abs(v) > tol) return false;
    }
    for (double v : sn) {
        if (std::abs(v) > tol) return false;
    }
    return true;
}

GridFunction::GridFunction(std::size_t n) : samples(n, 0.0) {
    if (!power_of_two(n)) throw std::invalid_argument("grid size must be a power of two");
}

GridFunction::GridFunction(std::size_t n, std::function<double(double)> f) : GridFunction(n) {
    for (std::size_t k = 0; k < n; ++k) samples[k] = f(theta(k));
}

double GridFunction::theta(std::size_t k) const {
    return kTwoPi * (double)k / (double)samples.size();
}

double max_abs(const GridFunction& g) {
    double m = 0.0;
    for (double v : g.samples) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_diff(const GridFunction& a, const GridFunction& b) {
    if (a.size() != b.size()) throw std::invalid_argument("grid size mismatch");
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        m = std::max(m, std::abs(a.samples[k] - b.samples[k]));
    }
    return m;
}

SmoothFn SmoothFn::from(const RealTrig& p) {
    const RealTrig d = p.derivative();
    return {[p](double t) { return p.eval(t); }, [d](double t) { return d.eval(t); }};
}

SmoothFn SmoothFn::zero() {
    return {[](double) { return 0.0; }, [](double) { return 0.0; }};
}

DiffeoFn DiffeoFn::from_displacement(const RealTrig& p) {
    const RealTrig p1 = p.derivative();
    const RealTrig p2 = p1.derivative();
    const RealTrig p3 = p2.derivative();
    return {[p](double t) { return t + p.eval(t); },
            [p1](double t) { return 1.0 + p1.eval(t); },
            [p2](double t) { return p2.eval(t); },
            [p3](double t) { return p3.eval(t); }};
}

DiffeoFn DiffeoFn::identity() {
    return {[](double t) { return t; }, [](double) { return 1.0; }, [](double) { return 0.0; },
            [](double) { return 0.0; }};
}

DiffeoFn DiffeoFn::compose(const DiffeoFn& outer, const DiffeoFn& inner) {
    // (f o g)' = (f' o g) g'
    // (f o g)'' = (f'' o g) g'^2 + (f' o g) g''
    // (f o g)''' = (f''' o g) g'^3 + 3 (f'' o g) g' g'' + (f' o g) g'''
    auto f = [outer, inner](double t) { return outer.f(inner.f(t)); };
    auto d1 = [outer, inner](double t) { return outer.d1(inner.f(t)) * inner.d1(t); };
    auto d2 = [outer, inner](double t) {
        const double u = inner.f(t), g1 = inner.d1(t);
        return outer.d2(u) * g1 * g1 + outer.d1(u) * inner.d2(t);
    };
    auto d3 = [outer, inner](double t) {
        const double u = inner.f(t), g1 = inner.d1(t), g2 = inner.d2(t);
        return outer.d3(u) * g1 * g1 * g1 + 3.0 * outer.d2(u) * g1 * g2 +
               outer.d1(u) * inner.d3(t);
    };
    return {f, d1, d2, d3};
}

double schwarzian_at(const DiffeoFn& phi, double theta) {
    const double d1 = phi.d1(theta);
    const double r = phi.d2(theta) / d1;
    return phi.d3(theta) / d1 - 1.5 * r * r;
}

GridFunction schwarzian(const TrigPoly& p, std::size_t n) {
    const DiffeoFn phi = DiffeoFn::from_displacement(RealTrig::from(p));
    GridFunction probe(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = probe.theta(k);
        const double d1 = phi.d1(t);
        if (d1 <= 0.0) throw NotADiffeomorphism(t, d1);
    }
    GridFunction out(n);
    for (std::size_t k = 0; k < n; ++k) out.samples[k] = schwarzian_at(phi, out.theta(k));
    return out;
}

GroupElement GroupElement::internal(TrigPoly xi, TrigPoly eta1, TrigPoly eta2) {
    return {TrigPoly(), std::move(xi), std::move(eta1), std::move(eta2)};
}

GroupElement GroupElement::diffeo(TrigPoly p, std::size_t check_grid) {
    return make(std::move(p), TrigPoly(), TrigPoly(), TrigPoly(), check_grid);
}

GroupElement GroupElement::make(TrigPoly p, TrigPoly xi, TrigPoly eta1, TrigPoly eta2,
                                std::size_t check_grid) {
    const DiffeoFn phi = DiffeoFn::from_displacement(RealTrig::from(p));
    GridFunction probe(check_grid);
    for (std::size_t k = 0; k < check_grid; ++k) {
        const double t = probe.theta(k);
        const double d1 = phi.d1(t);
        if (d1 <= 0.0) throw NotADiffeomorphism(t, d1);
    }
    return {std::move(p), std::move(xi), std::move(eta1), std::move(eta2)};
}

InternalElement InternalElement::from(const TrigPoly& xi, const TrigPoly& eta1,
                                      const TrigPoly& eta2) {
    return {RealTrig::from(xi), RealTrig::from(eta1), RealTrig::from(eta2)};
}

InternalElement InternalElement::identity() { return {RealTrig{}, RealTrig{}, RealTrig{}}; }

InternalElement internal_mul(const InternalElement& g, const InternalElement& h) {
    if (!h.xi.is_constant()) {
        throw std::invalid_argument(
            "internal_mul: right factor must have a constant rotation component");
    }
    const double rho = h.xi.c0;
    const double c = std::cos(rho), s = std::sin(rho);
    InternalElement out;
    out.xi = g.xi;
    out.xi.c0 += rho;
    out.eta1 = h.eta1 + g.eta1.scaled(c) + g.eta2.scaled(-s);
    out.eta2 = h.eta2 + g.eta1.scaled(s) + g.eta2.scaled(c);
    return out;
}

InternalElement internal_inv(const InternalElement& g) {
    if (!g.xi.is_constant()) {
        throw std::invalid_argument("internal_inv: rotation component must be constant");
    }
    const double xi = g.xi.c0;
    const double c = std::cos(xi), s = std::sin(xi);
    InternalElement out;
    out.xi = g.xi.scaled(-1.0);
    out.eta1 = g.eta1.scaled(-c) + g.eta2.scaled(-s);
    out.eta2 = g.eta1.scaled(s) + g.eta2.scaled(-c);
    return out;
}

InternalElement conj_by_rotation(double c, const InternalElement& g) {
    return {g.xi.shifted(c), g.eta1.shifted(c), g.eta2.shifted(c)};
}

InternalFns conj_by_diffeo(const DiffeoFn& phi, const InternalElement& g) {
    auto compose_value = [phi](const RealTrig& u) {
        return [phi, u](double t) { return u.eval(phi.f(t)); };
    };
    auto compose_deriv = [phi](const RealTrig& u) {
        const RealTrig du = u.derivative();
        return [phi, du](double t) { return du.eval(phi.f(t)) * phi.d1(t); };
    };
    // (eta o phi) / phi'
    auto quotient = [phi](const RealTrig& u) {
        SmoothFn out;
        const RealTrig du = u.derivative();
        out.f = [phi, u](double t) { return u.eval(phi.f(t)) / phi.d1(t); };
        out.df = [phi, u, du](double t) {
            const double d1 = phi.d1(t);
            return du.eval(phi.f(t)) - u.eval(phi.f(t)) * phi.d2(t) / (d1 * d1);
        };
        return out;
    };
    InternalFns out;
    out.xi = {compose_value(g.xi), compose_deriv(g.xi)};
    out.eta1 = quotient(g.eta1);
    out.eta2 = quotient(g.eta2);
    return out;
}

GroupElementFns GroupElementFns::from(const GroupElement& g) {
    GroupElementFns out;
    out.phi = DiffeoFn::from_displacement(RealTrig::from(g.p));
    out.xi = SmoothFn::from(g.xi);
    out.eta1 = SmoothFn::from(g.eta1);
    out.eta2 = SmoothFn::from(g.eta2);
    return out;
}

GroupElementFns group_mul(const GroupElementFns& g, const GroupElementFns& h) {
    // (id, xi_g, eta_g)(phi_g, 0)(id, xi_h, eta_h)(phi_h, 0)
    //   = (id, xi_g, eta_g)(id, xi_h o phi_g, (eta_h o phi_g)/phi_g')
    //     (phi_g o phi_h, 0).
    // The inner rotation component must be constant for the mixing law.
    const double probe0 = h.xi.f(0.0), probe1 = h.xi.f(1.0), probe2 = h.xi.f(2.5);
    if (std::abs(probe0 - probe1) > 1e-12 || std::abs(probe0 - probe2) > 1e-12) {
        throw std::invalid_argument(
            "group_mul: right factor must have a constant rotation component");
    }
    const double rho = probe0;
    const double c = std::cos(rho), s = std::sin(rho);

    GroupElementFns out;
    // Densities pull back, so the action composes contravariantly and the
    // product's diffeo slot is phi_h o phi_g.
    out.phi = DiffeoFn::compose(h.phi, g.phi);
    auto xi_g = g.xi;
    out.xi = {[xi_g, rho](double t) { return xi_g.f(t) + rho; }, xi_g.df};

    // sigma_k = (eta_{h,k} o phi_g) / phi_g'
    const DiffeoFn phi_g = g.phi;
    auto sigma = [phi_g](const SmoothFn& eta) {
        SmoothFn out_fn;
        out_fn.f = [phi_g, eta](double t) { return eta.f(phi_g.f(t)) / phi_g.d1(t); };
        out_fn.df = [phi_g, eta](double t) {
            const double d1 = phi_g.d1(t);
            return eta.df(phi_g.f(t)) - eta.f(phi_g.f(t)) * phi_g.d2(t) / (d1 * d1);
        };
        return out_fn;
    };
    const SmoothFn s1 = sigma(h.eta1), s2 = sigma(h.eta2);
    const SmoothFn e1 = g.eta1, e2 = g.eta2;
    out.eta1 = {[s1, e1, e2, c, s](double t) { return s1.f(t) + e1.f(t) * c - e2.f(t) * s; },
                [s1, e1, e2, c, s](double t) { return s1.df(t) + e1.df(t) * c - e2.df(t) * s; }};
    out.eta2 = {[s2, e1, e2, c, s](double t) { return s2.f(t) + e1.f(t) * s + e2.f(t) * c; },
                [s2, e1, e2, c, s](double t) { return s2.df(t) + e1.df(t) * s + e2.df(t) * c; }};
    return out;
}

DensityFns DensityFns::from(const DensityVector& gamma) {
    DensityFns out;
    const RealTrig g0 = RealTrig::from(gamma.gamma0);
    const RealTrig g3 = RealTrig::from(gamma.gamma3);
    out.g0 = [g0](double t) { return g0.eval(t); };
    out.g1 = SmoothFn::from(gamma.gamma1);
    out.g2 = SmoothFn::from(gamma.gamma2);
    out.g3 = [g3](double t) { return g3.eval(t); };
    out.a = to_double(gamma.a);
    out.b = to_double(gamma.b);
    return out;
}

DensityFns coad_group(const GroupElementFns& g, const DensityFns& gamma) {
    // Diffeo factor: weight-2 densities pick up (phi')^2, the weight-1
    // density phi', and gamma0 the Schwarzian anomaly a Theta(phi).
    const DiffeoFn phi = g.phi;
    const double a = gamma.a, b = gamma.b;

    auto in_g0 = gamma.g0;
    auto in_g1 = gamma.g1;
    auto in_g2 = gamma.g2;
    auto in_g3 = gamma.g3;

    auto t0 = [phi, in_g0, a](double t) {
        const double d1 = phi.d1(t);
        return a * schwarzian_at(phi, t) + in_g0(phi.f(t)) * d1 * d1;
    };
    auto weight2 = [phi](const SmoothFn& u) {
        SmoothFn out_fn;
        out_fn.f = [phi, u](double t) {
            const double d1 = phi.d1(t);
            return u.f(phi.f(t)) * d1 * d1;
        };
        out_fn.df = [phi, u](double t) {
            const double d1 = phi.d1(t), d2 = phi.d2(t), x = phi.f(t);
            return u.df(x) * d1 * d1 * d1 + 2.0 * u.f(x) * d1 * d2;
        };
        return out_fn;
    };
    const SmoothFn t1 = weight2(in_g1);
    const SmoothFn t2 = weight2(in_g2);
    auto t3 = [phi, in_g3](double t) { return in_g3(phi.f(t)) * phi.d1(t); };

    // Internal factor.
    const SmoothFn xi = g.xi, eta1 = g.eta1, eta2 = g.eta2;
    DensityFns out;
    out.a = a;
    out.b = b;
    out.g0 = [t0, t1, t2, t3, xi, eta1, eta2, b](double t) {
        const double xp = xi.df(t);
        double v = t0(t);
        v += t1.df(t) * eta1.f(t) + 2.0 * t1.f(t) * eta1.df(t);
        v += t2.df(t) * eta2.f(t) + 2.0 * t2.f(t) * eta2.df(t);
        v += (t1.f(t) * eta2.f(t) - t2.f(t) * eta1.f(t) + t3(t)) * xp;
        v += 0.5 * b * xp * xp * xp;
        return v;
    };
    out.g1 = {[t1, t2, xi](double t) {
                  const double x = xi.f(t);
                  return t1.f(t) * std::cos(x) + t2.f(t) * std::sin(x);
              },
              [t1, t2, xi](double t) {
                  const double x = xi.f(t), xp = xi.df(t);
                  const double c = std::cos(x), s = std::sin(x);
                  return t1.df(t) * c + t2.df(t) * s + (-t1.f(t) * s + t2.f(t) * c) * xp;
              }};
    out.g2 = {[t1, t2, xi](double t) {
                  const double x = xi.f(t);
                  return -t1.f(t) * std::sin(x) + t2.f(t) * std::cos(x);
              },
              [t1, t2, xi](double t) {
                  const double x = xi.f(t), xp = xi.df(t);
                  const double c = std::cos(x), s = std::sin(x);
                  return -t1.df(t) * s + t2.df(t) * c + (-t1.f(t) * c - t2.f(t) * s) * xp;
              }};
    out.g3 = [t1, t2, t3, xi, eta1, eta2, b](double t) {
        return t1.f(t) * eta2.f(t) - t2.f(t) * eta1.f(t) + t3(t) + b * xi.df(t);
    };
    return out;
}

GridDensity sample_density(const DensityFns& fns, std::size_t n, const Rational& a,
                           const Rational& b) {
    GridDensity out{GridFunction(n, fns.g0), GridFunction(n, fns.g1.f),
                    GridFunction(n, fns.g2.f), GridFunction(n, fns.g3), a, b};
    return out;
}

GridDensity coad_group(const GroupElement& g, const DensityVector& gamma, std::size_t n) {
    const DensityFns moved = coad_group(GroupElementFns::from(g), DensityFns::from(gamma));
    return sample_density(moved, n, gamma.a, gamma.b);
}

LinearizeReport linearize_check(const CurrentElement& z, const DensityVector& gamma,
                                const std::vector<double>& eps, std::size_t n, double limit_tol,
                                double floor) {
    if (eps.size() < 2) throw std::invalid_argument("linearize_check: need at least two eps");

    LinearizeReport report;
    report.eps = eps;
    report.limit_tol = limit_tol;
    report.noise_floor = floor;

    const DensityVector exact = coad_algebra(z, gamma);
    const GridDensity exact_grid =
        sample_density(DensityFns::from(exact), n, exact.a, exact.b);

    const DensityFns base = DensityFns::from(gamma);
    const RealTrig f0 = RealTrig::from(z.f0);
    const RealTrig f1 = RealTrig::from(z.f1);
    const RealTrig f2 = RealTrig::from(z.f2);
    const RealTrig f3 = RealTrig::from(z.f3);

    std::vector<GridDensity> quotients;
    for (double e : eps) {
        GroupElementFns ge;
        ge.phi = DiffeoFn::from_displacement(f0.scaled(e));
        ge.xi = SmoothFn::from(f3.scaled(e));
        ge.eta1 = SmoothFn::from(f1.scaled(e));
        ge.eta2 = SmoothFn::from(f2.scaled(e));
        const GridDensity moved =
            sample_density(coad_group(ge, base), n, gamma.a, gamma.b);

        GridDensity quotient{GridFunction(n), GridFunction(n), GridFunction(n), GridFunction(n),
                             gamma.a, gamma.b};
        const GridDensity base_grid = sample_density(base, n, gamma.a, gamma.b);
        auto fd = [&](const GridFunction& after, const GridFunction& before, GridFunction& out) {
            for (std::size_t k = 0; k < n; ++k) {
                out.samples[k] = (after.samples[k] - before.samples[k]) / e;
            }
        };
        fd(moved.g0, base_grid.g0, quotient.g0);
        fd(moved.g1, base_grid.g1, quotient.g1);
        fd(moved.g2, base_grid.g2, quotient.g2);
        fd(moved.g3, base_grid.g3, quotient.g3);
        quotients.push_back(std::move(quotient));

        const GridDensity& q = quotients.back();
        double dev = 0.0;
        dev = std::max(dev, max_abs_diff(q.g0, exact_grid.g0));
        dev = std::max(dev, max_abs_diff(q.g1, exact_grid.g1));
        dev = std::max(dev, max_abs_diff(q.g2, exact_grid.g2));
        dev = std::max(dev, max_abs_diff(q.g3, exact_grid.g3));
        report.deviation.push_back(dev);
    }

    report.ratios_ok = true;
    for (std::size_t i = 0; i + 1 < report.deviation.size(); ++i) {
        const double prev = report.deviation[i], next = report.deviation[i + 1];
        const double ratio = prev > 0.0 ? next / prev : 0.0;
        report.ratios.push_back(ratio);
        if (next <= floor) continue;  // converged to machine noise
        if (ratio < 0.4 || ratio > 0.6) report.ratios_ok = false;
    }

    // Second-order Richardson from the last three quotients:
    //   limit = (8 q(e/4) - 6 q(e/2) + q(e)) / 3   for e halving.
    bool halving = quotients.size() >= 3;
    if (halving) {
        const std::size_t last = eps.size() - 1;
        for (std::size_t i = last - 2; i < last; ++i) {
            if (std::abs(eps[i + 1] / eps[i] - 0.5) > 1e-9) halving = false;
        }
    }
    double limit_error = 0.0;
    if (halving) {
        const GridDensity& qa = quotients[quotients.size() - 3];
        const GridDensity& qb = quotients[quotients.size() - 2];
        const GridDensity& qc = quotients[quotients.size() - 1];
        auto extrapolate = [&](const GridFunction& a2, const GridFunction& b2,
                               const GridFunction& c2, const GridFunction& target) {
            double worst = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double v =
                    (8.0 * c2.samples[k] - 6.0 * b2.samples[k] + a2.samples[k]) / 3.0;
                worst = std::max(worst, std::abs(v - target.samples[k]));
            }
            return worst;
        };
        limit_error = std::max(limit_error, extrapolate(qa.g0, qb.g0, qc.g0, exact_grid.g0));
        limit_error = std::max(limit_error, extrapolate(qa.g1, qb.g1, qc.g1, exact_grid.g1));
        limit_error = std::max(limit_error, extrapolate(qa.g2, qb.g2, qc.g2, exact_grid.g2));
        limit_error = std::max(limit_error, extrapolate(qa.g3, qb.g3, qc.g3, exact_grid.g3));
    } else {
        const GridDensity& q = quotients.back();
        limit_error = std::max(
            std::max(max_abs_diff(q.g0, exact_grid.g0), max_abs_diff(q.g1, exact_grid.g1)),
            std::max(max_abs_diff(q.g2, exact_grid.g2), max_abs_diff(q.g3, exact_grid.g3)));
    }
    report.limit_error = limit_error;
    report.limit_ok = limit_error <= limit_tol;
    return report;
}

}  // namespace gca
