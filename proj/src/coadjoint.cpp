#include "gca/coadjoint.hpp"

#include <stdexcept>

#include "gca/linalg.hpp"

namespace gca {

Rational pairing(const DensityVector& gamma, const CurrentElement& x, int degree_cap) {
    Rational sum(0);
    sum += trig_mul(gamma.gamma0, x.f0, degree_cap).mean();
    sum += trig_mul(gamma.gamma1, x.f1, degree_cap).mean();
    sum += trig_mul(gamma.gamma2, x.f2, degree_cap).mean();
    sum += trig_mul(gamma.gamma3, x.f3, degree_cap).mean();
    sum += gamma.a * x.alpha;
    sum += gamma.b * x.beta;
    return sum;
}

Density density_act(const TrigPoly& f, const Density& d, int degree_cap) {
    Density out;
    out.lambda = d.lambda;
    out.profile = trig_mul(f, d.profile.derivative(), degree_cap) -
                  d.lambda * trig_mul(f.derivative(), d.profile, degree_cap);
    return out;
}

DensityVector coad_algebra(const CurrentElement& x, const DensityVector& gamma, int degree_cap) {
    auto mul = [degree_cap](const TrigPoly& u, const TrigPoly& v) {
        return trig_mul(u, v, degree_cap);
    };

    // The action vector: the central coordinates do not move, so its a, b
    // components are zero (gamma's a, b enter only through the anomaly
    // terms below).
    DensityVector out;
    out.a = Rational(0);
    out.b = Rational(0);

    // L_{f0}
    {
        const TrigPoly d1 = x.f0.derivative();
        const TrigPoly d3 = d1.derivative().derivative();
        out.gamma0 += TrigPoly(gamma.a) * d3 + Rational(2) * mul(gamma.gamma0, d1) +
                      mul(gamma.gamma0.derivative(), x.f0);
        out.gamma1 += Rational(2) * mul(gamma.gamma1, d1) + mul(gamma.gamma1.derivative(), x.f0);
        out.gamma2 += Rational(2) * mul(gamma.gamma2, d1) + mul(gamma.gamma2.derivative(), x.f0);
        out.gamma3 += mul(gamma.gamma3, d1) + mul(gamma.gamma3.derivative(), x.f0);
    }
    // J_{f3}
    {
        const TrigPoly d1 = x.f3.derivative();
        out.gamma0 += mul(gamma.gamma3, d1);
        out.gamma1 += mul(gamma.gamma2, x.f3);
        out.gamma2 -= mul(gamma.gamma1, x.f3);
        out.gamma3 += TrigPoly(gamma.b) * d1;
    }
    // P1_{f1}
    {
        const TrigPoly d1 = x.f1.derivative();
        out.gamma0 += Rational(2) * mul(gamma.gamma1, d1) + mul(gamma.gamma1.derivative(), x.f1);
        out.gamma3 -= mul(gamma.gamma2, x.f1);
    }
    // P2_{f2}
    {
        const TrigPoly d1 = x.f2.derivative();
        out.gamma0 += Rational(2) * mul(gamma.gamma2, d1) + mul(gamma.gamma2.derivative(), x.f2);
        out.gamma3 += mul(gamma.gamma1, x.f2);
    }
    return out;
}

CurrentElement current_bracket(const CurrentElement& x, const CurrentElement& y, int degree_cap) {
    auto mul = [degree_cap](const TrigPoly& u, const TrigPoly& v) {
        return trig_mul(u, v, degree_cap);
    };
    auto wronskian = [&mul](const TrigPoly& f, const TrigPoly& g) {
        return mul(f, g.derivative()) - mul(f.derivative(), g);
    };

    CurrentElement out;
    out.f0 = wronskian(x.f0, y.f0);
    out.f3 = mul(x.f0, y.f3.derivative()) - mul(y.f0, x.f3.derivative());
    out.f1 = wronskian(x.f0, y.f1) - wronskian(y.f0, x.f1) + mul(x.f3, y.f2) - mul(y.f3, x.f2);
    out.f2 = wronskian(x.f0, y.f2) - wronskian(y.f0, x.f2) - mul(x.f3, y.f1) + mul(y.f3, x.f1);
    // Central cocycle values dual to the coadjoint action.
    const TrigPoly f0_3 = x.f0.derivative().derivative().derivative();
    out.alpha = -mul(f0_3, y.f0).mean();
    out.beta = -mul(x.f3.derivative(), y.f3).mean();
    return out;
}

namespace {

// Column layout for one trig polynomial of degree D: constant, then
// cos 1..D, then sin 1..D.
struct TrigColumns {
    std::size_t offset;
    int degree;

    std::size_t count() const { return 1 + 2 * static_cast<std::size_t>(degree); }
    TrigPoly assemble(const RationalVector& solution) const {
        TrigPoly p(solution[offset]);
        for (int k = 1; k <= degree; ++k) {
            const Rational& c = solution[offset + k];
            const Rational& s = solution[offset + degree + k];
            if (c != 0) p.set_cos(k, c);
            if (s != 0) p.set_sin(k, s);
        }
        return p;
    }
    TrigPoly basis_poly(std::size_t column) const {
        const std::size_t local = column - offset;
        if (local == 0) return TrigPoly(Rational(1));
        if (local <= static_cast<std::size_t>(degree)) {
            return TrigPoly::cos_term(static_cast<int>(local));
        }
        return TrigPoly::sin_term(static_cast<int>(local - degree));
    }
};

int max_gamma_degree(const DensityVector& g) {
    return std::max(std::max(g.gamma0.degree(), g.gamma1.degree()),
                    std::max(g.gamma2.degree(), g.gamma3.degree()));
}

// Rows of the linear system at a fixed truncation degree, one row per
// harmonic coefficient of each of the four component equations.
RationalMatrix isotropy_rows(const DensityVector& gamma, int degree, std::size_t* cols_out) {
    const std::array<TrigColumns, 4> layout = {
        TrigColumns{0, degree},
        TrigColumns{1 * (1 + 2 * static_cast<std::size_t>(degree)), degree},
        TrigColumns{2 * (1 + 2 * static_cast<std::size_t>(degree)), degree},
        TrigColumns{3 * (1 + 2 * static_cast<std::size_t>(degree)), degree},
    };
    const std::size_t cols = 4 * layout[0].count();
    *cols_out = cols;

    const int out_degree = degree + max_gamma_degree(gamma);
    const std::size_t out_coeffs = 1 + 2 * static_cast<std::size_t>(out_degree);
    // 4 component equations, each with out_coeffs harmonic coefficients.
    RationalMatrix rows(4 * out_coeffs, RationalVector(cols, Rational(0)));

    const int cap = 2 * (degree + max_gamma_degree(gamma)) + 8;
    for (std::size_t col = 0; col < cols; ++col) {
        const std::size_t which = col / layout[0].count();
        CurrentElement unit;
        const TrigPoly basis = layout[which].basis_poly(col);
        // Unknown blocks are the coefficients of (f0, f1, f2, f3); the P
        // signs of the isotropy combination L + J - P1 - P2 are baked into
        // the columns here, so the nullspace carries the f's directly.
        switch (which) {
            case 0: unit.f0 = basis; break;
            case 1: unit.f1 = -basis; break;
            case 2: unit.f2 = -basis; break;
            case 3: unit.f3 = basis; break;
        }
        const DensityVector image = coad_algebra(unit, DensityVector{gamma.gamma0, gamma.gamma1,
                                                                     gamma.gamma2, gamma.gamma3,
                                                                     gamma.a, gamma.b},
                                                 cap);
        const std::array<const TrigPoly*, 4> components = {&image.gamma0, &image.gamma1,
                                                           &image.gamma2, &image.gamma3};
        for (std::size_t comp = 0; comp < 4; ++comp) {
            const TrigPoly& poly = *components[comp];
            if (poly.degree() > out_degree) {
                throw std::logic_error("isotropy system: harmonic overflow");
            }
            const std::size_t base = comp * out_coeffs;
            rows[base][col] = poly.constant();
            for (int k = 1; k <= out_degree; ++k) {
                rows[base + k][col] = poly.cos_coeff(k);
                rows[base + out_degree + k][col] = poly.sin_coeff(k);
            }
        }
    }
    return rows;
}

std::vector<CurrentElement> assemble_basis(const DensityVector& gamma, int degree,
                                           const std::vector<RationalVector>& kernel) {
    const std::size_t block = 1 + 2 * static_cast<std::size_t>(degree);
    std::vector<CurrentElement> basis;
    (void)gamma;
    for (const auto& v : kernel) {
        CurrentElement x;
        x.f0 = TrigColumns{0, degree}.assemble(v);
        x.f1 = TrigColumns{block, degree}.assemble(v);
        x.f2 = TrigColumns{2 * block, degree}.assemble(v);
        x.f3 = TrigColumns{3 * block, degree}.assemble(v);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace

IsotropyReport isotropy_solve(const DensityVector& gamma, int degree) {
    if (degree < max_gamma_degree(gamma) + 2) {
        throw std::invalid_argument("isotropy_solve: degree must be >= deg(gamma) + 2");
    }

    IsotropyReport report;
    report.degree = degree;

    std::size_t cols = 0;
    RationalMatrix rows = isotropy_rows(gamma, degree, &cols);
    std::vector<RationalVector> kernel = nullspace(std::move(rows), cols);
    report.dimension = kernel.size();
    report.basis = assemble_basis(gamma, degree, kernel);

    std::size_t cols_next = 0;
    RationalMatrix rows_next = isotropy_rows(gamma, degree + 1, &cols_next);
    report.dimension_next = nullspace(std::move(rows_next), cols_next).size();
    report.truncation_unstable = report.dimension_next != report.dimension;
    return report;
}

}  // namespace gca
