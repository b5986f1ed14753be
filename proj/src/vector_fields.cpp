#include "gca/vector_fields.hpp"

#include <stdexcept>

namespace gca {

namespace {

void accumulate(SpaceTimePoly& p, const SpaceTimeMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = p.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

}  // namespace

SpaceTimePoly vf_apply(const GenLabel& g, const SpaceTimeMonomial& mono) {
    SpaceTimePoly out;
    const int a = mono[0], b = mono[1], c = mono[2];
    const int m = g.mode;
    switch (g.family) {
        case Family::L:
            // -t^{m+1} d_t - (m+1) t^m x_i d_{x_i}
            accumulate(out, {a + m, b, c}, Rational(-(a + (m + 1) * (b + c))));
            break;
        case Family::J:
            // -t^m (x1 d_{x2} - x2 d_{x1})
            if (c > 0) accumulate(out, {a + m, b + 1, c - 1}, Rational(-c));
            if (b > 0) accumulate(out, {a + m, b - 1, c + 1}, Rational(b));
            break;
        case Family::P1:
            if (b > 0) accumulate(out, {a + m + 1, b - 1, c}, Rational(-b));
            break;
        case Family::P2:
            if (c > 0) accumulate(out, {a + m + 1, b, c - 1}, Rational(-c));
            break;
        case Family::Ca:
        case Family::Cb:
            break;
    }
    return out;
}

SpaceTimePoly vf_apply(const GenLabel& g, const SpaceTimePoly& p) {
    SpaceTimePoly out;
    for (const auto& [mono, coeff] : p) {
        for (const auto& [m2, c2] : vf_apply(g, mono)) accumulate(out, m2, coeff * c2);
    }
    return out;
}

SpaceTimePoly vf_apply(const AlgebraElement& x, const SpaceTimePoly& p) {
    SpaceTimePoly out;
    for (const auto& [g, c] : x.terms()) {
        if (g.central()) continue;
        for (const auto& [mono, coeff] : p) {
            for (const auto& [m2, c2] : vf_apply(g, mono)) accumulate(out, m2, c * coeff * c2);
        }
    }
    return out;
}

VfReport vf_realize_check(int window) {
    if (window < 1) throw std::invalid_argument("vf_realize_check: window must be >= 1");

    std::vector<GenLabel> gens;
    for (Family f : {Family::L, Family::J, Family::P1, Family::P2}) {
        for (int m = -window; m <= window; ++m) gens.push_back({f, m});
    }

    std::vector<SpaceTimeMonomial> probes;
    for (int a = -3; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            for (int c = 0; c <= 3; ++c) probes.push_back({a, b, c});
        }
    }

    VfReport report;
    report.window = window;
    report.monomials_per_pair = probes.size();
    report.pass = true;

    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i; j < gens.size(); ++j) {
            const GenLabel x = gens[i], y = gens[j];
            const AlgebraElement xy = bracket(x, y, /*centerless=*/true);
            ++report.pairs_checked;
            for (const auto& mono : probes) {
                SpaceTimePoly base;
                accumulate(base, mono, Rational(1));
                SpaceTimePoly lhs = vf_apply(x, vf_apply(y, base));
                const SpaceTimePoly yx = vf_apply(y, vf_apply(x, base));
                for (const auto& [m2, c2] : yx) accumulate(lhs, m2, -c2);
                const SpaceTimePoly rhs = vf_apply(xy, base);
                if (lhs != rhs) {
                    report.pass = false;
                    if (!report.first_failure) {
                        report.first_failure = VfFailure{
                            x, y, mono,
                            "commutator mismatch on monomial (" + std::to_string(mono[0]) + "," +
                                std::to_string(mono[1]) + "," + std::to_string(mono[2]) + ")"};
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace gca
