#include "gca/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace gca {

std::string GenLabel::str() const {
    switch (family) {
        case Family::L: return "L[" + std::to_string(mode) + "]";
        case Family::J: return "J[" + std::to_string(mode) + "]";
        case Family::P1: return "P1[" + std::to_string(mode) + "]";
        case Family::P2: return "P2[" + std::to_string(mode) + "]";
        case Family::Ca: return "Ca";
        case Family::Cb: return "Cb";
    }
    return "?";
}

GenLabel GenLabel::parse(const std::string& text) {
    if (text == "Ca") return Ca();
    if (text == "Cb") return Cb();
    auto open = text.find('[');
    auto close = text.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close < open) {
        throw std::invalid_argument("generator label: cannot parse \"" + text + "\"");
    }
    const std::string fam = text.substr(0, open);
    const int mode = std::stoi(text.substr(open + 1, close - open - 1));
    if (fam == "L") return L(mode);
    if (fam == "J") return J(mode);
    if (fam == "P1") return P1(mode);
    if (fam == "P2") return P2(mode);
    throw std::invalid_argument("generator label: unknown family in \"" + text + "\"");
}

Rational AlgebraElement::coeff(const GenLabel& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add(const GenLabel& g, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
    for (const auto& [g, c] : rhs.terms_) add(g, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
    for (const auto& [g, c] : rhs.terms_) add(g, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, c] : terms_) c *= scalar;
    return *this;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        if (!first) out << " + ";
        if (c != 1) out << to_string(c) << "*";
        out << g.str();
        first = false;
    }
    return out.str();
}

AlgebraElement bracket(const GenLabel& x, const GenLabel& y, bool centerless) {
    AlgebraElement out;
    if (x.central() || y.central()) return out;
    const int m = x.mode, n = y.mode;
    const Family a = x.family, b = y.family;

    if (a == Family::L && b == Family::L) {
        out.add(L(m + n), Rational(m - n));
        if (!centerless && m + n == 0) {
            // m(m^2-1)/12, exact
            out.add(Ca(), Rational(Integer(m) * (Integer(m) * m - 1), 12));
        }
        return out;
    }
    if (a == Family::L && (b == Family::P1 || b == Family::P2)) {
        out.add({b, m + n}, Rational(m - n));
        return out;
    }
    if ((a == Family::P1 || a == Family::P2) && b == Family::L) {
        out.add({a, m + n}, Rational(-(n - m)));
        return out;
    }
    if (a == Family::L && b == Family::J) {
        out.add(J(m + n), Rational(-n));
        return out;
    }
    if (a == Family::J && b == Family::L) {
        out.add(J(m + n), Rational(m));
        return out;
    }
    if (a == Family::J && b == Family::J) {
        if (!centerless && m + n == 0) out.add(Cb(), Rational(m));
        return out;
    }
    // [J_m, P_n^i] = sum_j eps_ij P_{m+n}^j with eps_12 = -eps_21 = 1
    if (a == Family::J && b == Family::P1) {
        out.add(P2(m + n), Rational(1));
        return out;
    }
    if (a == Family::J && b == Family::P2) {
        out.add(P1(m + n), Rational(-1));
        return out;
    }
    if (a == Family::P1 && b == Family::J) {
        out.add(P2(m + n), Rational(-1));
        return out;
    }
    if (a == Family::P2 && b == Family::J) {
        out.add(P1(m + n), Rational(1));
        return out;
    }
    // [P^i, P^j] = 0
    return out;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y, bool centerless) {
    AlgebraElement out;
    for (const auto& [gx, cx] : x.terms()) {
        for (const auto& [gy, cy] : y.terms()) {
            AlgebraElement term = bracket(gx, gy, centerless);
            term *= cx * cy;
            out += term;
        }
    }
    return out;
}

GenLabel omega(const GenLabel& g) {
    if (g.central()) return g;
    return {g.family, -g.mode};
}

AlgebraElement omega(const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& [g, c] : x.terms()) out.add(omega(g), c);
    return out;
}

}  // namespace gca
