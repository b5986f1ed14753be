#include "gca/weight_poly.hpp"

#include <sstream>

namespace gca {

const std::string& weight_symbol_name(WeightSymbol s) {
    static const std::array<std::string, kNumWeightSymbols> names = {
        "h", "mu", "rho1", "rho2", "alpha", "beta"};
    return names[static_cast<unsigned>(s)];
}

WeightPolynomial::WeightPolynomial(const Rational& constant) {
    add_term(WeightExponents{}, constant);
}

WeightPolynomial WeightPolynomial::symbol(WeightSymbol s) {
    WeightPolynomial p;
    WeightExponents e{};
    e[static_cast<unsigned>(s)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

bool WeightPolynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == WeightExponents{});
}

void WeightPolynomial::add_term(const WeightExponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

WeightPolynomial& WeightPolynomial::operator+=(const WeightPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

WeightPolynomial& WeightPolynomial::operator-=(const WeightPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

WeightPolynomial& WeightPolynomial::operator*=(const WeightPolynomial& rhs) {
    WeightPolynomial result;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            WeightExponents e;
            for (std::size_t i = 0; i < kNumWeightSymbols; ++i) e[i] = ea[i] + eb[i];
            result.add_term(e, ca * cb);
        }
    }
    terms_ = std::move(result.terms_);
    return *this;
}

WeightPolynomial& WeightPolynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

Rational WeightPolynomial::eval(const WeightPoint& point) const {
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < kNumWeightSymbols; ++i) {
            if (e[i] != 0) term *= rational_pow(point[i], e[i]);
        }
        sum += term;
    }
    return sum;
}

Rational WeightPolynomial::eval(const std::map<std::string, Rational>& point) const {
    WeightPoint values{};
    std::array<bool, kNumWeightSymbols> assigned{};
    for (std::size_t i = 0; i < kNumWeightSymbols; ++i) {
        auto it = point.find(weight_symbol_name(static_cast<WeightSymbol>(i)));
        if (it != point.end()) {
            values[i] = it->second;
            assigned[i] = true;
        }
    }
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < kNumWeightSymbols; ++i) {
            if (e[i] != 0 && !assigned[i]) {
                throw std::invalid_argument(
                    "weight polynomial: no value assigned to symbol \"" +
                    weight_symbol_name(static_cast<WeightSymbol>(i)) + "\"");
            }
        }
    }
    return eval(values);
}

std::string WeightPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // descending exponent order puts leading terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational coeff = c;
        if (first) {
            if (coeff < 0) {
                out << "-";
                coeff = -coeff;
            }
        } else {
            out << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        bool has_vars = e != WeightExponents{};
        if (!has_vars || coeff != 1) out << to_string(coeff);
        bool need_star = !has_vars ? false : coeff != 1;
        for (std::size_t i = 0; i < kNumWeightSymbols; ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            out << weight_symbol_name(static_cast<WeightSymbol>(i));
            if (e[i] > 1) out << "^" << e[i];
            need_star = true;
        }
        first = false;
    }
    return out.str();
}

}  // namespace gca
