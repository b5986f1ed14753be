#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>

#include "gca/rational.hpp"

namespace gca {

// The six highest-weight symbols, in the fixed order used everywhere:
// h, mu, rho1, rho2, alpha, beta.
inline constexpr std::size_t kNumWeightSymbols = 6;

enum class WeightSymbol : unsigned { h = 0, mu, rho1, rho2, alpha, beta };

const std::string& weight_symbol_name(WeightSymbol s);

// Exponent vector of a monomial in the six weight symbols.
using WeightExponents = std::array<unsigned, kNumWeightSymbols>;

// A point assigning a Rational to every weight symbol.
using WeightPoint = std::array<Rational, kNumWeightSymbols>;

// Multivariate polynomial over the weight symbols with exact rational
// coefficients. Terms with zero coefficient are never stored.
class WeightPolynomial {
  public:
    WeightPolynomial() = default;
    WeightPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
    WeightPolynomial(long constant) : WeightPolynomial(Rational(constant)) {}

    static WeightPolynomial symbol(WeightSymbol s);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<WeightExponents, Rational>& terms() const { return terms_; }

    void add_term(const WeightExponents& e, const Rational& c);

    WeightPolynomial& operator+=(const WeightPolynomial& rhs);
    WeightPolynomial& operator-=(const WeightPolynomial& rhs);
    WeightPolynomial& operator*=(const WeightPolynomial& rhs);
    WeightPolynomial& operator*=(const Rational& scalar);

    friend WeightPolynomial operator+(WeightPolynomial a, const WeightPolynomial& b) {
        a += b;
        return a;
    }
    friend WeightPolynomial operator-(WeightPolynomial a, const WeightPolynomial& b) {
        a -= b;
        return a;
    }
    friend WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b) {
        WeightPolynomial r = a;
        r *= b;
        return r;
    }
    friend WeightPolynomial operator*(WeightPolynomial a, const Rational& s) {
        a *= s;
        return a;
    }
    friend WeightPolynomial operator-(const WeightPolynomial& a) {
        WeightPolynomial r = a;
        r *= Rational(-1);
        return r;
    }

    bool operator==(const WeightPolynomial& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const WeightPolynomial& rhs) const { return !(*this == rhs); }

    // Exact evaluation; every symbol has a value, so this cannot fail.
    Rational eval(const WeightPoint& point) const;

    // Evaluation from a (name -> value) map. Throws std::invalid_argument
    // naming the first symbol that occurs in the polynomial but has no
    // assignment.
    Rational eval(const std::map<std::string, Rational>& point) const;

    // Canonical rendering, e.g. "4*h + 1/2*alpha" or "0".
    std::string str() const;

  private:
    std::map<WeightExponents, Rational> terms_;
};

}  // namespace gca
