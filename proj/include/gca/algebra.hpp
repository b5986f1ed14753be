#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "gca/rational.hpp"

namespace gca {

// Generator families of the centrally extended algebra. The order below is
// the canonical family order used for monomial sorting. Ca and Cb are the
// two central charge labels; their weights enter only on highest-weight
// evaluation.
enum class Family : std::uint8_t { L = 0, J, P1, P2, Ca, Cb };

inline bool is_central(Family f) { return f == Family::Ca || f == Family::Cb; }

struct GenLabel {
    Family family;
    int mode;  // always 0 for central labels

    auto operator<=>(const GenLabel&) const = default;

    bool central() const { return is_central(family); }

    // deg(X_n) = -n; central labels have degree 0.
    int degree() const { return central() ? 0 : -mode; }

    // "L[-3]", "J[2]", "P1[0]", "P2[5]", "Ca", "Cb"
    std::string str() const;
    static GenLabel parse(const std::string& text);
};

inline GenLabel L(int m) { return {Family::L, m}; }
inline GenLabel J(int m) { return {Family::J, m}; }
inline GenLabel P1(int m) { return {Family::P1, m}; }
inline GenLabel P2(int m) { return {Family::P2, m}; }
inline GenLabel Ca() { return {Family::Ca, 0}; }
inline GenLabel Cb() { return {Family::Cb, 0}; }

// Finite rational linear combination of generator labels. Zero
// coefficients are never stored.
class AlgebraElement {
  public:
    AlgebraElement() = default;
    AlgebraElement(const GenLabel& g) { add(g, Rational(1)); }  // NOLINT

    const std::map<GenLabel, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const GenLabel& g) const;

    void add(const GenLabel& g, const Rational& c);

    AlgebraElement& operator+=(const AlgebraElement& rhs);
    AlgebraElement& operator-=(const AlgebraElement& rhs);
    AlgebraElement& operator*=(const Rational& scalar);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
        a += b;
        return a;
    }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
        a -= b;
        return a;
    }
    friend AlgebraElement operator*(AlgebraElement a, const Rational& s) {
        a *= s;
        return a;
    }
    friend AlgebraElement operator*(const Rational& s, AlgebraElement a) {
        a *= s;
        return a;
    }
    friend AlgebraElement operator-(AlgebraElement a) {
        a *= Rational(-1);
        return a;
    }

    bool operator==(const AlgebraElement&) const = default;

    std::string str() const;

  private:
    std::map<GenLabel, Rational> terms_;
};

// Structure constants of the centrally extended bracket. The Virasoro
// cocycle enters as (m(m^2-1)/12) Ca on [L_m, L_-m]; the rotation cocycle
// as m Cb on [J_m, J_-m]. When `centerless` is set, central terms are
// dropped (and central labels still commute with everything).
AlgebraElement bracket(const GenLabel& x, const GenLabel& y, bool centerless = false);
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y, bool centerless = false);

// The degree-reversing anti-automorphism: X_m -> X_{-m}, central labels
// fixed, extended linearly.
GenLabel omega(const GenLabel& g);
AlgebraElement omega(const AlgebraElement& x);

}  // namespace gca
