#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gca/rational.hpp"

namespace gca {

// Default harmonic-degree cap for products. Exceeding a cap is an error,
// never a silent truncation.
inline constexpr int kDefaultTrigDegreeCap = 64;

struct DegreeCapExceeded : std::runtime_error {
    DegreeCapExceeded(int required, int cap)
        : std::runtime_error("trig product requires degree " + std::to_string(required) +
                             " but the cap is " + std::to_string(cap)),
          required_degree(required) {}
    int required_degree;
};

// Real trigonometric polynomial on the circle with exact rational
// coefficients:
//   u(theta) = const + sum_k cos_k * cos(k theta) + sin_k * sin(k theta).
// Trailing zero harmonics are trimmed.
class TrigPoly {
  public:
    TrigPoly() = default;
    TrigPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
    TrigPoly(long constant) : TrigPoly(Rational(constant)) {}

    static TrigPoly cos_term(int k, const Rational& coeff = Rational(1));
    static TrigPoly sin_term(int k, const Rational& coeff = Rational(1));

    const Rational& constant() const { return constant_; }
    // Harmonic k >= 1; zero for k beyond the stored degree.
    Rational cos_coeff(int k) const;
    Rational sin_coeff(int k) const;
    void set_cos(int k, const Rational& c);
    void set_sin(int k, const Rational& c);

    int degree() const { return static_cast<int>(std::max(cos_.size(), sin_.size())); }
    bool is_zero() const { return constant_ == 0 && cos_.empty() && sin_.empty(); }
    bool is_constant() const { return cos_.empty() && sin_.empty(); }

    TrigPoly& operator+=(const TrigPoly& rhs);
    TrigPoly& operator-=(const TrigPoly& rhs);
    TrigPoly& operator*=(const Rational& scalar);

    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) {
        a += b;
        return a;
    }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) {
        a -= b;
        return a;
    }
    friend TrigPoly operator*(TrigPoly a, const Rational& s) {
        a *= s;
        return a;
    }
    friend TrigPoly operator*(const Rational& s, TrigPoly a) {
        a *= s;
        return a;
    }
    friend TrigPoly operator-(TrigPoly a) {
        a *= Rational(-1);
        return a;
    }

    bool operator==(const TrigPoly& rhs) const;
    bool operator!=(const TrigPoly& rhs) const { return !(*this == rhs); }

    // Term-by-term derivative; the result has zero mean.
    TrigPoly derivative() const;

    // Integral against the normalized measure (total mass one), i.e. the
    // constant term.
    Rational mean() const { return constant_; }

    double eval(double theta) const;

    std::string str() const;

  private:
    void trim();

    Rational constant_;
    std::vector<Rational> cos_;  // cos_[k-1] is the cos(k theta) coefficient
    std::vector<Rational> sin_;
};

// Exact product via product-to-sum identities. Throws DegreeCapExceeded when
// the result degree would exceed `degree_cap`.
TrigPoly trig_mul(const TrigPoly& u, const TrigPoly& v, int degree_cap = kDefaultTrigDegreeCap);

inline TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) { return trig_mul(a, b); }

inline TrigPoly trig_diff(const TrigPoly& u) { return u.derivative(); }
inline Rational trig_mean(const TrigPoly& u) { return u.mean(); }

}  // namespace gca
