#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace gca {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar used for every coefficient in the library.
// Canonical form (reduced, positive denominator) is maintained by the
// backend; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

// Serializes as "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational parse_rational(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("rational: cannot parse \"" + text + "\"");
    }
}

inline Rational rational_pow(const Rational& base, unsigned exponent) {
    using boost::multiprecision::pow;
    if (exponent == 0) return Rational(1);
    Integer num = pow(boost::multiprecision::numerator(base), exponent);
    Integer den = pow(boost::multiprecision::denominator(base), exponent);
    return Rational(num, den);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace gca
