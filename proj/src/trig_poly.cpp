#include "gca/trig_poly.hpp"

#include <cmath>
#include <sstream>

namespace gca {

TrigPoly::TrigPoly(const Rational& constant) : constant_(constant) {}

TrigPoly TrigPoly::cos_term(int k, const Rational& coeff) {
    TrigPoly p;
    p.set_cos(k, coeff);
    return p;
}

TrigPoly TrigPoly::sin_term(int k, const Rational& coeff) {
    TrigPoly p;
    p.set_sin(k, coeff);
    return p;
}

Rational TrigPoly::cos_coeff(int k) const {
    if (k < 1 || static_cast<std::size_t>(k) > cos_.size()) return Rational(0);
    return cos_[k - 1];
}

Rational TrigPoly::sin_coeff(int k) const {
    if (k < 1 || static_cast<std::size_t>(k) > sin_.size()) return Rational(0);
    return sin_[k - 1];
}

void TrigPoly::set_cos(int k, const Rational& c) {
    if (k < 1) throw std::invalid_argument("trig poly: harmonic index must be >= 1");
    if (static_cast<std::size_t>(k) > cos_.size()) cos_.resize(k, Rational(0));
    cos_[k - 1] = c;
    trim();
}

void TrigPoly::set_sin(int k, const Rational& c) {
    if (k < 1) throw std::invalid_argument("trig poly: harmonic index must be >= 1");
    if (static_cast<std::size_t>(k) > sin_.size()) sin_.resize(k, Rational(0));
    sin_[k - 1] = c;
    trim();
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& rhs) {
    constant_ += rhs.constant_;
    if (rhs.cos_.size() > cos_.size()) cos_.resize(rhs.cos_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.cos_.size(); ++i) cos_[i] += rhs.cos_[i];
    if (rhs.sin_.size() > sin_.size()) sin_.resize(rhs.sin_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.sin_.size(); ++i) sin_[i] += rhs.sin_[i];
    trim();
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& rhs) {
    constant_ -= rhs.constant_;
    if (rhs.cos_.size() > cos_.size()) cos_.resize(rhs.cos_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.cos_.size(); ++i) cos_[i] -= rhs.cos_[i];
    if (rhs.sin_.size() > sin_.size()) sin_.resize(rhs.sin_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.sin_.size(); ++i) sin_[i] -= rhs.sin_[i];
    trim();
    return *this;
}

TrigPoly& TrigPoly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        constant_ = Rational(0);
        cos_.clear();
        sin_.clear();
        return *this;
    }
    constant_ *= scalar;
    for (auto& c : cos_) c *= scalar;
    for (auto& c : sin_) c *= scalar;
    return *this;
}

bool TrigPoly::operator==(const TrigPoly& rhs) const {
    return constant_ == rhs.constant_ && cos_ == rhs.cos_ && sin_ == rhs.sin_;
}

TrigPoly TrigPoly::derivative() const {
    TrigPoly d;
    // d/dtheta cos(k t) = -k sin(k t), d/dtheta sin(k t) = k cos(k t)
    for (std::size_t i = 0; i < cos_.size(); ++i) {
        if (cos_[i] != 0) d.set_sin(static_cast<int>(i + 1), -Rational(i + 1) * cos_[i]);
    }
    for (std::size_t i = 0; i < sin_.size(); ++i) {
        if (sin_[i] != 0) d.set_cos(static_cast<int>(i + 1), Rational(i + 1) * sin_[i]);
    }
    return d;
}

double TrigPoly::eval(double theta) const {
    double v = to_double(constant_);
    for (std::size_t i = 0; i < cos_.size(); ++i) {
        if (cos_[i] != 0) v += to_double(cos_[i]) * std::cos((double)(i + 1) * theta);
    }
    for (std::size_t i = 0; i < sin_.size(); ++i) {
        if (sin_[i] != 0) v += to_double(sin_[i]) * std::sin((double)(i + 1) * theta);
    }
    return v;
}

void TrigPoly::trim() {
    while (!cos_.empty() && cos_.back() == 0) cos_.pop_back();
    while (!sin_.empty() && sin_.back() == 0) sin_.pop_back();
}

std::string TrigPoly::str() const {
    std::ostringstream out;
    bool wrote = false;
    if (constant_ != 0) {
        out << to_string(constant_);
        wrote = true;
    }
    auto emit = [&](const Rational& c, const char* fn, std::size_t k) {
        if (c == 0) return;
        Rational a = c;
        if (!wrote) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) out << to_string(a) << "*";
        out << fn << "(" << k << "t)";
        wrote = true;
    };
    int deg = degree();
    for (int k = 1; k <= deg; ++k) {
        emit(cos_coeff(k), "cos", k);
        emit(sin_coeff(k), "sin", k);
    }
    if (!wrote) return "0";
    return out.str();
}

namespace {

// Accumulates a coefficient for cos(k t) / sin(k t) with k possibly
// negative or zero, folding with cos(-k) = cos(k), sin(-k) = -sin(k).
struct HarmonicAccum {
    Rational constant{0};
    std::vector<Rational> cosv, sinv;

    void ensure(int k) {
        if (static_cast<std::size_t>(k) > cosv.size()) cosv.resize(k, Rational(0));
        if (static_cast<std::size_t>(k) > sinv.size()) sinv.resize(k, Rational(0));
    }
    void add_cos(int k, const Rational& c) {
        if (c == 0) return;
        if (k < 0) k = -k;
        if (k == 0) {
            constant += c;
            return;
        }
        ensure(k);
        cosv[k - 1] += c;
    }
    void add_sin(int k, Rational c) {
        if (c == 0) return;
        if (k < 0) {
            k = -k;
            c = -c;
        }
        if (k == 0) return;
        ensure(k);
        sinv[k - 1] += c;
    }
};

}  // namespace

TrigPoly trig_mul(const TrigPoly& u, const TrigPoly& v, int degree_cap) {
    int du = u.degree(), dv = v.degree();
    if (du + dv > degree_cap) throw DegreeCapExceeded(du + dv, degree_cap);

    HarmonicAccum acc;
    acc.add_cos(0, u.constant() * v.constant());
    for (int k = 1; k <= dv; ++k) {
        acc.add_cos(k, u.constant() * v.cos_coeff(k));
        acc.add_sin(k, u.constant() * v.sin_coeff(k));
    }
    for (int k = 1; k <= du; ++k) {
        acc.add_cos(k, v.constant() * u.cos_coeff(k));
        acc.add_sin(k, v.constant() * u.sin_coeff(k));
    }
    const Rational half(1, 2);
    for (int p = 1; p <= du; ++p) {
        const Rational a = u.cos_coeff(p), b = u.sin_coeff(p);
        if (a == 0 && b == 0) continue;
        for (int q = 1; q <= dv; ++q) {
            const Rational c = v.cos_coeff(q), d = v.sin_coeff(q);
            if (c == 0 && d == 0) continue;
            // cos p cos q = (cos(p-q) + cos(p+q))/2
            if (a != 0 && c != 0) {
                Rational w = half * a * c;
                acc.add_cos(p - q, w);
                acc.add_cos(p + q, w);
            }
            // sin p sin q = (cos(p-q) - cos(p+q))/2
            if (b != 0 && d != 0) {
                Rational w = half * b * d;
                acc.add_cos(p - q, w);
                acc.add_cos(p + q, -w);
            }
            // sin p cos q = (sin(p+q) + sin(p-q))/2
            if (b != 0 && c != 0) {
                Rational w = half * b * c;
                acc.add_sin(p + q, w);
                acc.add_sin(p - q, w);
            }
            // cos p sin q = (sin(p+q) - sin(p-q))/2
            if (a != 0 && d != 0) {
                Rational w = half * a * d;
                acc.add_sin(p + q, w);
                acc.add_sin(p - q, -w);
            }
        }
    }

    TrigPoly result(acc.constant);
    for (std::size_t i = 0; i < acc.cosv.size(); ++i) {
        if (acc.cosv[i] != 0) result.set_cos(static_cast<int>(i + 1), acc.cosv[i]);
    }
    for (std::size_t i = 0; i < acc.sinv.size(); ++i) {
        if (acc.sinv[i] != 0) result.set_sin(static_cast<int>(i + 1), acc.sinv[i]);
    }
    return result;
}

}  // namespace gca
