#include <doctest.h>

#include <random>

#include "gca/rational.hpp"
#include "gca/trig_poly.hpp"
#include "gca/weight_poly.hpp"

using namespace gca;

namespace {

Rational small_rational(std::mt19937_64& rng) {
    const long num = static_cast<long>(rng() % 9) - 4;
    const long den = static_cast<long>(rng() % 4) + 1;
    return Rational(num, den);
}

TrigPoly random_trig(std::mt19937_64& rng, int degree) {
    TrigPoly p(small_rational(rng));
    for (int k = 1; k <= degree; ++k) {
        p.set_cos(k, small_rational(rng));
        p.set_sin(k, small_rational(rng));
    }
    return p;
}

WeightPolynomial random_weight_poly(std::mt19937_64& rng) {
    WeightPolynomial p(small_rational(rng));
    for (int t = 0; t < 3; ++t) {
        WeightExponents e{};
        e[rng() % kNumWeightSymbols] = static_cast<unsigned>(rng() % 3);
        e[rng() % kNumWeightSymbols] += static_cast<unsigned>(rng() % 2);
        p.add_term(e, small_rational(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("rational canonical form and serialization") {
    CHECK(to_string(Rational(3, 4)) == "3/4");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(to_string(Rational(2, 4)) == "1/2");
    CHECK(to_string(make_rational(1, -2)) == "-1/2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational("-7/3") == Rational(-7, 3));
    CHECK(parse_rational("12") == Rational(12));
    CHECK_THROWS_AS(parse_rational("2/x"), std::invalid_argument);
    CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(rational_pow(Rational(5), 0) == Rational(1));
}

TEST_CASE("weight polynomial evaluation") {
    const auto h = WeightPolynomial::symbol(WeightSymbol::h);
    const auto mu = WeightPolynomial::symbol(WeightSymbol::mu);
    const auto r1 = WeightPolynomial::symbol(WeightSymbol::rho1);
    const auto r2 = WeightPolynomial::symbol(WeightSymbol::rho2);

    SUBCASE("product of symbols") {
        const WeightPolynomial p = h * mu;
        CHECK(p.eval({{Rational(2), Rational(3), 0, 0, 0, 0}}) == Rational(6));
    }
    SUBCASE("zero polynomial") {
        CHECK(WeightPolynomial().eval({{Rational(9), Rational(9), Rational(9), Rational(9),
                                        Rational(9), Rational(9)}}) == Rational(0));
    }
    SUBCASE("sum of squares") {
        const WeightPolynomial p = r1 * r1 + r2 * r2;
        CHECK(p.eval({{0, 0, Rational(3), Rational(4), 0, 0}}) == Rational(25));
    }
    SUBCASE("missing symbol is an error naming the symbol") {
        const WeightPolynomial p = h * mu;
        std::map<std::string, Rational> point{{"h", Rational(2)}};
        try {
            p.eval(point);
            FAIL("expected an exception");
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find("mu") != std::string::npos);
        }
        point["mu"] = Rational(3);
        CHECK(p.eval(point) == Rational(6));
    }
}

TEST_CASE("weight polynomial ring laws on random inputs") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_weight_poly(rng);
        const auto b = random_weight_poly(rng);
        const auto c = random_weight_poly(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a + b) - b == a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(606060);
    for (int trial = 0; trial < 25; ++trial) {
        const auto a = random_weight_poly(rng);
        const auto b = random_weight_poly(rng);
        WeightPoint p;
        for (auto& v : p) v = small_rational(rng);
        CHECK((a + b).eval(p) == a.eval(p) + b.eval(p));
        CHECK((a * b).eval(p) == a.eval(p) * b.eval(p));
    }
}

TEST_CASE("weight polynomial rendering") {
    const auto h = WeightPolynomial::symbol(WeightSymbol::h);
    const auto alpha = WeightPolynomial::symbol(WeightSymbol::alpha);
    const WeightPolynomial p = h * Rational(4) + alpha * Rational(1, 2);
    CHECK(p.str() == "4*h + 1/2*alpha");
    CHECK(WeightPolynomial().str() == "0");
    CHECK((h * h * Rational(-3)).str() == "-3*h^2");
}

TEST_CASE("trig product-to-sum identities") {
    const TrigPoly c1 = TrigPoly::cos_term(1);
    const TrigPoly s1 = TrigPoly::sin_term(1);

    SUBCASE("cos * cos") {
        TrigPoly expected(Rational(1, 2));
        expected.set_cos(2, Rational(1, 2));
        CHECK(trig_mul(c1, c1) == expected);
    }
    SUBCASE("one is the identity") {
        TrigPoly v = TrigPoly::cos_term(3, Rational(2, 7)) + TrigPoly::sin_term(1, Rational(-5));
        CHECK(trig_mul(TrigPoly(1), v) == v);
    }
    SUBCASE("sin * cos") {
        const TrigPoly expected = TrigPoly::sin_term(2, Rational(1, 2));
        CHECK(trig_mul(s1, c1) == expected);
    }
}

TEST_CASE("trig derivative and mean") {
    CHECK(trig_diff(TrigPoly::cos_term(2)) == TrigPoly::sin_term(2, Rational(-2)));
    CHECK(trig_diff(TrigPoly(7)) == TrigPoly());
    CHECK(trig_diff(TrigPoly::sin_term(1) + TrigPoly::cos_term(3)) ==
          TrigPoly::cos_term(1) + TrigPoly::sin_term(3, Rational(-3)));

    CHECK(trig_mean(TrigPoly(5) + TrigPoly::cos_term(1, Rational(3))) == Rational(5));
    CHECK(trig_mean(TrigPoly::sin_term(7)) == Rational(0));
    const TrigPoly c1 = TrigPoly::cos_term(1);
    CHECK(trig_mean(trig_mul(c1, c1)) == Rational(1, 2));
}

TEST_CASE("trig degree cap is an error, not a truncation") {
    const TrigPoly u = TrigPoly::cos_term(40);
    const TrigPoly v = TrigPoly::cos_term(30);
    try {
        trig_mul(u, v);
        FAIL("expected DegreeCapExceeded");
    } catch (const DegreeCapExceeded& e) {
        CHECK(e.required_degree == 70);
    }
    CHECK(trig_mul(u, v, 128).degree() == 70);
}

TEST_CASE("trig ring and calculus properties on random inputs") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        const TrigPoly u = random_trig(rng, 3);
        const TrigPoly v = random_trig(rng, 3);
        const TrigPoly w = random_trig(rng, 2);
        CHECK(trig_mul(u, v) == trig_mul(v, u));
        CHECK(trig_mul(trig_mul(u, v), w) == trig_mul(u, trig_mul(v, w)));
        // Leibniz, exactly
        CHECK(trig_diff(trig_mul(u, v)) ==
              trig_mul(trig_diff(u), v) + trig_mul(u, trig_diff(v)));
        CHECK(trig_mean(trig_diff(u)) == Rational(0));
    }
}

TEST_CASE("trig numeric evaluation agrees with coefficients") {
    std::mt19937_64 rng(12);
    const TrigPoly u = random_trig(rng, 4);
    const TrigPoly v = random_trig(rng, 4);
    const TrigPoly prod = trig_mul(u, v);
    for (double t : {0.0, 0.5, 1.75, 3.1, 5.9}) {
        CHECK(std::abs(prod.eval(t) - u.eval(t) * v.eval(t)) < 1e-12);
    }
}
