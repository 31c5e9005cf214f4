// test_rational.cpp

#include <numeric>
#include <stdexcept>
#include <random>

#include "doctest.h"
#include "otlab/rational.hpp"

using otlab::BigInt;
using otlab::Rational;

TEST_CASE("rational lowest terms and sign normalization") {
    Rational r(6, -8);
    CHECK(r.num() == BigInt(-3));
    CHECK(r.den() == BigInt(4));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).den() == BigInt(1));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic against long double on random small fractions") {
    std::mt19937_64 rng(4242);
    auto draw = [&]() {
        long long n = static_cast<long long>(rng() % 2001) - 1000;
        long long d = 1 + static_cast<long long>(rng() % 1000);
        return Rational(n, d);
    };
    for (int iter = 0; iter < 5000; ++iter) {
        Rational a = draw(), b = draw();
        CHECK((a + b).to_double() == doctest::Approx(a.to_double() + b.to_double()).epsilon(1e-12));
        CHECK((a - b).to_double() == doctest::Approx(a.to_double() - b.to_double()).epsilon(1e-12));
        CHECK((a * b).to_double() == doctest::Approx(a.to_double() * b.to_double()).epsilon(1e-12));
        if (!b.is_zero())
            CHECK((a / b).to_double() ==
                  doctest::Approx(a.to_double() / b.to_double()).epsilon(1e-12));
        CHECK(((a < b) == (a.to_double() < b.to_double() - 1e-12) ||
               std::abs(a.to_double() - b.to_double()) < 1e-9));
    }
}

TEST_CASE("rational exact identities") {
    Rational half(1, 2), third(1, 3);
    CHECK(half + third == Rational(5, 6));
    CHECK(half * third == Rational(1, 6));
    CHECK(half - third == Rational(1, 6));
    CHECK(half / third == Rational(3, 2));
    CHECK(half.pow(10) == Rational(1, 1024));
    CHECK((-half).abs() == half);
    CHECK(Rational(7, 3).reciprocal() == Rational(3, 7));
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("rational comparison fast paths agree with cross multiplication") {
    // dyadic vs dyadic, equal dens, and general
    Rational a(3, 8), b(7, 16), c(5, 8), d(2, 3);
    CHECK(a < b);
    CHECK(b < c);
    CHECK(c < d);
    CHECK(a < d);
    Rational big1(BigInt::from_string("123456789123456789"), BigInt::pow2(80));
    Rational big2(BigInt::from_string("123456789123456790"), BigInt::pow2(80));
    CHECK(big1 < big2);
    Rational big3(BigInt::from_string("987654321"), BigInt::pow2(40));
    CHECK((big1 < big3) == (big1.to_double() < big3.to_double()));
}

TEST_CASE("rational to_double handles huge numerators and denominators") {
    Rational tiny(BigInt(1), BigInt::pow2(16384));
    CHECK(tiny.to_double() == 0.0);  // below double range, underflows cleanly
    Rational ratio(BigInt::pow2(20000) + BigInt::pow2(19999), BigInt::pow2(20000));
    CHECK(ratio.to_double() == doctest::Approx(1.5).epsilon(1e-14));
    Rational neg(-BigInt::pow2(3000), BigInt::pow2(3001));
    CHECK(neg.to_double() == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("rational string round trips") {
    CHECK(Rational::from_string("5/8").to_string() == "5/8");
    CHECK(Rational::from_string("-5/8").to_string() == "-5/8");
    CHECK(Rational::from_string("12").to_string() == "12");
    CHECK(Rational::from_string("4/8") == Rational(1, 2));
}
