// test_measure.cpp
//
// Constructors and algebra of lattice measures: the sign-sum laws, exact
// convolution, normalized powers with the symbolic 1/sqrt(m) pitch, moments.

#include <stdexcept>
#include <random>

#include "doctest.h"
#include "otlab/fuzz.hpp"
#include "otlab/measure.hpp"

using namespace otlab;

TEST_CASE("rademacher_sum basics") {
    LatticeMeasure one = rademacher_sum(1);
    CHECK(one.points == std::vector<std::int64_t>{-1, 1});
    CHECK(one.weights == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

    LatticeMeasure two = rademacher_sum(2);
    CHECK(two.points == std::vector<std::int64_t>{-2, 0, 2});
    CHECK(two.weights == std::vector<Rational>{Rational(1, 4), Rational(1, 2), Rational(1, 4)});
    CHECK(two == rho());

    CHECK(rademacher_sum(0) == dirac(Rational(0)));
}

TEST_CASE("weight normalization invariant") {
    FuzzRng rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        LatticeMeasure m = random_dyadic_measure(rng, 8, 10);
        Rational sum(0);
        for (const Rational& w : m.weights) {
            CHECK(w.sign() > 0);
            sum += w;
        }
        CHECK(sum == Rational(1));
        LatticeMeasure c = convolve(m, rademacher_sum(2));
        Rational csum(0);
        for (const Rational& w : c.weights) csum += w;
        CHECK(csum == Rational(1));
    }
}

TEST_CASE("convolution identity and singleton translation") {
    LatticeMeasure mu = normalized_power(rademacher_sum(1), 2);  // irrational pitch
    CHECK(convolve(mu, dirac(Rational(0))) == mu);
    CHECK(convolve(dirac(Rational(0)), mu) == mu);
    CHECK(convolve(rademacher_sum(1), rademacher_sum(1)) == rademacher_sum(2));
    CHECK(convolve(dirac(Rational(2)), dirac(Rational(3))) == dirac(Rational(5)));
}

TEST_CASE("convolution is commutative and associative") {
    FuzzRng rng(11);
    for (int iter = 0; iter < 30; ++iter) {
        LatticeMeasure a = random_dyadic_measure(rng, 5, 6);
        LatticeMeasure b = random_dyadic_measure(rng, 5, 6);
        LatticeMeasure c = random_dyadic_measure(rng, 5, 6);
        CHECK(convolve(a, b) == convolve(b, a));
        CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
    }
}

TEST_CASE("sign-sum additivity: a+b summands = convolution of the parts") {
    for (unsigned a = 0; a <= 32; ++a)
        for (unsigned b = a; b <= 32; ++b)
            CHECK(rademacher_sum(a + b) == convolve(rademacher_sum(a), rademacher_sum(b)));
}

TEST_CASE("convolve rejects mismatched pitches") {
    LatticeMeasure coarse = rademacher_sum(1);
    LatticeMeasure fine = scale(rademacher_sum(1), Rational(1, 2));
    CHECK_THROWS_AS(convolve(coarse, fine), std::invalid_argument);
    LatticeMeasure other_field = normalized_power(rademacher_sum(1), 2);
    CHECK_THROWS_AS(convolve(coarse, other_field), std::invalid_argument);
}

TEST_CASE("normalized_power keeps the pitch exact under the radical") {
    LatticeMeasure mu = rademacher_sum(1);
    CHECK(normalized_power(mu, 1) == mu);

    LatticeMeasure half = normalized_power(mu, 2);
    CHECK(half.points == std::vector<std::int64_t>{-2, 0, 2});
    CHECK(half.step == Rational(1));
    CHECK(half.sqrt_div == 2);
    CHECK(half.weights == std::vector<Rational>{Rational(1, 4), Rational(1, 2), Rational(1, 4)});

    // perfect squares fold back into a rational pitch
    LatticeMeasure quarter = normalized_power(mu, 4);
    CHECK(quarter.sqrt_div == 1);
    CHECK(quarter.step == Rational(1, 2));

    // normalization preserves the variance exactly
    for (unsigned m : {1u, 2u, 3u, 6u, 12u})
        CHECK(moments(normalized_power(mu, m)).variance == Rational(1));
    LatticeMeasure skew = LatticeMeasure::make(
        Rational(1), Rational(0), 1, {-1, 2}, {Rational(2, 3), Rational(1, 3)});
    for (unsigned m : {1u, 2u, 5u})
        CHECK(moments(normalized_power(skew, m)).variance == moments(skew).variance);
}

TEST_CASE("scale") {
    LatticeMeasure mu = rademacher_sum(1);
    CHECK(scale(mu, Rational(1)) == mu);
    CHECK(scale(mu, Rational(-1)) == mu);  // symmetric law
    CHECK(scale(dirac(Rational(1)), Rational(3)) == dirac(Rational(3)));
    CHECK_THROWS_AS(scale(mu, Rational(0)), std::invalid_argument);

    LatticeMeasure twisted = LatticeMeasure::make(
        Rational(1), Rational(0), 1, {-3, 1}, {Rational(1, 4), Rational(3, 4)});
    LatticeMeasure flipped = scale(twisted, Rational(-2));
    CHECK(flipped.step == Rational(2));
    CHECK(flipped.points == std::vector<std::int64_t>{-1, 3});
    CHECK(flipped.weights == std::vector<Rational>{Rational(3, 4), Rational(1, 4)});
    CHECK(moments(flipped).variance == moments(twisted).variance * Rational(4));
}

TEST_CASE("binomial sigma weights") {
    CHECK(binomial_sigma_weight(2, 0) == Rational(5, 16));
    for (unsigned n : {1u, 2u, 3u}) {
        CHECK(binomial_sigma_weight(n, 2 * n) == Rational(0));
        CHECK(binomial_sigma_weight(n, -2 * static_cast<long long>(n)) == Rational(0));
    }
    // cross-check against the literal self-convolution
    for (unsigned n : {1u, 2u, 5u, 11u}) {
        LatticeMeasure mu = rademacher_sum(2 * n - 1);
        LatticeMeasure sigma = convolve(mu, mu);
        for (std::size_t i = 0; i < sigma.size(); ++i) {
            long long k = sigma.points[i] / 2;
            CHECK(sigma.weights[i] == binomial_sigma_weight(n, k));
        }
    }
}

TEST_CASE("moments") {
    for (unsigned m : {1u, 2u, 7u, 16u}) {
        MomentSummary s = moments(rademacher_sum(m));
        CHECK(s.mean.is_exact());
        CHECK(s.mean.rational() == Rational(0));
        CHECK(s.variance == Rational(static_cast<long long>(m)));
    }
    MomentSummary pt = moments(dirac(Rational(3)));
    CHECK(pt.mean.rational() == Rational(3));
    CHECK(pt.variance == Rational(0));

    // variance is additive under convolution of centered laws
    FuzzRng rng(23);
    for (int iter = 0; iter < 20; ++iter) {
        LatticeMeasure a = random_symmetric_measure(rng, 4, 8);
        LatticeMeasure b = random_symmetric_measure(rng, 4, 8);
        CHECK(moments(convolve(a, b)).variance ==
              moments(a).variance + moments(b).variance);
        CHECK(mean_num(a).is_zero());
    }

    // second moment identity on an irrational pitch: variance stays rational
    LatticeMeasure half = normalized_power(rademacher_sum(3), 2);
    MomentSummary s = moments(half);
    CHECK(s.variance == Rational(3));
    CHECK(s.second_moment == Rational(3));
}

TEST_CASE("make validates invariants") {
    CHECK_THROWS_AS(LatticeMeasure::make(Rational(0), Rational(0), 1, {0}, {Rational(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(LatticeMeasure::make(Rational(1), Rational(0), 12, {0}, {Rational(1)}),
                    std::invalid_argument);  // 12 is not squarefree
    CHECK_THROWS_AS(LatticeMeasure::make(Rational(1), Rational(0), 1, {1, 0}, {Rational(1, 2), Rational(1, 2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(LatticeMeasure::make(Rational(1), Rational(0), 1, {0, 1}, {Rational(1, 2), Rational(1, 3)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(LatticeMeasure::make(Rational(1), Rational(0), 1, {0, 1}, {Rational(3, 2), Rational(-1, 2)}),
                    std::invalid_argument);
}

TEST_CASE("squarefree_split") {
    CHECK(squarefree_split(1) == std::pair<std::int64_t, std::int64_t>{1, 1});
    CHECK(squarefree_split(2) == std::pair<std::int64_t, std::int64_t>{1, 2});
    CHECK(squarefree_split(4) == std::pair<std::int64_t, std::int64_t>{2, 1});
    CHECK(squarefree_split(12) == std::pair<std::int64_t, std::int64_t>{2, 3});
    CHECK(squarefree_split(360) == std::pair<std::int64_t, std::int64_t>{6, 10});
}
