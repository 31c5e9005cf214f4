// test_lp.cpp
//
// The LP oracle against hand cases, a closed-form 2x2 mini-oracle (including
// negative costs), and the monotone coupling on random convex-cost instances.

#include <stdexcept>
#include <set>

#include "doctest.h"
#include "otlab/fuzz.hpp"
#include "otlab/lp.hpp"
#include "otlab/radiation.hpp"

using namespace otlab;

namespace {

LatticeMeasure ints(std::vector<std::int64_t> pts, std::vector<Rational> ws) {
    return LatticeMeasure::make(Rational(1), Rational(0), 1, std::move(pts), std::move(ws));
}

// 2x2 transportation solved in closed form: x11 = t parameterizes the
// feasible segment, the objective is linear in t, so the optimum sits at an
// endpoint.
Rational mini_2x2(const Rational& a1, const Rational& a2, const Rational& b1, const Rational& b2,
                  const std::vector<std::vector<Rational>>& c) {
    Rational lo = a1 - b2;  // x11 >= a1 - b2 and >= 0
    if (lo.sign() < 0) lo = Rational(0);
    Rational hi = a1 < b1 ? a1 : b1;
    auto value = [&](const Rational& t) {
        return c[0][0] * t + c[0][1] * (a1 - t) + c[1][0] * (b1 - t) +
               c[1][1] * (a2 - b1 + t);
    };
    Rational vlo = value(lo), vhi = value(hi);
    return vlo < vhi ? vlo : vhi;
}

}  // namespace

TEST_CASE("lp oracle hand cases") {
    const CostSpec quad{2.0};
    // dirac pair: one move, cost c(a, b)
    LatticeMeasure da = dirac(Rational(1)), db = dirac(Rational(5));
    auto m = lp_cost_matrix(da, db, quad, nullptr);
    OTResult r = lp_oracle(da, db, m);
    REQUIRE(r.plan.moves.size() == 1);
    CHECK(r.cost.rational() == Rational(16));

    // the coin vs rho: agrees with the monotone coupling
    bool exact = false;
    auto m2 = lp_cost_matrix(rademacher_sum(1), rademacher_sum(2), quad, &exact);
    CHECK(exact);
    OTResult r2 = lp_oracle(rademacher_sum(1), rademacher_sum(2), m2);
    CHECK(r2.cost.rational() == Rational(1));
    validate_plan(r2.plan);
}

TEST_CASE("lp oracle reproduces the direct-calculation value 5/8") {
    BinomialFamily f = binomial_family(2);
    auto m = lp_cost_matrix(f.sigma, f.tau, CostSpec{2.0}, nullptr);
    OTResult r = lp_oracle(f.sigma, f.tau, m);
    CHECK(r.cost.is_exact());
    CHECK(r.cost.rational() == Rational(5, 8));
    validate_plan(r.plan);
}

TEST_CASE("lp oracle on random 2x2 instances with signed costs") {
    FuzzRng rng(77);
    for (int iter = 0; iter < 200; ++iter) {
        long long a1n = 1 + static_cast<long long>(rng.below(7));
        Rational a1(a1n, 8), a2 = Rational(1) - a1;
        long long b1n = 1 + static_cast<long long>(rng.below(7));
        Rational b1(b1n, 8), b2 = Rational(1) - b1;
        LatticeMeasure mu = ints({0, 1}, {a1, a2});
        LatticeMeasure nu = ints({0, 1}, {b1, b2});
        std::vector<std::vector<Rational>> c(2, std::vector<Rational>(2));
        for (auto& row : c)
            for (auto& e : row) e = Rational(rng.range(-9, 9), 1 + rng.range(0, 3));
        OTResult r = lp_oracle(mu, nu, c);
        CHECK(r.cost.rational() == mini_2x2(a1, a2, b1, b2, c));
        validate_plan(r.plan);
    }
}

namespace {

// exhaustive integer-flow enumeration on the common weight grid; independent
// optimum for any cost matrix, feasible for tiny instances only
Rational brute_force_optimum(const LatticeMeasure& mu, const LatticeMeasure& nu,
                             const std::vector<std::vector<Rational>>& c) {
    BigInt grid(1);
    for (const Rational& w : mu.weights) grid = lcm(grid, w.den());
    for (const Rational& w : nu.weights) grid = lcm(grid, w.den());
    std::vector<long long> supply, demand;
    for (const Rational& w : mu.weights)
        supply.push_back((w.num() * (grid / w.den())).to_int64());
    for (const Rational& w : nu.weights)
        demand.push_back((w.num() * (grid / w.den())).to_int64());

    const std::size_t m = supply.size(), n = demand.size();
    std::vector<long long> col = demand;
    std::vector<long long> row(m);
    Rational best;
    bool have = false;
    Rational g(grid, BigInt(1));

    // depth-first over all integer matrices with the prescribed margins
    auto rec = [&](auto&& self, std::size_t i, std::size_t j, Rational acc) -> void {
        if (i == m) {
            for (long long rest : col)
                if (rest != 0) return;
            if (!have || acc < best) {
                best = acc;
                have = true;
            }
            return;
        }
        if (j + 1 == n) {
            long long x = supply[i] - row[i];
            if (x < 0 || x > col[j]) return;
            col[j] -= x;
            row[i] += x;
            self(self, i + 1, 0, acc + Rational(x) / g * c[i][j]);
            row[i] -= x;
            col[j] += x;
            return;
        }
        long long cap = std::min(supply[i] - row[i], col[j]);
        for (long long x = 0; x <= cap; ++x) {
            col[j] -= x;
            row[i] += x;
            self(self, i, j + 1, acc + Rational(x) / g * c[i][j]);
            row[i] -= x;
            col[j] += x;
        }
    };
    rec(rec, 0, 0, Rational(0));
    REQUIRE(have);
    return best;
}

}  // namespace

TEST_CASE("lp oracle matches exhaustive enumeration on tiny signed instances") {
    FuzzRng rng(2718);
    for (int iter = 0; iter < 60; ++iter) {
        // coarse grids keep the enumeration tractable
        const long long den = 4 + static_cast<long long>(rng.below(5));  // 4..8
        auto tiny = [&](unsigned size, int offset) {
            std::vector<std::int64_t> pts;
            std::vector<Rational> ws;
            std::set<std::int64_t> chosen;
            while (chosen.size() < size) chosen.insert(rng.range(-5, 5) + offset);
            pts.assign(chosen.begin(), chosen.end());
            std::vector<long long> parts(size, 1);
            for (long long left = den - static_cast<long long>(size); left > 0; --left)
                ++parts[rng.below(size)];
            for (unsigned i = 0; i < size; ++i) ws.emplace_back(parts[i], den);
            return LatticeMeasure::make(Rational(1), Rational(0), 1, std::move(pts),
                                        std::move(ws));
        };
        LatticeMeasure mu = tiny(1 + static_cast<unsigned>(rng.below(3)), 0);
        LatticeMeasure nu = tiny(1 + static_cast<unsigned>(rng.below(3)), 2);
        std::vector<std::vector<Rational>> c(mu.size(), std::vector<Rational>(nu.size()));
        for (auto& r : c)
            for (auto& e : r) e = Rational(rng.range(-6, 6), 1 + rng.range(0, 2));
        OTResult lp = lp_oracle(mu, nu, c);
        CHECK(lp.cost.rational() == brute_force_optimum(mu, nu, c));
        validate_plan(lp.plan);
    }
}

TEST_CASE("oracle equivalence holds on non-dyadic weight grids") {
    FuzzRng rng(1618);
    for (int iter = 0; iter < 40; ++iter) {
        auto odd_grid = [&](int offset) {
            const unsigned size = 1 + static_cast<unsigned>(rng.below(5));
            const long long den =
                static_cast<long long>(size) + 2 + static_cast<long long>(rng.below(12));
            std::set<std::int64_t> chosen;
            while (chosen.size() < size) chosen.insert(rng.range(-8, 8) + offset);
            std::vector<std::int64_t> pts(chosen.begin(), chosen.end());
            std::vector<long long> parts(size, 1);
            for (long long left = den - static_cast<long long>(size); left > 0; --left)
                ++parts[rng.below(size)];
            std::vector<Rational> ws;
            for (unsigned i = 0; i < size; ++i) ws.emplace_back(parts[i], den);
            return LatticeMeasure::make(Rational(1), Rational(0), 1, std::move(pts),
                                        std::move(ws));
        };
        LatticeMeasure mu = odd_grid(0), nu = odd_grid(1);
        for (double r : {1.0, 2.0}) {
            const CostSpec cost{r};
            Scalar direct = w_distance(mu, nu, cost).cost;
            Scalar via_lp = lp_oracle(mu, nu, lp_cost_matrix(mu, nu, cost, nullptr)).cost;
            CHECK(direct.rational() == via_lp.rational());
        }
    }
}

TEST_CASE("oracle equivalence with the monotone coupling on random instances") {
    FuzzRng rng(123);
    for (int iter = 0; iter < 120; ++iter) {
        LatticeMeasure a = random_dyadic_measure(rng, 8, 10);
        LatticeMeasure b = random_dyadic_measure(rng, 8, 10);
        for (double rexp : {1.0, 2.0, 3.0}) {
            const CostSpec cost{rexp};
            Scalar direct = w_distance(a, b, cost).cost;
            bool exact = false;
            auto matrix = lp_cost_matrix(a, b, cost, &exact);
            REQUIRE(exact);
            Scalar via_lp = lp_oracle(a, b, matrix).cost;
            CHECK(direct.rational() == via_lp.rational());
        }
    }
}

TEST_CASE("lp oracle rejects malformed instances") {
    LatticeMeasure mu = rademacher_sum(1), nu = rademacher_sum(2);
    std::vector<std::vector<Rational>> wrong(1, std::vector<Rational>(3));
    CHECK_THROWS_AS(lp_oracle(mu, nu, wrong), std::invalid_argument);
    std::vector<std::vector<Rational>> ragged(2, std::vector<Rational>(2));
    CHECK_THROWS_AS(lp_oracle(mu, nu, ragged), std::invalid_argument);
}

TEST_CASE("rational_from_double is lossless on dyadics") {
    CHECK(rational_from_double(0.375) == Rational(3, 8));
    CHECK(rational_from_double(-2.5) == Rational(-5, 2));
    CHECK(rational_from_double(1.0) == Rational(1));
    double v = 0.1;
    CHECK(rational_from_double(v).to_double() == v);
}
