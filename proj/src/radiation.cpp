// radiation.cpp

#include "otlab/radiation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace otlab {

BinomialFamily binomial_family(unsigned n) {
    if (n == 0) throw std::invalid_argument("binomial_family: n must be >= 1");
    BinomialFamily f;
    f.n = n;
    f.mu = rademacher_sum(2 * n - 1);
    f.nu = rademacher_sum(2 * n);
    f.sigma = rademacher_sum(4 * n - 2);
    f.tau = rademacher_sum(4 * n);
    if (!(convolve(f.sigma, rho()) == f.tau))
        throw std::logic_error("binomial_family: tau != sigma * rho");
    return f;
}

std::vector<Rational> sigma_profile(unsigned n) {
    std::vector<BigInt> row = binomial_row(4 * n - 2);
    BigInt den = BigInt::pow2(4 * n - 2);
    std::vector<Rational> p;
    p.reserve(2 * n);
    for (unsigned k = 0; k < 2 * n; ++k)
        p.emplace_back(row[k + 2 * n - 1], den);
    return p;
}

TransportPlan radiation_plan(unsigned n) {
    if (n == 0) throw std::invalid_argument("radiation_plan: n must be >= 1");
    BinomialFamily f = binomial_family(n);
    std::vector<Rational> p = sigma_profile(n);

    const long long span_s = 2 * static_cast<long long>(n) - 1;  // sigma points are 2k, |k| <= span_s
    auto sidx = [&](long long k) { return static_cast<std::size_t>(k + span_s); };
    auto tidx = [&](long long k) { return static_cast<std::size_t>(k + span_s + 1); };

    TransportPlan plan{f.sigma, f.tau, {}};
    const Rational quarter(1, 4);

    // center: p_0/(8n) radiates to each side
    {
        Rational out = p[0] / Rational(8 * static_cast<long long>(n));
        plan.moves.push_back({sidx(0), tidx(-1), out});
        plan.moves.push_back({sidx(0), tidx(0), p[0] - out - out});
        plan.moves.push_back({sidx(0), tidx(1), out});
    }
    for (long long k = 1; k <= span_s; ++k) {
        Rational out = quarter * p[static_cast<std::size_t>(k)] *
                       Rational(2 * k + 1, 2 * static_cast<long long>(n) + k);
        Rational stay = p[static_cast<std::size_t>(k)] - out;
        plan.moves.push_back({sidx(k), tidx(k), stay});
        plan.moves.push_back({sidx(k), tidx(k + 1), out});
        plan.moves.push_back({sidx(-k), tidx(-k), stay});
        plan.moves.push_back({sidx(-k), tidx(-k - 1), out});
    }
    std::sort(plan.moves.begin(), plan.moves.end(), [](const Move& a, const Move& b) {
        return a.from != b.from ? a.from < b.from : a.to < b.to;
    });
    return plan;
}

std::pair<Rational, Rational> sandwich_sums(unsigned n) {
    std::vector<BigInt> row = binomial_row(4 * n - 2);
    const std::size_t mid = 2 * n - 1;  // index of p_{n,0}
    BigInt up(0), lo(0);
    for (unsigned k = 0; k < 2 * n; ++k)
        up += row[mid + k].mul_small(2 * k + 1);
    for (unsigned k = 0; k + 1 < 2 * n; ++k)
        lo += row[mid + k + 1].mul_small(2 * k + 1);
    BigInt den = BigInt::pow2(4 * n - 2).mul_small(n);
    return {Rational(lo, den), Rational(up, den)};
}

SandwichBounds sandwich(unsigned n) {
    if (n == 0) throw std::invalid_argument("sandwich: n must be >= 1");
    auto [lo, up] = sandwich_sums(n);
    BinomialFamily f = binomial_family(n);
    Scalar cost = w_distance(f.sigma, f.tau, CostSpec{2.0}).cost;
    SandwichBounds b{n, lo, up, cost.rational()};
    if (!(b.lower <= b.exact_cost && b.exact_cost <= b.upper))
        throw std::logic_error("sandwich: exact cost escaped the bounds");
    return b;
}

Scalar odd_separation(unsigned n, unsigned k_odd) {
    if (n == 0) throw std::invalid_argument("odd_separation: n must be >= 1");
    if (k_odd % 2 == 0) throw std::invalid_argument("odd_separation: k must be odd");
    LatticeMeasure mu_k = rademacher_sum(k_odd * (2 * n - 1));
    LatticeMeasure nu_k = rademacher_sum(k_odd * 2 * n);
    return support_distance_lower_bound(mu_k, nu_k, CostSpec{2.0});
}

ViolationReport monotonicity_violation(unsigned n) {
    if (n < 2) throw std::invalid_argument("monotonicity_violation: n must be >= 2");
    BinomialFamily f = binomial_family(n);
    const CostSpec quad{2.0};
    Rational t_sigma_tau = w_distance(f.sigma, f.tau, quad).cost.rational();
    Rational t3_raw =
        w_distance(rademacher_sum(3 * (2 * n - 1)), rademacher_sum(6 * n), quad).cost.rational();
    ViolationReport r;
    r.n = n;
    r.t2_normalized = t_sigma_tau / Rational(2);
    r.t3_normalized_lower = Rational(1, 3);
    r.t3_normalized_exact = t3_raw / Rational(3);
    r.violated = r.t3_normalized_exact > r.t2_normalized;
    return r;
}

std::vector<SweepEntry> asymptotic_sweep(const std::vector<unsigned>& n_values,
                                         const CostSpec& cost) {
    if (n_values.empty()) throw std::invalid_argument("asymptotic_sweep: empty grid");
    std::vector<SweepEntry> out;
    out.reserve(n_values.size());
    for (unsigned n : n_values) {
        SweepEntry e;
        e.n = n;
        try {
            BinomialFamily f = binomial_family(n);
            e.cost = w_distance(f.sigma, f.tau, cost).cost;
            e.sqrt_n_scaled = std::sqrt(static_cast<double>(n)) * e.cost.value();
            e.exact = e.cost.is_exact();
            if (cost.exponent == 2.0) {
                auto [lo, up] = sandwich_sums(n);
                e.lower = lo;
                e.upper = up;
            }
        } catch (const std::exception& ex) {
            e.error = ex.what();
        }
        out.push_back(std::move(e));
    }
    return out;
}

PfoldFamily pfold_family(unsigned p, unsigned n) {
    if (p < 2) throw std::invalid_argument("pfold_family: p must be >= 2");
    if (n == 0) throw std::invalid_argument("pfold_family: n must be >= 1");
    LatticeMeasure step = LatticeMeasure::make(
        Rational(1), Rational(0), 1,
        {1 - static_cast<std::int64_t>(p), 1},
        {Rational(1, static_cast<long long>(p)),
         Rational(static_cast<long long>(p) - 1, static_cast<long long>(p))});
    PfoldFamily f;
    f.p = p;
    f.n = n;
    LatticeMeasure acc = step;
    for (unsigned i = 1; i < p * n; ++i) acc = convolve(acc, step);
    f.nu = acc;
    f.mu = convolve(acc, step);
    return f;
}

}  // namespace otlab
