// lp.cpp
//
// Successive shortest augmenting paths on the bipartite transportation graph.
// Supplies are scaled to one integer grid; distances, reduced costs, and
// potentials stay rational, so the optimum is exact for a rational matrix.

#include "otlab/lp.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace otlab {

Rational rational_from_double(double d) {
    if (!std::isfinite(d)) throw std::invalid_argument("rational_from_double: non-finite value");
    if (d == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(d, &exp);  // d = m * 2^exp, |m| in [0.5, 1)
    long long mant = static_cast<long long>(std::ldexp(m, 53));
    int e2 = exp - 53;
    if (e2 >= 0) return Rational(BigInt(mant) << static_cast<unsigned>(e2), BigInt(1));
    return Rational(BigInt(mant), BigInt::pow2(static_cast<unsigned>(-e2)));
}

std::vector<std::vector<Rational>> lp_cost_matrix(const LatticeMeasure& mu,
                                                  const LatticeMeasure& nu, const CostSpec& cost,
                                                  bool* exact) {
    std::vector<std::vector<Rational>> m(mu.size(), std::vector<Rational>(nu.size()));
    bool all_exact = true;
    const bool shared = same_field(mu, nu);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        for (std::size_t j = 0; j < nu.size(); ++j) {
            Scalar c = shared
                           ? displacement_cost((mu.value_num(i) - nu.value_num(j)).abs(),
                                               mu.sqrt_div, cost)
                           : Scalar::approx(
                                 std::pow(std::abs(mu.value(i) - nu.value(j)), cost.exponent));
            if (c.is_exact()) {
                m[i][j] = c.rational();
            } else {
                all_exact = false;
                m[i][j] = rational_from_double(c.value());
            }
        }
    }
    if (exact) *exact = all_exact;
    return m;
}

OTResult lp_oracle(const LatticeMeasure& mu, const LatticeMeasure& nu,
                   const std::vector<std::vector<Rational>>& cost) {
    const std::size_t m = mu.size(), n = nu.size();
    if (m * n > kLpInstanceLimit)
        throw std::invalid_argument("lp_oracle: instance exceeds the size limit");
    if (cost.size() != m) throw std::invalid_argument("lp_oracle: cost matrix has wrong row count");
    for (const auto& row : cost)
        if (row.size() != n)
            throw std::invalid_argument("lp_oracle: cost matrix has wrong column count");

    // integer supplies/demands on one grid
    BigInt grid(1);
    for (const Rational& w : mu.weights) grid = lcm(grid, w.den());
    for (const Rational& w : nu.weights) grid = lcm(grid, w.den());
    std::vector<BigInt> supply(m), demand(n);
    for (std::size_t i = 0; i < m; ++i) supply[i] = mu.weights[i].num() * (grid / mu.weights[i].den());
    for (std::size_t j = 0; j < n; ++j) demand[j] = nu.weights[j].num() * (grid / nu.weights[j].den());

    // nodes: sources 0..m-1, targets m..m+n-1
    const std::size_t nv = m + n;
    std::vector<Rational> pot(nv);
    for (std::size_t j = 0; j < n; ++j) {
        Rational lo = cost[0][j];
        for (std::size_t i = 1; i < m; ++i)
            if (cost[i][j] < lo) lo = cost[i][j];
        pot[m + j] = lo;  // forward reduced costs start nonnegative
    }

    std::vector<std::vector<BigInt>> flow(m, std::vector<BigInt>(n));
    BigInt outstanding = grid;  // total unsent mass on the integer grid

    const unsigned long long max_rounds = 1000ull * nv + 64;
    unsigned long long rounds = 0;

    std::vector<std::optional<Rational>> dist(nv);
    std::vector<bool> settled(nv);
    std::vector<std::size_t> parent(nv);

    while (!outstanding.is_zero()) {
        if (++rounds > max_rounds)
            throw std::runtime_error("lp_oracle: augmentation guard exceeded (degenerate instance)");

        for (std::size_t v = 0; v < nv; ++v) {
            dist[v].reset();
            settled[v] = false;
            parent[v] = nv;
        }
        for (std::size_t i = 0; i < m; ++i)
            if (!supply[i].is_zero()) dist[i] = Rational(0);

        std::size_t sink = nv;
        while (true) {
            std::size_t u = nv;
            for (std::size_t v = 0; v < nv; ++v) {
                if (settled[v] || !dist[v]) continue;
                if (u == nv || *dist[v] < *dist[u]) u = v;
            }
            if (u == nv) break;
            settled[u] = true;
            if (u >= m && !demand[u - m].is_zero()) {
                sink = u;
                break;
            }
            if (u < m) {
                // forward arcs u -> every target
                for (std::size_t j = 0; j < n; ++j) {
                    std::size_t v = m + j;
                    if (settled[v]) continue;
                    Rational nd = *dist[u] + cost[u][j] + pot[u] - pot[v];
                    if (!dist[v] || nd < *dist[v]) {
                        dist[v] = nd;
                        parent[v] = u;
                    }
                }
            } else {
                // backward arcs target -> sources with positive flow
                std::size_t j = u - m;
                for (std::size_t i = 0; i < m; ++i) {
                    if (settled[i] || flow[i][j].is_zero()) continue;
                    Rational nd = *dist[u] - cost[i][j] + pot[u] - pot[i];
                    if (!dist[i] || nd < *dist[i]) {
                        dist[i] = nd;
                        parent[i] = u;
                    }
                }
            }
        }
        if (sink == nv)
            throw std::logic_error("lp_oracle: no augmenting path (unbalanced marginals)");

        // bottleneck along the path: source supply, sink demand, backward flows
        std::size_t head = parent[sink];
        BigInt delta = demand[sink - m];
        std::size_t v = sink;
        while (true) {
            std::size_t u = parent[v];
            if (v >= m) {
                // nothing: forward arc u->v is uncapacitated
            } else {
                // backward arc u(target) -> v(source): limited by flow[v][u-m]
                if (flow[v][u - m] < delta) delta = flow[v][u - m];
            }
            if (parent[u] == nv) {
                head = u;
                break;
            }
            v = u;
        }
        if (supply[head] < delta) delta = supply[head];

        // augment
        v = sink;
        while (parent[v] != nv) {
            std::size_t u = parent[v];
            if (v >= m)
                flow[u][v - m] += delta;
            else
                flow[v][u - m] -= delta;
            v = u;
        }
        supply[head] -= delta;
        demand[sink - m] -= delta;
        outstanding -= delta;

        // standard potential update keeps all residual reduced costs >= 0
        const Rational dt = *dist[sink];
        for (std::size_t w = 0; w < nv; ++w) {
            if (dist[w] && *dist[w] < dt)
                pot[w] += *dist[w];
            else
                pot[w] += dt;
        }
    }

    TransportPlan plan{mu, nu, {}};
    Rational total(0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (flow[i][j].is_zero()) continue;
            Rational mass(flow[i][j], grid);
            total += mass * cost[i][j];
            plan.moves.push_back({i, j, std::move(mass)});
        }
    return OTResult{Scalar(total), std::move(plan)};
}

}  // namespace otlab
