// transport.cpp

#include "otlab/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "otlab/lp.hpp"

namespace otlab {

CostSpec CostSpec::make(double r) {
    if (!std::isfinite(r) || r <= 0.0)
        throw std::invalid_argument("CostSpec: exponent must be positive and finite");
    return CostSpec{r};
}

bool CostSpec::integer_exponent() const {
    return exponent >= 1.0 && exponent <= 62.0 && exponent == std::floor(exponent);
}

unsigned CostSpec::int_exponent() const { return static_cast<unsigned>(exponent); }

Scalar displacement_cost(const Rational& abs_num, std::int64_t field, const CostSpec& cost) {
    if (cost.integer_exponent()) {
        const unsigned r = cost.int_exponent();
        Rational powered = abs_num.pow(r);
        if (r % 2 == 0) return Scalar(powered / Rational(field).pow(r / 2));
        if (field == 1) return Scalar(powered);
        return Scalar::approx(powered.to_double() /
                              std::pow(static_cast<double>(field), 0.5 * r));
    }
    double v = abs_num.to_double() / std::sqrt(static_cast<double>(field));
    return Scalar::approx(std::pow(v, cost.exponent));
}

void validate_plan(const TransportPlan& plan) {
    const std::size_t m = plan.source.size(), n = plan.target.size();
    std::vector<Rational> row(m), col(n);
    for (const Move& mv : plan.moves) {
        if (mv.from >= m || mv.to >= n)
            throw std::invalid_argument("plan: move index out of range");
        if (mv.mass.sign() <= 0) throw std::invalid_argument("plan: nonpositive move mass");
        row[mv.from] += mv.mass;
        col[mv.to] += mv.mass;
    }
    for (std::size_t i = 0; i < m; ++i)
        if (!(row[i] == plan.source.weights[i]))
            throw std::invalid_argument("plan: row sums do not match the source marginal");
    for (std::size_t j = 0; j < n; ++j)
        if (!(col[j] == plan.target.weights[j]))
            throw std::invalid_argument("plan: column sums do not match the target marginal");
}

namespace {

// weights of both measures on one common integer grid; returns the grid size
BigInt common_grid(const LatticeMeasure& mu, const LatticeMeasure& nu, std::vector<BigInt>& a,
                   std::vector<BigInt>& b) {
    BigInt d(1);
    for (const Rational& w : mu.weights) d = lcm(d, w.den());
    for (const Rational& w : nu.weights) d = lcm(d, w.den());
    a.clear();
    b.clear();
    a.reserve(mu.size());
    b.reserve(nu.size());
    for (const Rational& w : mu.weights) a.push_back(w.num() * (d / w.den()));
    for (const Rational& w : nu.weights) b.push_back(w.num() * (d / w.den()));
    return d;
}

}  // namespace

TransportPlan monotone_coupling(const LatticeMeasure& mu, const LatticeMeasure& nu) {
    std::vector<BigInt> a, b;
    BigInt grid = common_grid(mu, nu, a, b);

    TransportPlan plan{mu, nu, {}};
    std::size_t i = 0, j = 0;
    BigInt ra = a[0], rb = b[0];
    while (true) {
        BigInt take = ra <= rb ? ra : rb;
        plan.moves.push_back({i, j, Rational(take, grid)});
        ra -= take;
        rb -= take;
        const bool a_zero = ra.is_zero(), b_zero = rb.is_zero();
        const bool a_last = i + 1 == a.size(), b_last = j + 1 == b.size();
        if (a_zero && b_zero && a_last && b_last) break;
        if ((a_zero && a_last && !b_zero) || (b_zero && b_last && !a_zero))
            throw std::logic_error("monotone_coupling: marginal masses out of balance");
        if (a_zero) ra = a[++i];
        if (b_zero) rb = b[++j];
    }
    return plan;
}

Scalar transport_cost(const TransportPlan& plan, const CostSpec& cost) {
    const LatticeMeasure& s = plan.source;
    const LatticeMeasure& t = plan.target;
    if (same_field(s, t)) {
        std::vector<Rational> sv, tv;
        sv.reserve(s.size());
        tv.reserve(t.size());
        for (std::size_t i = 0; i < s.size(); ++i) sv.push_back(s.value_num(i));
        for (std::size_t j = 0; j < t.size(); ++j) tv.push_back(t.value_num(j));
        Scalar total{Rational(0)};
        for (const Move& mv : plan.moves) {
            Rational d = (sv[mv.from] - tv[mv.to]).abs();
            if (d.is_zero()) continue;
            total += Scalar(mv.mass) * displacement_cost(d, s.sqrt_div, cost);
        }
        return total;
    }
    double total = 0.0;
    for (const Move& mv : plan.moves) {
        double d = std::abs(s.value(mv.from) - t.value(mv.to));
        total += mv.mass.to_double() * std::pow(d, cost.exponent);
    }
    return Scalar::approx(total);
}

OTResult w_distance(const LatticeMeasure& mu, const LatticeMeasure& nu, const CostSpec& cost) {
    if (cost.exponent >= 1.0) {
        TransportPlan plan = monotone_coupling(mu, nu);
        Scalar c = transport_cost(plan, cost);
        return OTResult{std::move(c), std::move(plan)};
    }
    // concave cost: the monotone coupling is not optimal, delegate to the LP
    if (mu.size() * nu.size() > kLpInstanceLimit)
        throw std::invalid_argument("w_distance: instance too large for the concave-cost LP");
    bool exact = false;
    auto matrix = lp_cost_matrix(mu, nu, cost, &exact);
    OTResult res = lp_oracle(mu, nu, matrix);
    // report the geometric cost of the plan, not the approximated matrix value
    res.cost = transport_cost(res.plan, cost);
    if (!exact && res.cost.is_exact()) res.cost = Scalar::approx(res.cost.value());
    return res;
}

Scalar support_distance_lower_bound(const LatticeMeasure& mu, const LatticeMeasure& nu,
                                    const CostSpec& cost) {
    if (same_field(mu, nu)) {
        std::vector<Rational> sv, tv;
        for (std::size_t i = 0; i < mu.size(); ++i) sv.push_back(mu.value_num(i));
        for (std::size_t j = 0; j < nu.size(); ++j) tv.push_back(nu.value_num(j));
        Rational best;
        bool have = false;
        std::size_t i = 0, j = 0;
        while (i < sv.size() && j < tv.size()) {
            Rational d = sv[i] - tv[j];
            Rational ad = d.abs();
            if (!have || ad < best) {
                best = ad;
                have = true;
                if (best.is_zero()) break;
            }
            if (d <= Rational(0))
                ++i;
            else
                ++j;
        }
        return displacement_cost(best, mu.sqrt_div, cost);
    }
    double best = std::numeric_limits<double>::infinity();
    std::size_t i = 0, j = 0;
    while (i < mu.size() && j < nu.size()) {
        double d = mu.value(i) - nu.value(j);
        best = std::min(best, std::abs(d));
        if (d <= 0)
            ++i;
        else
            ++j;
    }
    return Scalar::approx(std::pow(best, cost.exponent));
}

// ---------------------------------------------------------------------------
// cyclic monotonicity
// ---------------------------------------------------------------------------

namespace {

// Enumerates cycles of length 2..max_len over move indices, first index
// minimal within its rotation class. check(cycle) returns true on violation.
template <typename CheckFn>
CycleCheck enumerate_cycles(std::size_t m, unsigned max_len, unsigned long long budget,
                            CheckFn&& violated) {
    CycleCheck res;
    res.budget = budget;
    std::vector<std::size_t> cyc;

    // depth-first extension of the partial cycle cyc (cyc[0] minimal)
    auto extend = [&](auto&& self, unsigned len) -> bool {
        if (cyc.size() == len) {
            ++res.cycles_checked;
            if (violated(cyc)) {
                res.status = CycleCheck::Status::violation;
                res.cycle = cyc;
                return true;
            }
            return false;
        }
        for (std::size_t k = cyc[0] + 1; k < m; ++k) {
            if (std::find(cyc.begin() + 1, cyc.end(), k) != cyc.end()) continue;
            if (res.cycles_checked >= budget) {
                res.status = CycleCheck::Status::partial;
                return true;
            }
            cyc.push_back(k);
            if (self(self, len)) return true;
            cyc.pop_back();
        }
        return false;
    };

    for (unsigned len = 2; len <= max_len; ++len) {
        for (std::size_t first = 0; first + 1 < m; ++first) {
            cyc.assign(1, first);
            if (extend(extend, len)) return res;
        }
    }
    return res;
}

}  // namespace

CycleCheck cyclic_monotonicity_check(const TransportPlan& plan, const CostSpec& cost,
                                     unsigned max_cycle_len, unsigned long long budget) {
    if (max_cycle_len < 2)
        throw std::invalid_argument("cyclic_monotonicity_check: max_cycle_len must be >= 2");
    const std::size_t m = plan.moves.size();
    if (m < 2) return CycleCheck{};

    const LatticeMeasure& src = plan.source;
    const LatticeMeasure& tgt = plan.target;

    // Pairwise cost table c[k1][k2] = c(x of move k1, y of move k2). A common
    // positive factor (the field radical power) cancels in every cycle
    // comparison, so integer exponents can compare scaled integer powers.
    if (same_field(src, tgt) && cost.integer_exponent()) {
        BigInt scale_den = lcm(lcm(src.step.den(), src.offset.den()),
                               lcm(tgt.step.den(), tgt.offset.den()));
        Rational scaler(scale_den, BigInt(1));
        bool fits = true;
        std::vector<std::int64_t> xs(m), ys(m);
        std::int64_t max_abs = 0;
        for (std::size_t k = 0; k < m && fits; ++k) {
            Rational xv = src.value_num(plan.moves[k].from) * scaler;
            Rational yv = tgt.value_num(plan.moves[k].to) * scaler;
            if (!xv.is_integer() || !yv.is_integer() || !xv.num().fits_int64() ||
                !yv.num().fits_int64()) {
                fits = false;
                break;
            }
            xs[k] = xv.num().to_int64();
            ys[k] = yv.num().to_int64();
            max_abs = std::max({max_abs, std::abs(xs[k]), std::abs(ys[k])});
        }
        const unsigned r = cost.int_exponent();
        // displacements are < 2^(bits+1); keep cycle sums inside unsigned 128
        unsigned bits = 64u - static_cast<unsigned>(__builtin_clzll(
                                  static_cast<unsigned long long>(max_abs) | 1ull));
        if (fits && static_cast<unsigned long long>(r) * (bits + 1) + 8 <= 126) {
            std::vector<unsigned __int128> table(m * m);
            for (std::size_t k1 = 0; k1 < m; ++k1)
                for (std::size_t k2 = 0; k2 < m; ++k2) {
                    __int128 diff = static_cast<__int128>(xs[k1]) - ys[k2];
                    if (diff < 0) diff = -diff;
                    unsigned __int128 d = static_cast<unsigned __int128>(diff);
                    unsigned __int128 p = 1;
                    for (unsigned e = 0; e < r; ++e) p *= d;
                    table[k1 * m + k2] = p;
                }
            auto violated = [&](const std::vector<std::size_t>& cyc) {
                unsigned __int128 cur = 0, alt = 0;
                for (std::size_t i = 0; i < cyc.size(); ++i) {
                    cur += table[cyc[i] * m + cyc[i]];
                    alt += table[cyc[i] * m + cyc[(i + 1) % cyc.size()]];
                }
                return alt < cur;
            };
            return enumerate_cycles(m, max_cycle_len, budget, violated);
        }
        // rational fallback for oversized displacements
        std::vector<Rational> table(m * m);
        for (std::size_t k1 = 0; k1 < m; ++k1)
            for (std::size_t k2 = 0; k2 < m; ++k2)
                table[k1 * m + k2] =
                    (src.value_num(plan.moves[k1].from) - tgt.value_num(plan.moves[k2].to))
                        .abs()
                        .pow(r);
        auto violated = [&](const std::vector<std::size_t>& cyc) {
            Rational cur(0), alt(0);
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                cur += table[cyc[i] * m + cyc[i]];
                alt += table[cyc[i] * m + cyc[(i + 1) % cyc.size()]];
            }
            return alt < cur;
        };
        return enumerate_cycles(m, max_cycle_len, budget, violated);
    }

    std::vector<double> table(m * m);
    for (std::size_t k1 = 0; k1 < m; ++k1)
        for (std::size_t k2 = 0; k2 < m; ++k2) {
            double d = std::abs(src.value(plan.moves[k1].from) - tgt.value(plan.moves[k2].to));
            table[k1 * m + k2] = std::pow(d, cost.exponent);
        }
    auto violated = [&](const std::vector<std::size_t>& cyc) {
        double cur = 0, alt = 0;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            cur += table[cyc[i] * m + cyc[i]];
            alt += table[cyc[i] * m + cyc[(i + 1) % cyc.size()]];
        }
        return alt < cur - 1e-9;
    };
    return enumerate_cycles(m, max_cycle_len, budget, violated);
}

// ---------------------------------------------------------------------------
// structural gaps
// ---------------------------------------------------------------------------

namespace {

bool means_equal(const LatticeMeasure& x, const LatticeMeasure& y) {
    Rational mx = mean_num(x), my = mean_num(y);
    if (mx.sign() != my.sign()) return false;
    if (x.sqrt_div == y.sqrt_div) return mx == my;
    // values live under different radicals: compare squares
    return mx * mx * Rational(y.sqrt_div) == my * my * Rational(x.sqrt_div);
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    return Rational(BigInt::gcd(a.num() * b.den(), b.num() * a.den()), a.den() * b.den());
}

LatticeMeasure refine_to(const LatticeMeasure& m, const Rational& pitch) {
    if (m.is_singleton()) return m;
    Rational k = m.step / pitch;
    if (!k.is_integer())
        throw std::logic_error("tanaka_gap: non-integral pitch refinement");
    return refine_pitch(m, k.num().to_int64());
}

}  // namespace

Scalar tanaka_gap(const LatticeMeasure& mu, const LatticeMeasure& mu2, const LatticeMeasure& nu,
                  const LatticeMeasure& nu2, const Rational& a, const Rational& b) {
    if (!means_equal(mu, mu2) && !means_equal(nu, nu2))
        throw std::invalid_argument("tanaka_gap: needs E[X]=E[X'] or E[Y]=E[Y']");
    const CostSpec quad{2.0};
    if (a.is_zero() && b.is_zero()) return Scalar(Rational(0));
    if (b.is_zero()) {
        Scalar t = w_distance(mu, mu2, quad).cost;
        Scalar tc = w_distance(scale(mu, a), scale(mu2, a), quad).cost;
        return Scalar(a * a) * t - tc;
    }
    if (a.is_zero()) {
        Scalar t = w_distance(nu, nu2, quad).cost;
        Scalar tc = w_distance(scale(nu, b), scale(nu2, b), quad).cost;
        return Scalar(b * b) * t - tc;
    }
    if (mu.sqrt_div != mu2.sqrt_div || mu.sqrt_div != nu.sqrt_div || mu.sqrt_div != nu2.sqrt_div)
        throw std::invalid_argument("tanaka_gap: measures must share one lattice field");

    LatticeMeasure x = scale(mu, a), x2 = scale(mu2, a);
    LatticeMeasure y = scale(nu, b), y2 = scale(nu2, b);

    // common refinement pitch of the scaled (non-singleton) lattices
    Rational pitch(0);
    for (const LatticeMeasure* p : {&x, &x2, &y, &y2}) {
        if (p->is_singleton()) continue;
        pitch = pitch.is_zero() ? p->step : rational_gcd(pitch, p->step);
    }
    LatticeMeasure c1 = pitch.is_zero()
                            ? convolve(x, y)
                            : convolve(refine_to(x, pitch), refine_to(y, pitch));
    LatticeMeasure c2 = pitch.is_zero()
                            ? convolve(x2, y2)
                            : convolve(refine_to(x2, pitch), refine_to(y2, pitch));

    Scalar gap = Scalar(a * a) * w_distance(mu, mu2, quad).cost;
    gap += Scalar(b * b) * w_distance(nu, nu2, quad).cost;
    gap -= w_distance(c1, c2, quad).cost;
    return gap;
}

Scalar halving_gap(const LatticeMeasure& mu, const LatticeMeasure& nu, unsigned m) {
    if (m == 0) throw std::invalid_argument("halving_gap: m must be >= 1");
    if (!mean_num(mu).is_zero() || !mean_num(nu).is_zero())
        throw std::invalid_argument("halving_gap: vanishing barycenters required");
    const CostSpec quad{2.0};
    Scalar tm = w_distance(normalized_power(mu, m), normalized_power(nu, m), quad).cost;
    Scalar t2m = w_distance(normalized_power(mu, 2 * m), normalized_power(nu, 2 * m), quad).cost;
    return tm - t2m;
}

}  // namespace otlab
