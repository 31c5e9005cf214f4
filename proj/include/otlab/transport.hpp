// transport.hpp
//
// Exact 1D optimal transport for costs |x - y|^r between lattice measures:
// the monotone (quantile) coupling, plan cost evaluation, cyclic-monotonicity
// certification, the support-distance lower bound, and the structural gap
// quantities (Tanaka combination, halving).
//
// Cost convention: all "distance" values are r-th-power transportation costs,
// never rooted; r = 2 is the quadratic case T.
//
// Exactness: the cost of a pair of same-field measures (equal sqrt_div d) is
// an exact rational iff r is a positive even integer, or r is a positive
// integer and d == 1. Everything else degrades to double with the exactness
// flag off.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "otlab/measure.hpp"
#include "otlab/scalar.hpp"

namespace otlab {

struct CostSpec {
    double exponent = 2.0;  // r > 0

    static CostSpec make(double r);  // throws std::invalid_argument unless r > 0
    // positive integer exponent small enough for exact power arithmetic
    bool integer_exponent() const;
    unsigned int_exponent() const;
};

struct Move {
    std::size_t from = 0;
    std::size_t to = 0;
    Rational mass;

    bool operator==(const Move&) const = default;
};

struct TransportPlan {
    LatticeMeasure source;
    LatticeMeasure target;
    std::vector<Move> moves;
};

// Checks mass positivity, index bounds, and exact row/column sums against the
// marginals. Throws std::invalid_argument naming the violated invariant.
void validate_plan(const TransportPlan& plan);

struct OTResult {
    Scalar cost;
    TransportPlan plan;
};

// true when displacements between the supports are exactly representable
inline bool same_field(const LatticeMeasure& a, const LatticeMeasure& b) {
    return a.sqrt_div == b.sqrt_div;
}

// cost of one displacement given |x - y| = abs_num / sqrt(field)
Scalar displacement_cost(const Rational& abs_num, std::int64_t field, const CostSpec& cost);

// The unique monotone (co-monotone quantile) coupling: traverse both sorted
// supports matching cumulative mass greedily. Ties advance both cursors, so
// no zero-mass move is ever emitted. Deterministic.
TransportPlan monotone_coupling(const LatticeMeasure& mu, const LatticeMeasure& nu);

Scalar transport_cost(const TransportPlan& plan, const CostSpec& cost);

// Optimal r-th-power transportation cost with an optimal plan.
// r >= 1: the monotone coupling is optimal (convex cost in 1D).
// 0 < r < 1: delegated to the LP oracle; support product must stay within
// its instance limit.
OTResult w_distance(const LatticeMeasure& mu, const LatticeMeasure& nu, const CostSpec& cost);

// min over support pairs of c(x, y); a lower bound for any plan's cost
Scalar support_distance_lower_bound(const LatticeMeasure& mu, const LatticeMeasure& nu,
                                    const CostSpec& cost);

struct CycleCheck {
    enum class Status { ok, violation, partial };
    Status status = Status::ok;
    std::vector<std::size_t> cycle;  // indices into plan.moves for a violating cycle
    unsigned long long cycles_checked = 0;
    unsigned long long budget = 0;

    bool passed() const { return status == Status::ok; }
};

// Exhaustively checks all cycles of length <= max_cycle_len among the plan's
// support pairs: sum c(x_i, y_i) <= sum c(x_i, y_{i+1}). Exact arithmetic for
// integer exponents on a common field; double with 1e-9 slack otherwise.
// Stops with Status::partial when the evaluation budget runs out. Default
// length 3: 2-cycles certify plain monotonicity, 3-cycles cover the boundary
// behavior of the radiation plan; exhaustive all-length checking is
// exponential.
CycleCheck cyclic_monotonicity_check(const TransportPlan& plan, const CostSpec& cost,
                                     unsigned max_cycle_len = 3,
                                     unsigned long long budget = 400'000'000ull);

// a^2 T(mu, mu2) + b^2 T(nu, nu2) - T(law(aX + bY), law(aX' + bY')) at r = 2,
// for independent combinations; requires equal means on at least one side.
// Nonnegative by Tanaka's theorem; this evaluates the slack.
Scalar tanaka_gap(const LatticeMeasure& mu, const LatticeMeasure& mu2, const LatticeMeasure& nu,
                  const LatticeMeasure& nu2, const Rational& a, const Rational& b);

// T(mu^(m), nu^(m)) - T(mu^(2m), nu^(2m)) at r = 2; requires vanishing
// barycenters. Nonnegative by the doubling consequence of Tanaka's theorem.
Scalar halving_gap(const LatticeMeasure& mu, const LatticeMeasure& nu, unsigned m);

}  // namespace otlab
