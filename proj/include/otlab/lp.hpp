// lp.hpp
//
// Exact transportation LP for small instances: successive shortest augmenting
// paths with node potentials, all comparisons in rational arithmetic. Serves
// as the independent optimality oracle for the 1D couplings.

#pragma once

#include <vector>

#include "otlab/transport.hpp"

namespace otlab {

// support(mu) x support(nu) must not exceed this
inline constexpr std::size_t kLpInstanceLimit = 1'000'000;

// Exact optimum of the transportation LP for the given rational cost matrix
// (cost[i][j] = cost of moving mass from mu point i to nu point j; arbitrary
// entries, negatives allowed). Throws std::invalid_argument on dimension or
// size-limit violations.
OTResult lp_oracle(const LatticeMeasure& mu, const LatticeMeasure& nu,
                   const std::vector<std::vector<Rational>>& cost);

// Rational cost matrix for c(x,y) = |x-y|^r. Sets *exact to false when the
// entries are dyadic approximations (non-integer r, or odd r on an irrational
// field); the matrix is still well-defined and the LP optimum for it exact.
std::vector<std::vector<Rational>> lp_cost_matrix(const LatticeMeasure& mu,
                                                  const LatticeMeasure& nu, const CostSpec& cost,
                                                  bool* exact);

// exact dyadic rational with the same value as d (finite d required)
Rational rational_from_double(double d);

}  // namespace otlab
