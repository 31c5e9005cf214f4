// measure.hpp
//
// Finitely supported probability measures on an affinely scaled integer
// lattice, with exact rational weights. The support value of entry i is
//
//     (offset + step * points[i]) / sqrt(sqrt_div)
//
// step and offset are exact rationals; sqrt_div is a squarefree positive
// integer that normalized convolution powers push the 1/sqrt(m) factor into,
// so lattice arithmetic and equality stay exact. sqrt_div == 1 means the
// support is rational.
//
// All values are immutable after construction; everything here is a pure
// function of its inputs.

#pragma once

#include <cstdint>
#include <vector>

#include "otlab/rational.hpp"
#include "otlab/scalar.hpp"

namespace otlab {

struct LatticeMeasure {
    Rational step;                     // > 0
    Rational offset;
    std::int64_t sqrt_div = 1;         // squarefree, >= 1
    std::vector<std::int64_t> points;  // strictly increasing
    std::vector<Rational> weights;     // positive, sum exactly 1

    std::size_t size() const { return points.size(); }
    bool is_singleton() const { return points.size() == 1; }
    bool rational_support() const { return sqrt_div == 1; }

    // (offset + step * points[i]); the actual value is this over sqrt(sqrt_div)
    Rational value_num(std::size_t i) const;
    double value(std::size_t i) const;

    bool operator==(const LatticeMeasure& o) const = default;

    // enforces all invariants, throws std::invalid_argument
    static LatticeMeasure make(Rational step, Rational offset, std::int64_t sqrt_div,
                               std::vector<std::int64_t> points, std::vector<Rational> weights);
};

struct MomentSummary {
    Scalar mean;             // exact iff the lattice is rational or the mean vanishes
    Rational second_moment;  // always exact
    Rational variance;       // always exact
};

// point mass at a rational value
LatticeMeasure dirac(const Rational& value);

// law of Z_1 + ... + Z_m for i.i.d. signs with P(+1) = P(-1) = 1/2;
// m == 0 gives the point mass at 0
LatticeMeasure rademacher_sum(unsigned m);

// the distribution giving probability 1/4, 1/2, 1/4 to -2, 0, 2
LatticeMeasure rho();

// law of X + Y for independent X ~ a, Y ~ b. Requires equal pitch
// (step and sqrt_div); a singleton operand acts as an exact translation.
// Throws std::invalid_argument on lattice mismatch.
LatticeMeasure convolve(const LatticeMeasure& a, const LatticeMeasure& b);

// law of (X_1 + ... + X_m) / sqrt(m); the 1/sqrt(m) goes into sqrt_div
LatticeMeasure normalized_power(const LatticeMeasure& mu, unsigned m);

// law of c * X, c != 0 (throws std::invalid_argument on c == 0)
LatticeMeasure scale(const LatticeMeasure& mu, const Rational& c);

// Same measure re-indexed on pitch step/k (points multiplied by k). This is
// a representation change, not a resampling; equality with the original
// representation no longer holds componentwise.
LatticeMeasure refine_pitch(const LatticeMeasure& mu, std::int64_t k);

// binomial row C(m, 0..m)
std::vector<BigInt> binomial_row(unsigned m);

// weight of sigma_n = mu_n * mu_n at lattice point 2k:
// C(4n-2, k+2n-1) / 2^(4n-2), zero for |k| >= 2n
Rational binomial_sigma_weight(unsigned n, long long k);

MomentSummary moments(const LatticeMeasure& mu);

// numerator of the mean: mean = mean_num(mu) / sqrt(sqrt_div).
// Vanishing barycenter is exactly mean_num(mu).is_zero().
Rational mean_num(const LatticeMeasure& mu);

// x = square * square * squarefree decomposition; returns {square_root, squarefree}
std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t x);

}  // namespace otlab
