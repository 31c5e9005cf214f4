// radiation.hpp
//
// The binomial convolution families mu_n (2n-1 signs) and nu_n (2n signs),
// their self-convolutions sigma_n and tau_n = sigma_n * rho, the explicit
// "radiation" transport plan between sigma_n and tau_n (mass flows outward
// proportionally to consecutive-probability differences), the exact sandwich
// bounds on T(sigma_n, tau_n), the normalized-convolution comparison that
// breaks monotone decrease, and the p-fold generalization.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "otlab/measure.hpp"
#include "otlab/transport.hpp"

namespace otlab {

struct BinomialFamily {
    unsigned n = 0;
    LatticeMeasure mu;     // sum of 2n-1 signs
    LatticeMeasure nu;     // sum of 2n signs
    LatticeMeasure sigma;  // mu * mu  (built as the 4n-2 sign sum)
    LatticeMeasure tau;    // nu * nu  (built as the 4n sign sum)
};

// Builds the family and verifies tau_n == sigma_n * rho exactly
// (throws std::logic_error if the identity ever failed).
BinomialFamily binomial_family(unsigned n);

// weight of sigma_n at lattice point 2k, as exact rationals for k = 0..2n-1
std::vector<Rational> sigma_profile(unsigned n);

// The explicit plan from sigma_n to tau_n: mass (1/4) p_{n,k} (2k+1)/(2n+k)
// moves from 2k to 2k+2 for 1 <= k <= 2n-1, mirrored on the negative side;
// at 0, mass p_{n,0}/(8n) moves to each side; everything else stays.
TransportPlan radiation_plan(unsigned n);

struct SandwichBounds {
    unsigned n = 0;
    Rational lower;       // sum p_{n,k+1} (2k+1)/n
    Rational upper;       // sum p_{n,k} (2k+1)/n
    Rational exact_cost;  // T(sigma_n, tau_n), quadratic cost
};

// Exact bounds plus the exact cost; throws std::logic_error unless
// lower <= exact <= upper holds.
SandwichBounds sandwich(unsigned n);

// both exact sandwich sums without solving the transport problem
std::pair<Rational, Rational> sandwich_sums(unsigned n);

// support-distance lower bound between the k_odd-fold convolutions of mu_n
// and nu_n (odd vs even support parity), quadratic cost; k_odd must be odd
Scalar odd_separation(unsigned n, unsigned k_odd);

struct ViolationReport {
    unsigned n = 0;
    Rational t2_normalized;        // T(mu^(2), nu^(2)) = T(sigma, tau)/2
    Rational t3_normalized_lower;  // 1/3, from the parity separation
    Rational t3_normalized_exact;  // T(mu^(3), nu^(3)) by full solve
    bool violated = false;         // t3 exceeds t2
};

ViolationReport monotonicity_violation(unsigned n);  // n >= 2

struct SweepEntry {
    unsigned n = 0;
    Scalar cost;                    // T_r(sigma_n, tau_n)
    double sqrt_n_scaled = 0.0;     // sqrt(n) * cost
    std::optional<Rational> lower;  // quadratic cost only
    std::optional<Rational> upper;
    bool exact = false;
    std::string error;  // nonempty when this entry failed; sweep continues
};

std::vector<SweepEntry> asymptotic_sweep(const std::vector<unsigned>& n_values,
                                         const CostSpec& cost);

// Step law Z with P(Z = 1) = (p-1)/p, P(Z = 1-p) = 1/p (mean zero, Z = 1 mod p);
// mu = law of pn+1 summands, nu = law of pn summands. Convolution powers then
// separate by residue class whenever p does not divide the order.
struct PfoldFamily {
    unsigned p = 0, n = 0;
    LatticeMeasure mu;
    LatticeMeasure nu;
};

PfoldFamily pfold_family(unsigned p, unsigned n);  // p >= 2, n >= 1

inline constexpr double kCltLimit = 0.7978845608028654;  // 2/sqrt(2 pi)

}  // namespace otlab
