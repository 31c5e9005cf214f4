// gaussian.hpp
//
// Semi-analytic quadratic Wasserstein distance between a lattice measure and
// a Gaussian, via the quantile representation
//
//     T(mu, gamma) = integral_0^1 (F_mu^{-1}(u) - G^{-1}(u))^2 du
//
// evaluated in closed form on each constant-quantile interval using the
// antiderivatives  int z du = -pdf(z)  and  int z^2 du = u - z pdf(z)  with
// z = Phi^{-1}(u). Powers the monotone-trace experiments; those report, they
// never assert (the underlying monotonicity questions are open).

#pragma once

#include <optional>
#include <vector>

#include "otlab/measure.hpp"

namespace otlab {

struct GaussianSpec {
    double mean = 0.0;
    double variance = 1.0;  // > 0

    static GaussianSpec make(double mean, double variance);  // validates
    double stddev() const;
};

// Gaussian with the measure's first and second moments; throws
// std::invalid_argument for degenerate (zero-variance) measures.
GaussianSpec matched_gaussian(const LatticeMeasure& mu);

double normal_pdf(double x);
double normal_cdf(double x);
// Inverse standard-normal cdf (Wichura's AS 241 rational approximations,
// |error| well below 1e-9 across (0,1)); -inf/+inf at the endpoints.
double normal_quantile(double u);

double w2_to_gaussian(const LatticeMeasure& mu, const GaussianSpec& g);

struct TraceEntry {
    unsigned n = 0;
    double distance = 0.0;
};

struct MonotoneTrace {
    std::vector<TraceEntry> entries;
    bool nonincreasing = true;         // weak, ties within 1e-12 count as nonincreasing
    bool strictly_decreasing = true;   // plain strict comparison
    std::optional<unsigned> first_increase_at;
};

MonotoneTrace trace_verdict(std::vector<TraceEntry> entries);

// T(mu^(n), gamma) for n = 1..n_max against the fixed matched Gaussian.
// Requires a vanishing barycenter and n_max >= 2.
MonotoneTrace gaussian_monotone_trace(const LatticeMeasure& mu, unsigned n_max);

// Discrete log-concavity on the measure's minimal covering lattice
// (consecutive-point differences' gcd): w_k^2 >= w_{k-1} w_{k+1} with zeros
// filled in; a zero inside a gap between positive weights fails.
bool is_log_concave(const LatticeMeasure& nu);

// T(mu^(n), nu^(n)) for n = 1..n_max; nu must pass the log-concavity check.
MonotoneTrace logconcave_variant_trace(const LatticeMeasure& mu, const LatticeMeasure& nu,
                                       unsigned n_max);

}  // namespace otlab
