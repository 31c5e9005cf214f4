// riemann_oracle.hpp
//
// Independent quadrature oracle for the Gaussian quantile integral: a plain
// midpoint Riemann sum of (F_mu^{-1}(u) - G^{-1}(u))^2 with the panel budget
// spread over the constant-quantile intervals. Uniform panels would straddle
// the integrand's jumps at the quantile breakpoints (~1e-5 error) and the
// unbounded endpoints u -> 0, 1 (~1e-6 per end), so panels are aligned to the
// breakpoints and graded dyadically under the first and last panel. Shares
// nothing with the closed-form path it cross-checks.

#pragma once

#include <algorithm>
#include <cmath>

#include "otlab/gaussian.hpp"
#include "otlab/measure.hpp"

namespace otlab::testing {

namespace detail {

// midpoint rule for (x - G^{-1}(u))^2 on [lo, hi]
inline double midpoint_block(double x, const GaussianSpec& g, double lo, double hi,
                             long long panels) {
    const double s = std::sqrt(g.variance);
    const double h = (hi - lo) / static_cast<double>(panels);
    double acc = 0.0;
    for (long long k = 0; k < panels; ++k) {
        const double u = lo + (static_cast<double>(k) + 0.5) * h;
        const double d = x - (g.mean + s * normal_quantile(u));
        acc += d * d;
    }
    return acc * h;
}

// dyadic ladder of midpoint panels covering (0, top]; the quantile is only
// log-singular, so a few panels per halving suffice
inline double ladder_down(double x, const GaussianSpec& g, double top) {
    double acc = 0.0;
    for (int k = 0; k < 64 && top > 1e-18; ++k) {
        acc += midpoint_block(x, g, top / 2, top, 4);
        top /= 2;
    }
    return acc;
}

// stops at gap ~1e-14: below that 1 - gap collapses onto 1.0 in binary64 and
// the remaining sliver contributes O(1e-11) at most
inline double ladder_up(double x, const GaussianSpec& g, double bottom) {
    double acc = 0.0;
    double gap = 1.0 - bottom;
    for (int k = 0; k < 64 && gap > 1e-14; ++k) {
        acc += midpoint_block(x, g, 1.0 - gap, 1.0 - gap / 2, 4);
        gap /= 2;
    }
    return acc;
}

}  // namespace detail

inline double riemann_w2_to_gaussian(const LatticeMeasure& mu, const GaussianSpec& g,
                                     long long total_panels = 1'000'000) {
    double total = 0.0;
    Rational cum(0);
    double a = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        cum += mu.weights[i];
        const double b = i + 1 == mu.size() ? 1.0 : cum.to_double();
        const double width = b - a;
        if (width <= 0.0) continue;
        const long long panels = std::max<long long>(
            64, static_cast<long long>(width * static_cast<double>(total_panels)));
        const double h = width / static_cast<double>(panels);
        const double x = mu.value(i);
        double lo = a, hi = b;
        if (i == 0) {
            // replace the singular first panel by the graded ladder
            total += detail::ladder_down(x, g, a + h);
            lo = a + h;
        }
        if (i + 1 == mu.size()) {
            total += detail::ladder_up(x, g, b - h);
            hi = b - h;
        }
        if (hi > lo)
            total += detail::midpoint_block(x, g, lo, hi,
                                            std::max<long long>(1, panels - 2));
        a = b;
    }
    return total;
}

}  // namespace otlab::testing
