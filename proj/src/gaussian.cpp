// gaussian.cpp

#include "otlab/gaussian.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "otlab/transport.hpp"

namespace otlab {

GaussianSpec GaussianSpec::make(double mean, double variance) {
    if (!std::isfinite(mean) || !std::isfinite(variance) || variance <= 0.0)
        throw std::invalid_argument("GaussianSpec: variance must be positive and finite");
    return GaussianSpec{mean, variance};
}

double GaussianSpec::stddev() const { return std::sqrt(variance); }

GaussianSpec matched_gaussian(const LatticeMeasure& mu) {
    MomentSummary m = moments(mu);
    if (m.variance.sign() <= 0)
        throw std::invalid_argument("matched_gaussian: degenerate (zero-variance) measure");
    return GaussianSpec::make(m.mean.value(), m.variance.to_double());
}

double normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * std::numbers::sqrt2 / 2.0); }

double normal_quantile(double u) {
    // Wichura, Applied Statistics 37 (1988), algorithm AS 241 (PPND16)
    if (u <= 0.0) return -std::numeric_limits<double>::infinity();
    if (u >= 1.0) return std::numeric_limits<double>::infinity();

    static const double a[8] = {3.3871328727963666080e0,  1.3314166789178437745e2,
                                1.9715909503065514427e3,  1.3731693765509461125e4,
                                4.5921953931549871457e4,  6.7265770927008700853e4,
                                3.3430575583588128105e4,  2.5090809287301226727e3};
    static const double b[7] = {4.2313330701600911252e1, 6.8718700749205790830e2,
                                5.3941960214247511077e3, 2.1213794301586595867e4,
                                3.9307895800092710610e4, 2.8729085735721942674e4,
                                5.2264952788528545610e3};
    static const double c[8] = {1.42343711074968357734e0,  4.63033784615654529590e0,
                                5.76949722146069140550e0,  3.64784832476320460504e0,
                                1.27045825245236838258e0,  2.41780725177450611770e-1,
                                2.27238449892691845833e-2, 7.74545014278341407640e-4};
    static const double d[7] = {2.05319162663775882187e0,  1.67638483018380384940e0,
                                6.89767334985100004550e-1, 1.48103976427480074590e-1,
                                1.51986665636164571966e-2, 5.47593808499534494600e-4,
                                1.05075007164441684324e-9};
    static const double e[8] = {6.65790464350110377720e0,  5.46378491116411436990e0,
                                1.78482653991729133580e0,  2.96560571828504891230e-1,
                                2.65321895265761230930e-2, 1.24266094738807843860e-3,
                                2.71155556874348757815e-5, 2.01033439929228813265e-7};
    static const double f[7] = {5.99832206555887937690e-1, 1.36929880922735805310e-1,
                                1.48753612908506148525e-2, 7.86869131145613259100e-4,
                                1.84631831751005468180e-5, 1.42151175831644588870e-7,
                                2.04426310338993978564e-15};

    const double q = u - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((a[7] * r + a[6]) * r + a[5]) * r + a[4]) * r + a[3]) * r + a[2]) * r +
                 a[1]) * r + a[0]) /
               (((((((b[6] * r + b[5]) * r + b[4]) * r + b[3]) * r + b[2]) * r + b[1]) * r +
                 b[0]) * r + 1.0);
    }
    double r = q < 0.0 ? u : 1.0 - u;
    r = std::sqrt(-std::log(r));
    double z;
    if (r <= 5.0) {
        r -= 1.6;
        z = (((((((c[7] * r + c[6]) * r + c[5]) * r + c[4]) * r + c[3]) * r + c[2]) * r +
              c[1]) * r + c[0]) /
            (((((((d[6] * r + d[5]) * r + d[4]) * r + d[3]) * r + d[2]) * r + d[1]) * r +
              d[0]) * r + 1.0);
    } else {
        r -= 5.0;
        z = (((((((e[7] * r + e[6]) * r + e[5]) * r + e[4]) * r + e[3]) * r + e[2]) * r +
              e[1]) * r + e[0]) /
            (((((((f[6] * r + f[5]) * r + f[4]) * r + f[3]) * r + f[2]) * r + f[1]) * r +
              f[0]) * r + 1.0);
    }
    return q < 0.0 ? -z : z;
}

double w2_to_gaussian(const LatticeMeasure& mu, const GaussianSpec& g) {
    const double s = g.stddev();
    const double m = g.mean;

    // cumulative breakpoints, exact then rounded once
    std::vector<double> cum(mu.size());
    Rational acc(0);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        acc += mu.weights[i];
        cum[i] = acc.to_double();
    }
    cum.back() = 1.0;

    double total = 0.0;
    double a = 0.0;
    double pa = 0.0, zpa = 0.0;  // pdf and z*pdf at the left end (their u -> 0 limits)
    for (std::size_t i = 0; i < mu.size(); ++i) {
        const double b = cum[i];
        double pb = 0.0, zpb = 0.0;  // u -> 1 limits
        if (b < 1.0) {
            const double zb = normal_quantile(b);
            pb = normal_pdf(zb);
            zpb = zb * pb;
        }
        const double w = b - a;
        if (w > 0.0) {
            const double dx = mu.value(i) - m;
            const double i1 = pa - pb;                // int_a^b z du
            const double i2 = (b - zpb) - (a - zpa);  // int_a^b z^2 du
            total += dx * dx * w - 2.0 * dx * s * i1 + s * s * i2;
        }
        a = b;
        pa = pb;
        zpa = zpb;
    }
    return total;
}

MonotoneTrace trace_verdict(std::vector<TraceEntry> entries) {
    MonotoneTrace t;
    t.entries = std::move(entries);
    for (std::size_t i = 1; i < t.entries.size(); ++i) {
        const double prev = t.entries[i - 1].distance, cur = t.entries[i].distance;
        if (cur > prev + 1e-12 && t.nonincreasing) {
            t.nonincreasing = false;
            t.first_increase_at = t.entries[i].n;
        }
        if (!(cur < prev)) t.strictly_decreasing = false;
    }
    return t;
}

MonotoneTrace gaussian_monotone_trace(const LatticeMeasure& mu, unsigned n_max) {
    if (n_max < 2) throw std::invalid_argument("gaussian_monotone_trace: n_max must be >= 2");
    if (!mean_num(mu).is_zero())
        throw std::invalid_argument("gaussian_monotone_trace: vanishing barycenter required");
    GaussianSpec g = matched_gaussian(mu);
    std::vector<TraceEntry> entries;
    entries.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n)
        entries.push_back({n, w2_to_gaussian(normalized_power(mu, n), g)});
    return trace_verdict(std::move(entries));
}

bool is_log_concave(const LatticeMeasure& nu) {
    if (nu.size() <= 2) return true;  // no interior point on the covering lattice
    std::int64_t g = 0;
    for (std::size_t i = 1; i < nu.size(); ++i) {
        std::int64_t d = nu.points[i] - nu.points[i - 1];
        g = g == 0 ? d : std::gcd(g, d);
    }
    // a positive-weight pair straddling a missing lattice point fails (0*0 < w*w)
    for (std::size_t i = 1; i < nu.size(); ++i)
        if (nu.points[i] - nu.points[i - 1] != g) return false;
    for (std::size_t i = 1; i + 1 < nu.size(); ++i)
        if (nu.weights[i] * nu.weights[i] < nu.weights[i - 1] * nu.weights[i + 1]) return false;
    return true;
}

MonotoneTrace logconcave_variant_trace(const LatticeMeasure& mu, const LatticeMeasure& nu,
                                       unsigned n_max) {
    if (n_max < 2) throw std::invalid_argument("logconcave_variant_trace: n_max must be >= 2");
    if (!is_log_concave(nu))
        throw std::invalid_argument(
            "logconcave_variant_trace: comparison measure failed the log-concavity check");
    const CostSpec quad{2.0};
    std::vector<TraceEntry> entries;
    entries.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        double d =
            w_distance(normalized_power(mu, n), normalized_power(nu, n), quad).cost.value();
        entries.push_back({n, d});
    }
    return trace_verdict(std::move(entries));
}

}  // namespace otlab
