// fuzz.hpp
//
// Seeded, platform-independent random generators for the fuzz suites. The
// standard distributions are implementation-defined, so draws go through
// explicit rejection sampling on the raw mt19937_64 stream; one seed gives
// one byte-identical run everywhere.

#pragma once

#include <cstdint>
#include <random>

#include "otlab/measure.hpp"

namespace otlab {

class FuzzRng {
public:
    explicit FuzzRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, n), n >= 1
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t v = eng_();
        while (v >= limit) v = eng_();
        return v % n;
    }

    std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
};

// Measure with 1..max_support distinct integer points in [-point_range,
// point_range] and random dyadic weights summing to exactly 1.
LatticeMeasure random_dyadic_measure(FuzzRng& rng, unsigned max_support, int point_range);

// Symmetric (hence exactly mean-zero) measure with dyadic weights.
LatticeMeasure random_symmetric_measure(FuzzRng& rng, unsigned max_half_support, int point_range);

// nonzero rational with small numerator/denominator
Rational random_small_rational(FuzzRng& rng);

}  // namespace otlab
