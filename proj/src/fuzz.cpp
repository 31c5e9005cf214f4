// fuzz.cpp

#include "otlab/fuzz.hpp"

#include <algorithm>
#include <set>

namespace otlab {

namespace {

// composition of 2^exp into `parts` positive summands, dyadic by construction
std::vector<long long> dyadic_composition(FuzzRng& rng, unsigned parts, unsigned exp) {
    const long long total = 1ll << exp;
    std::set<long long> cuts;
    while (cuts.size() + 1 < parts)
        cuts.insert(1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(total - 1))));
    std::vector<long long> out;
    long long prev = 0;
    for (long long c : cuts) {
        out.push_back(c - prev);
        prev = c;
    }
    out.push_back(total - prev);
    return out;
}

}  // namespace

LatticeMeasure random_dyadic_measure(FuzzRng& rng, unsigned max_support, int point_range) {
    const unsigned size = 1 + static_cast<unsigned>(rng.below(max_support));
    std::set<std::int64_t> pts;
    while (pts.size() < size) pts.insert(rng.range(-point_range, point_range));

    unsigned exp = 4;
    while ((1u << exp) <= 2 * size) ++exp;
    std::vector<long long> parts = dyadic_composition(rng, size, exp);

    LatticeMeasure m;
    m.step = Rational(1);
    m.offset = Rational(0);
    m.sqrt_div = 1;
    m.points.assign(pts.begin(), pts.end());
    const long long den = 1ll << exp;
    for (unsigned i = 0; i < size; ++i) m.weights.emplace_back(parts[i], den);
    return m;
}

LatticeMeasure random_symmetric_measure(FuzzRng& rng, unsigned max_half_support,
                                        int point_range) {
    const unsigned half = 1 + static_cast<unsigned>(rng.below(max_half_support));
    const bool center = rng.below(2) == 0;
    std::set<std::int64_t> pos;
    while (pos.size() < half) pos.insert(rng.range(1, point_range));

    unsigned exp = 4;
    while ((1u << exp) <= 2 * (half + 1)) ++exp;
    std::vector<long long> parts = dyadic_composition(rng, half + (center ? 1 : 0), exp);
    const long long den = 1ll << (exp + 1);  // side masses split in half

    LatticeMeasure m;
    m.step = Rational(1);
    m.offset = Rational(0);
    m.sqrt_div = 1;
    std::vector<std::int64_t> ascending(pos.begin(), pos.end());
    for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) m.points.push_back(-*it);
    if (center) m.points.push_back(0);
    m.points.insert(m.points.end(), ascending.begin(), ascending.end());

    for (std::size_t i = 0; i < ascending.size(); ++i)
        m.weights.emplace_back(parts[ascending.size() - 1 - i], den);
    if (center) m.weights.emplace_back(2 * parts.back(), den);
    for (std::size_t i = 0; i < ascending.size(); ++i) m.weights.emplace_back(parts[i], den);
    return m;
}

Rational random_small_rational(FuzzRng& rng) {
    long long num = 0;
    while (num == 0) num = rng.range(-4, 4);
    return Rational(num, rng.range(1, 4));
}

}  // namespace otlab
