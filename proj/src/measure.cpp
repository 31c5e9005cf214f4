// measure.cpp

#include "otlab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace otlab {

Rational LatticeMeasure::value_num(std::size_t i) const {
    return offset + step * Rational(points[i]);
}

double LatticeMeasure::value(std::size_t i) const {
    return value_num(i).to_double() / std::sqrt(static_cast<double>(sqrt_div));
}

LatticeMeasure LatticeMeasure::make(Rational step, Rational offset, std::int64_t sqrt_div,
                                    std::vector<std::int64_t> points,
                                    std::vector<Rational> weights) {
    if (step.sign() <= 0) throw std::invalid_argument("LatticeMeasure: step must be positive");
    if (sqrt_div < 1) throw std::invalid_argument("LatticeMeasure: sqrt_div must be >= 1");
    if (squarefree_split(sqrt_div).first != 1)
        throw std::invalid_argument("LatticeMeasure: sqrt_div must be squarefree");
    if (points.empty()) throw std::invalid_argument("LatticeMeasure: empty support");
    if (points.size() != weights.size())
        throw std::invalid_argument("LatticeMeasure: points/weights length mismatch");
    Rational total(0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0 && points[i] <= points[i - 1])
            throw std::invalid_argument("LatticeMeasure: points must be strictly increasing");
        if (weights[i].sign() <= 0)
            throw std::invalid_argument("LatticeMeasure: weights must be positive");
        total += weights[i];
    }
    if (!(total == Rational(1)))
        throw std::invalid_argument("LatticeMeasure: weights must sum to 1 exactly");
    LatticeMeasure m;
    m.step = std::move(step);
    m.offset = std::move(offset);
    m.sqrt_div = sqrt_div;
    m.points = std::move(points);
    m.weights = std::move(weights);
    return m;
}

namespace {

// point masses normalize to step 1, points {0}, value in the offset
LatticeMeasure canonical_singleton(Rational value_num, std::int64_t sqrt_div) {
    LatticeMeasure m;
    m.step = Rational(1);
    m.sqrt_div = value_num.is_zero() ? 1 : sqrt_div;
    m.offset = std::move(value_num);
    m.points = {0};
    m.weights = {Rational(1)};
    return m;
}

}  // namespace

LatticeMeasure dirac(const Rational& value) { return canonical_singleton(value, 1); }

LatticeMeasure rademacher_sum(unsigned m) {
    if (m == 0) return dirac(Rational(0));
    std::vector<BigInt> row = binomial_row(m);
    LatticeMeasure r;
    r.step = Rational(1);
    r.offset = Rational(0);
    r.sqrt_div = 1;
    BigInt den = BigInt::pow2(m);
    r.points.reserve(m + 1);
    r.weights.reserve(m + 1);
    for (unsigned j = 0; j <= m; ++j) {
        r.points.push_back(-static_cast<std::int64_t>(m) + 2 * static_cast<std::int64_t>(j));
        r.weights.emplace_back(row[j], den);
    }
    return r;
}

LatticeMeasure rho() {
    LatticeMeasure r;
    r.step = Rational(1);
    r.offset = Rational(0);
    r.sqrt_div = 1;
    r.points = {-2, 0, 2};
    r.weights = {Rational(1, 4), Rational(1, 2), Rational(1, 4)};
    return r;
}

LatticeMeasure convolve(const LatticeMeasure& a, const LatticeMeasure& b) {
    // a singleton operand is an exact translation
    if (b.is_singleton() || a.is_singleton()) {
        if (a.is_singleton() && b.is_singleton()) {
            Rational av = a.value_num(0), bv = b.value_num(0);
            if (!av.is_zero() && !bv.is_zero() && a.sqrt_div != b.sqrt_div)
                throw std::invalid_argument("convolve: point masses on different lattice fields");
            return canonical_singleton(av + bv, av.is_zero() ? b.sqrt_div : a.sqrt_div);
        }
        const LatticeMeasure& base = b.is_singleton() ? a : b;
        const LatticeMeasure& point = b.is_singleton() ? b : a;
        Rational shift = point.value_num(0);
        if (shift.is_zero()) return base;
        if (point.sqrt_div != base.sqrt_div)
            throw std::invalid_argument("convolve: translation off the measure's lattice field");
        LatticeMeasure r = base;
        r.offset += shift;
        return r;
    }
    if (!(a.step == b.step) || a.sqrt_div != b.sqrt_div)
        throw std::invalid_argument("convolve: lattice mismatch (no implicit resampling)");

    std::map<std::int64_t, Rational> acc;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            Rational w = a.weights[i] * b.weights[j];
            auto [it, fresh] = acc.emplace(a.points[i] + b.points[j], w);
            if (!fresh) it->second += w;
        }
    LatticeMeasure r;
    r.step = a.step;
    r.offset = a.offset + b.offset;
    r.sqrt_div = a.sqrt_div;
    r.points.reserve(acc.size());
    r.weights.reserve(acc.size());
    for (auto& [p, w] : acc) {
        r.points.push_back(p);
        r.weights.push_back(std::move(w));
    }
    return r;
}

LatticeMeasure normalized_power(const LatticeMeasure& mu, unsigned m) {
    if (m == 0) throw std::invalid_argument("normalized_power: m must be >= 1");
    if (m == 1) return mu;
    if (mu.is_singleton()) {
        auto [sq, rest] = squarefree_split(mu.sqrt_div * static_cast<std::int64_t>(m));
        return canonical_singleton(mu.value_num(0) * Rational(static_cast<long long>(m), sq),
                                   rest);
    }
    LatticeMeasure acc = mu;
    for (unsigned i = 1; i < m; ++i) acc = convolve(acc, mu);
    auto [sq, rest] = squarefree_split(acc.sqrt_div * static_cast<std::int64_t>(m));
    Rational inv_sq(1, sq);
    acc.step *= inv_sq;
    acc.offset *= inv_sq;
    acc.sqrt_div = rest;
    return acc;
}

LatticeMeasure scale(const LatticeMeasure& mu, const Rational& c) {
    if (c.is_zero())
        throw std::invalid_argument("scale: degenerate scale 0 (construct a point mass instead)");
    if (mu.is_singleton()) return canonical_singleton(c * mu.value_num(0), mu.sqrt_div);
    LatticeMeasure r = mu;
    r.step *= c.abs();
    r.offset *= c;
    if (c.sign() < 0) {
        std::reverse(r.points.begin(), r.points.end());
        std::reverse(r.weights.begin(), r.weights.end());
        for (auto& p : r.points) p = -p;
    }
    return r;
}

LatticeMeasure refine_pitch(const LatticeMeasure& mu, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("refine_pitch: k must be >= 1");
    if (k == 1) return mu;
    LatticeMeasure r = mu;
    r.step /= Rational(k);
    for (auto& p : r.points) p *= k;
    return r;
}

std::vector<BigInt> binomial_row(unsigned m) {
    std::vector<BigInt> row;
    row.reserve(m + 1);
    row.emplace_back(1);
    for (unsigned j = 0; j < m; ++j) {
        BigInt next = row.back().mul_small(m - j);
        std::uint32_t rem = next.divmod_small_inplace(j + 1);
        if (rem != 0) throw std::logic_error("binomial_row: non-exact division");
        row.push_back(std::move(next));
    }
    return row;
}

Rational binomial_sigma_weight(unsigned n, long long k) {
    if (n == 0) throw std::invalid_argument("binomial_sigma_weight: n must be >= 1");
    long long absk = k < 0 ? -k : k;
    if (absk >= 2 * static_cast<long long>(n)) return Rational(0);
    std::vector<BigInt> row = binomial_row(4 * n - 2);
    return Rational(row[static_cast<std::size_t>(k + 2 * n - 1)], BigInt::pow2(4 * n - 2));
}

Rational mean_num(const LatticeMeasure& mu) {
    Rational s(0);
    for (std::size_t i = 0; i < mu.size(); ++i) s += mu.weights[i] * Rational(mu.points[i]);
    return mu.offset + mu.step * s;
}

MomentSummary moments(const LatticeMeasure& mu) {
    Rational m1 = mean_num(mu);
    Rational m2(0);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        Rational v = mu.value_num(i);
        m2 += mu.weights[i] * v * v;
    }
    Rational d(mu.sqrt_div);
    m2 /= d;  // values carry 1/sqrt(sqrt_div), squares are rational again
    MomentSummary s;
    s.second_moment = m2;
    s.variance = m2 - m1 * m1 / d;
    if (mu.sqrt_div == 1 || m1.is_zero())
        s.mean = Scalar(mu.sqrt_div == 1 ? m1 : Rational(0));
    else
        s.mean = Scalar::approx(m1.to_double() / std::sqrt(static_cast<double>(mu.sqrt_div)));
    return s;
}

std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t x) {
    if (x < 1) throw std::invalid_argument("squarefree_split: positive argument required");
    std::int64_t square_root = 1, rest = 1;
    for (std::int64_t p = 2; p * p <= x; ++p) {
        if (x % p) continue;
        int e = 0;
        while (x % p == 0) {
            x /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) square_root *= p;
        if (e & 1) rest *= p;
    }
    return {square_root, rest * x};
}

}  // namespace otlab
