// scalar.hpp
//
// A numeric result that is exact (rational) whenever the computation allowed
// it; the double view is derived on demand. Exactness is sticky-false under
// arithmetic: combining with an inexact value yields an inexact value.

#pragma once

#include <optional>
#include <stdexcept>

#include "otlab/rational.hpp"

namespace otlab {

class Scalar {
public:
    Scalar() : exact_(Rational(0)) {}
    Scalar(const Rational& r) : exact_(r) {}
    Scalar(long long v) : exact_(Rational(v)) {}
    Scalar(int v) : exact_(Rational(v)) {}
    static Scalar approx(double v) {
        Scalar s;
        s.exact_.reset();
        s.approx_ = v;
        return s;
    }

    bool is_exact() const { return exact_.has_value(); }
    double value() const { return exact_ ? exact_->to_double() : approx_; }
    // throws std::logic_error when not exact
    const Rational& rational() const {
        if (!exact_) throw std::logic_error("Scalar: no exact value");
        return *exact_;
    }

    Scalar& operator+=(const Scalar& o) {
        if (exact_ && o.exact_) {
            *exact_ += *o.exact_;
        } else {
            double v = value() + o.value();
            exact_.reset();
            approx_ = v;
        }
        return *this;
    }
    Scalar& operator-=(const Scalar& o) { return *this += o.negated(); }
    Scalar& operator*=(const Scalar& o) {
        if (exact_ && o.exact_) {
            *exact_ *= *o.exact_;
        } else {
            double v = value() * o.value();
            exact_.reset();
            approx_ = v;
        }
        return *this;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    Scalar negated() const {
        Scalar s = *this;
        if (s.exact_)
            *s.exact_ = -*s.exact_;
        else
            s.approx_ = -s.approx_;
        return s;
    }

private:
    std::optional<Rational> exact_;
    double approx_ = 0.0;
};

}  // namespace otlab
