// rational.hpp
//
// Exact rationals over BigInt. Always in lowest terms with positive
// denominator; comparisons have fast paths for equal and power-of-two
// denominators (the dyadic case dominates every hot loop here).

#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "otlab/bigint.hpp"

namespace otlab {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(long v) : num_(static_cast<long long>(v)), den_(1) {}
    Rational(int v) : num_(static_cast<long long>(v)), den_(1) {}
    Rational(long long num, long long den);
    Rational(BigInt num, BigInt den);  // throws std::domain_error on zero denominator

    static Rational from_string(std::string_view s);  // "p", "-p", or "p/q"

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }
    Rational abs() const;
    Rational reciprocal() const;  // throws std::domain_error on zero
    Rational pow(unsigned e) const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    std::strong_ordering operator<=>(const Rational& o) const;
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    double to_double() const;
    std::string to_string() const;           // "p" or "p/q"
    std::string to_decimal(int sig) const;   // fixed significant digits, for reports

private:
    BigInt num_, den_;
    void reduce();
};

}  // namespace otlab
