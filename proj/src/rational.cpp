// rational.cpp

#include "otlab/rational.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace otlab {

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    reduce();
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_.is_negative()) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::abs() const {
    Rational r = *this;
    if (r.num_.is_negative()) r.num_ = -r.num_;
    return r;
}

Rational Rational::reciprocal() const {
    if (num_.is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    Rational r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.is_negative()) {
        r.den_ = -r.den_;
        r.num_ = -r.num_;
    }
    return r;
}

Rational Rational::pow(unsigned e) const {
    Rational base = *this, acc = 1;
    while (e) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

Rational& Rational::operator+=(const Rational& o) {
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (num_.is_zero()) {
            den_ = BigInt(1);
        } else {
            // only a factor of the common denominator can appear
            BigInt g = BigInt::gcd(num_, den_);
            if (!g.is_one()) {
                num_ = num_ / g;
                den_ = den_ / g;
            }
        }
        return *this;
    }
    BigInt g = BigInt::gcd(den_, o.den_);
    BigInt bd = g.is_one() ? o.den_ : o.den_ / g;   // o.den / g
    BigInt ad = g.is_one() ? den_ : den_ / g;       // den / g
    num_ = num_ * bd + o.num_ * ad;
    den_ = den_ * bd;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    Rational neg = o;
    neg.num_ = -neg.num_;
    return *this += neg;
}

Rational& Rational::operator*=(const Rational& o) {
    if (num_.is_zero() || o.num_.is_zero()) return *this = Rational();
    // cross-reduce before multiplying
    BigInt g1 = BigInt::gcd(num_, o.den_);
    BigInt g2 = BigInt::gcd(o.num_, den_);
    BigInt a = g1.is_one() ? num_ : num_ / g1;
    BigInt b = g2.is_one() ? o.num_ : o.num_ / g2;
    BigInt c = g2.is_one() ? den_ : den_ / g2;
    BigInt d = g1.is_one() ? o.den_ : o.den_ / g1;
    num_ = a * b;
    den_ = c * d;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.reciprocal(); }

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    int s = num_.sign(), os = o.num_.sign();
    if (s != os) return s <=> os;
    if (den_ == o.den_) return num_ <=> o.num_;
    if (den_.is_pow2() && o.den_.is_pow2()) {
        // compare num * 2^(ob) with o.num * 2^(b): shift instead of multiply
        unsigned b = static_cast<unsigned>(den_.bit_length() - 1);
        unsigned ob = static_cast<unsigned>(o.den_.bit_length() - 1);
        if (b > ob) return num_ <=> (o.num_ << (b - ob));
        return (num_ << (ob - b)) <=> o.num_;
    }
    return num_ * o.den_ <=> o.num_ * den_;
}

double Rational::to_double() const {
    if (num_.is_zero()) return 0.0;
    std::size_t nb = num_.bit_length(), db = den_.bit_length();
    if (nb <= 1000 && db <= 1000) return num_.to_double() / den_.to_double();
    // scale so the integer quotient carries ~64 significant bits
    int shift = static_cast<int>(db) + 64 - static_cast<int>(nb);
    BigInt scaled = shift >= 0 ? (num_ << static_cast<unsigned>(shift))
                               : (num_ >> static_cast<unsigned>(-shift));
    BigInt q = scaled / den_;
    return std::ldexp(q.to_double(), -shift);
}

Rational Rational::from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(s), BigInt(1));
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::string Rational::to_decimal(int sig) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", sig, to_double());
    return buf;
}

}  // namespace otlab
